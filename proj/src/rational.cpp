#include "cpavg/rational.hpp"

#include <ostream>

namespace cpavg {

void Rational::normalize() {
    if (v_.get_den() == 0) throw ParseError("zero denominator");
    v_.canonicalize();
}

mpq_class Rational::fromLL(long long n) {
    mpz_class z;
    if (n >= 0)
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    else {
        unsigned long long m = ~static_cast<unsigned long long>(n) + 1ULL;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        z = -z;
    }
    return mpq_class(z);
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(BigInt(n));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Rational(BigInt(n), BigInt(d));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(std::int64_t e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ZeroAtNegativeExponent("0^negative");
        return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    std::uint64_t n = e > 0 ? static_cast<std::uint64_t>(e)
                            : static_cast<std::uint64_t>(-(e + 1)) + 1;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(n));
    mpq_class r(num, den);
    r.canonicalize();
    return Rational(r);
}

Rational Rational::inv() const {
    if (is_zero()) throw ParseError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace cpavg
