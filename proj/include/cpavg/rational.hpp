#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cpavg/errors.hpp"

namespace cpavg {

using BigInt = mpz_class;

// Exact rational number.  Always stored reduced with positive denominator;
// the canonical zero is 0/1.  GMP supplies the big-integer arithmetic, this
// wrapper supplies the invariants and the "p/q" text form.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_((long)n) {}
    Rational(long long n) : v_(fromLL(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { normalize(); }
    Rational(const BigInt& n, const BigInt& d) : v_(n, d) { normalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { normalize(); }

    // Parses "p", "p/q", also tolerating a leading '+'.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return v_.get_num(); }
    const BigInt& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integer power; negative exponents require a nonzero value.
    Rational pow(std::int64_t e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inv() const;

    double to_double() const { return v_.get_d(); }

    // Canonical text form "p/q" with the "/q" omitted when q == 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;

    void normalize();
    static mpq_class fromLL(long long n);
};

} // namespace cpavg
