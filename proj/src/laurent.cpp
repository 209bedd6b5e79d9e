#include "cpavg/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cpavg/errors.hpp"

namespace cpavg {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(ExponentVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExponentVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw VariableCountMismatch("monomial exponent length");
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, std::int64_t power) {
    ExponentVec e(nvars, 0);
    e.at(i) = power;
    return monomial(nvars, e, Rational(1));
}

Rational LaurentPoly::coeff(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coeff(ExponentVec(nvars_, 0)); }

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           terms_.begin()->first == ExponentVec(nvars_, 0);
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw VariableCountMismatch(std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

void LaurentPoly::add_term(const ExponentVec& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    LaurentPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    // Iterate over the smaller operand on the outside.
    const LaurentPoly& s = a.term_count() <= b.term_count() ? a : b;
    const LaurentPoly& t = a.term_count() <= b.term_count() ? b : a;
    ExponentVec e(a.nvars_);
    for (const auto& [es, cs] : s.terms_) {
        for (const auto& [et, ct] : t.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = es[i] + et[i];
            r.add_term(e, cs * ct);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
    LaurentPoly r = constant(nvars_, Rational(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Rational LaurentPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw VariableCountMismatch("evaluation point length");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (point[i].is_zero()) {
                if (e[i] < 0)
                    throw ZeroAtNegativeExponent("variable " + std::to_string(i + 1));
                term = Rational(0);
                break;
            }
            term *= point[i].pow(e[i]);
        }
        total += term;
    }
    return total;
}

LaurentPoly LaurentPoly::truncate_total_degree(const std::vector<int>& vars,
                                               std::int64_t D) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (int v : vars) d += e.at(v);
        if (d <= D) r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::truncate_total_degree(std::int64_t D) const {
    std::vector<int> vars(nvars_);
    std::iota(vars.begin(), vars.end(), 0);
    return truncate_total_degree(vars, D);
}

LaurentPoly LaurentPoly::substitute(const std::vector<std::optional<Rational>>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw VariableCountMismatch("substitution length");
    std::vector<int> kept;
    for (int i = 0; i < nvars_; ++i)
        if (!values[i].has_value()) kept.push_back(i);
    LaurentPoly r(static_cast<int>(kept.size()));
    ExponentVec e2(kept.size());
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        bool vanished = false;
        for (int i = 0; i < nvars_ && !vanished; ++i) {
            if (!values[i].has_value() || e[i] == 0) continue;
            const Rational& v = *values[i];
            if (v.is_zero()) {
                if (e[i] < 0)
                    throw ZeroAtNegativeExponent("variable " + std::to_string(i + 1));
                vanished = true;
            } else {
                coeff *= v.pow(e[i]);
            }
        }
        if (vanished) continue;
        for (std::size_t j = 0; j < kept.size(); ++j) e2[j] = e[kept[j]];
        r.add_term(e2, coeff);
    }
    return r;
}

LaurentPoly LaurentPoly::map_vars(int new_nvars, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != nvars_)
        throw VariableCountMismatch("var_map length");
    LaurentPoly r(new_nvars);
    ExponentVec e2(new_nvars, 0);
    for (const auto& [e, c] : terms_) {
        std::fill(e2.begin(), e2.end(), 0);
        for (int i = 0; i < nvars_; ++i) e2.at(var_map[i]) = e[i];
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly LaurentPoly::swap_vars(int i, int j) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVec e2 = e;
        std::swap(e2.at(i), e2.at(j));
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly LaurentPoly::invert_var(int i) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVec e2 = e;
        e2.at(i) = -e2.at(i);
        r.add_term(e2, c);
    }
    return r;
}

std::int64_t LaurentPoly::max_total_degree() const {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = std::accumulate(e.begin(), e.end(), std::int64_t{0});
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace cpavg
