#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpavg/rational.hpp"

namespace cpavg {

using ExponentVec = std::vector<std::int64_t>;

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Exponents may be negative.  Terms are kept in a map ordered
// lexicographically on the exponent vector, which doubles as the canonical
// form for equality tests and serialization.  No zero coefficient is ever
// stored.  All arithmetic is exact.
class LaurentPoly {
  public:
    using TermMap = std::map<ExponentVec, Rational>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(int nvars, const ExponentVec& e, const Rational& c);
    // x_i^power (0-based variable index)
    static LaurentPoly variable(int nvars, int i, std::int64_t power = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of the given exponent vector (0 when absent).
    Rational coeff(const ExponentVec& e) const;
    Rational constant_term() const;

    bool is_constant() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly& scale(const Rational& c);
    friend LaurentPoly operator*(const Rational& c, LaurentPoly p) { return p.scale(c); }

    LaurentPoly pow(std::uint64_t e) const;

    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact substitution.  Coordinates must be nonzero wherever the
    // polynomial carries a negative exponent.
    Rational eval(const std::vector<Rational>& point) const;

    // Drops terms whose total degree in the selected variables exceeds D.
    LaurentPoly truncate_total_degree(const std::vector<int>& vars, std::int64_t D) const;
    LaurentPoly truncate_total_degree(std::int64_t D) const;

    // Substitutes values for a subset of variables (entries with a value);
    // the result lives in the remaining variables, in their original order.
    LaurentPoly substitute(const std::vector<std::optional<Rational>>& values) const;

    // Reindexes variables: new variable index = var_map[old index], result
    // has new_nvars variables.  var_map must be injective.
    LaurentPoly map_vars(int new_nvars, const std::vector<int>& var_map) const;

    // Swaps two variables in place.
    LaurentPoly swap_vars(int i, int j) const;
    // Replaces x_i by x_i^{-1}.
    LaurentPoly invert_var(int i) const;

    std::int64_t max_total_degree() const;

    // Canonical text form: terms in exponent-lex order, e.g.
    // "2*x1^2*x3^-1 + 1/3".
    std::string str() const;

  private:
    int nvars_;
    TermMap terms_;

    void add_term(const ExponentVec& e, const Rational& c);
    void check_same_vars(const LaurentPoly& o) const;
};

} // namespace cpavg
