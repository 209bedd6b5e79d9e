#pragma once

#include <map>

#include "cpavg/laurent.hpp"
#include "cpavg/partition.hpp"

namespace cpavg {

// Integer combination of Schur functions, the result of basis
// decompositions.  No zero coefficients are stored.
class SchurExpansion {
  public:
    using TermMap = std::map<Partition, BigInt>;

    SchurExpansion() = default;

    void add(const Partition& p, const BigInt& c);
    BigInt coeff(const Partition& p) const;
    const TermMap& terms() const { return terms_; }
    bool operator==(const SchurExpansion& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    TermMap terms_;
};

// Elementary and complete homogeneous symmetric polynomials in n variables.
// e_r vanishes for r > n; e_0 = h_0 = 1.
LaurentPoly elementary(std::int64_t r, int n);
LaurentPoly complete(std::int64_t r, int n);
LaurentPoly elementary_lambda(const Partition& p, int n);
LaurentPoly complete_lambda(const Partition& p, int n);

// Schur polynomial in n variables, computed from the Jacobi-Trudi
// determinant det(h_{lambda_i - i + j}); zero when the partition is longer
// than n.
LaurentPoly schur(const Partition& lambda, int n);

// Skew Schur polynomial via det(h_{lambda_i - mu_j - i + j}); zero unless
// mu is contained in lambda.
LaurentPoly skew_schur(const Partition& lambda, const Partition& mu, int n);

// Exact evaluation of the bialternant ratio at pairwise distinct points.
Rational schur_eval_bialternant(const Partition& lambda,
                                const std::vector<Rational>& points);

// s_lambda(1^n), computed by both the Weyl dimension formula and the
// hook-content formula; the two are checked against each other.
BigInt schur_dim(const Partition& lambda, int n);

// Littlewood-Richardson expansion of s_mu * s_nu (cached, thread-safe).
SchurExpansion lr_expand(const Partition& mu, const Partition& nu);
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Pieri expansions of s_mu * h_r and s_mu * e_r.
SchurExpansion pieri_h(const Partition& mu, std::int64_t r);
SchurExpansion pieri_e(const Partition& mu, std::int64_t r);

// Expands a symmetric polynomial (no negative exponents) in the Schur basis
// by leading-monomial peeling.  Throws NotSymmetric when the input is not
// symmetric; the coefficients must come out integral.
SchurExpansion decompose_in_schur_basis(const LaurentPoly& p, int n);

bool is_symmetric(const LaurentPoly& p);

// prod_{i<=k, n<=N} (x_i - t_n) = sum over the box of signed Schur pairs.
bool verify_dual_pair_expand(int k, int N);

// Cauchy identity as a series through total degree D; dual Cauchy and the
// two-alphabet branching identity exactly.
bool verify_cauchy(int p, int q, std::int64_t D);
bool verify_dual_cauchy(int p, int q);
bool verify_branching_split(const Partition& lambda, int p, int q);

} // namespace cpavg
