#pragma once

#include <optional>

#include "cpavg/queries.hpp"
#include "cpavg/report.hpp"

namespace cpavg {

// Closed-form Haar average of a product of characteristic polynomials:
// the permutation/sign-vector sum, together with the rectangular-character
// form; the two are computed independently and must agree.
// Throws SingularParameters on parameter collisions (term poles) and
// PreconditionViolated on malformed queries.
AverageResult product_average(const ProductQuery& q);

// Closed-form average of a ratio; with no denominator parameters this
// reduces exactly to product_average.
AverageResult ratio_average(const RatioQuery& q);

// E det(I - g)^k as an exact rational:
//   U(N): Keating-Snaith factorial product (= s_{<N^k>}(1^{2k}));
//   Sp(2N): factorial form = duplication-rewritten Gamma form = dimension;
//   SO(2N): Gamma form via exact half-integer ratios (= hook form);
//   O(2N): half of the SO(2N) moment (det(I - g) vanishes on O^-);
//   SO(2N+1), O^-(2N): identically zero for k >= 1 (unit eigenvalue).
AverageResult moment(const GroupSpec& g, int k);

// Sum of s_lambda(x_1..x_k) over the filtered partitions in the k x width
// box, optionally weighted by u^{odd_row_count(lambda)}.
LaurentPoly schur_box_sum(std::int64_t width, int k, BoxFilter filter,
                          const std::optional<Rational>& u = std::nullopt, int r = -1);

// Runs the rectangular-character identity suite (box sums, r-graded and
// u-weighted sums, their two-alphabet generalizations, and the literal vs
// corrected odd-column condition) at seeded generic rational points for
// all k <= kmax, N <= Nmax.  The literal odd-column identity is reported
// as "expected-fail" where it fails; everything else must pass.
Report verify_rectangular_identities(int kmax, int Nmax, std::uint64_t seed,
                                     int lmax = 2, std::int64_t series_degree = 6);

} // namespace cpavg
