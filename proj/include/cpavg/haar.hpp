#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "cpavg/queries.hpp"

namespace cpavg {

// Class function on a group, given as a Laurent polynomial in the free
// eigenvalue variables t_1..t_d (inverses and fixed eigenvalues are handled
// by the group convention):
//   U(N), Sp(2N), SO(2N): d = N;  SO(2N+1): d = N with the +1 eigenvalue
//   implicit;  O^-(2N): d = N-1 with the fixed +1,-1 pair implicit.
// The body must be invariant under the group's Weyl symmetries; this is
// checked on construction (adjacent transpositions, plus the applicable
// inversion symmetry).
struct ClassFunction {
    GroupSpec group;
    LaurentPoly body;

    ClassFunction(GroupSpec g, LaurentPoly b);

    static int free_vars(const GroupSpec& g);
};

struct QuadratureSpec {
    int order = 40; // Gauss-Legendre points per free angle, >= 2
};

struct McResult {
    double mean = 0.0;
    double stderr_est = 0.0;
    std::uint64_t samples = 0;
};

// Algebraic Weyl-integration weight: the Haar average of a class function
// is constant_term(body * weight) / weyl_order.  Cross-validated against
// the trigonometric density by quadrature on first use per group.
LaurentPoly haar_weight(const GroupSpec& g);
BigInt weyl_order(const GroupSpec& g);

// Exact Haar average by constant-term extraction.  Supported families:
// Unitary, Symplectic, SOEven, SOOdd (O^- has no constant-term form here;
// use mc_matrix_average or the specialized ratio oracle below).
Rational ct_average(const ClassFunction& f);

// Eigenvalue-angle density of the group on [0,pi]^d ([0,2pi]^N for U(N)).
double eigen_density(const GroupSpec& g, const std::vector<double>& theta);

// Tensor-product Gauss-Legendre estimate of the Haar average.
double quad_average(const ClassFunction& f, const QuadratureSpec& spec);
double quad_average_angles(const GroupSpec& g,
                           const std::function<double(const std::vector<double>&)>& f,
                           const QuadratureSpec& spec);

// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int order, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Monte Carlo average over eigenvalue angles via rejection sampling from
// the density.  Deterministic for fixed (seed, samples); sampling is
// sharded with a fixed reduction order.
McResult mc_eigen_average(const GroupSpec& g,
                          const std::function<double(const std::vector<double>&)>& f,
                          std::uint64_t samples, std::uint64_t seed);
McResult mc_eigen_average(const ClassFunction& f, std::uint64_t samples,
                          std::uint64_t seed);

// Monte Carlo average over Haar-orthogonal matrices sampled by QR
// orthonormalization of Gaussian matrices (sign-corrected to make the
// factorization unique), optionally filtered by determinant sign
// (det_sign in {-1, 0, +1}; 0 keeps everything).  f sees the eigenvalues.
McResult mc_matrix_average(
    int dim, int det_sign,
    const std::function<double(const std::vector<std::complex<double>>&)>& f,
    std::uint64_t samples, std::uint64_t seed);

// Parameter validation shared by the closed forms and the oracles:
// nonzero, pairwise distinct numerator parameters, no x_i x_j = 1 pair, no
// x = +-1 where a term denominator vanishes (SingularParameters), and the
// |y| < 1, N >= l ratio preconditions (PreconditionViolated).
void validate_product_query(const ProductQuery& q);
void validate_ratio_query(const RatioQuery& q, bool for_truncated_oracle);

// Product integrand prod det(I +/- x g) expanded over the free eigenvalue
// variables (fixed eigenvalues substituted), as a class function.
ClassFunction product_integrand(const ProductQuery& q);

// The ratio integrand with every det(I - y g)^{-1} factor replaced by its
// y-series truncated at degree D (exact Laurent polynomial; y entered as
// rational values).  Fixed unit eigenvalues contribute exact geometric
// factors.  Intended for small N and D.
ClassFunction truncated_ratio_integrand(const RatioQuery& q, std::int64_t D);

// Exact constant-term Haar oracle for product queries.  Supports all six
// families: for O^-(2N) the fixed +1,-1 eigenvalue pair is split off and
// the remaining angles carry the Sp(2N-2)-type weight (the coset
// eigenvalue law, validated against the matrix-model sampler).
Rational ct_product_average(const ProductQuery& q);

// Exact constant-term value of the degree-D truncated ratio integrand,
// with each per-eigenvalue-pair series 1/((1-y t)(1-y/t)) truncated at
// order D in y.  For |y| <= 1/4 and D = 30 the truncation error of the
// average is below 1e-12 (geometric tail, see implementation note).
// Supports all six families.
Rational ct_ratio_average(const RatioQuery& q, std::int64_t D);

} // namespace cpavg
