#pragma once

#include "cpavg/partition.hpp"
#include "cpavg/symmetric.hpp"

namespace cpavg {

// Two-alphabet supersymmetric Schur function
//   LS_lambda(x_1..x_k; y_1..y_l) = sum c^lambda_{mu nu} s_mu(x) s_{nu'}(y),
// stored as a polynomial in k+l variables (x block first).
struct LSFunction {
    Partition shape;
    int xcount = 0;
    int ycount = 0;
    LaurentPoly value;
};

// Computed directly from the definition through the Littlewood-Richardson
// kernel.  Nonzero exactly when the shape fits the (k,l) hook, i.e.
// lambda_{k+1} <= l.
LSFunction ls(const Partition& lambda, int k, int l);

// Closed form for the rectangle shape <(l+m)^k>:
// (x_1...x_k)^m prod_{i,j} (x_i + y_j).
LaurentPoly ls_rectangle(int k, int l, std::int64_t m);

// LS_lambda(x;y) = LS_{lambda'}(y;x) after relabeling the blocks.
bool verify_interchange(const Partition& lambda, int k, int l);

// Four-alphabet Cauchy identity as a series through total degree D.
bool verify_generalized_cauchy(int m, int n, int s, int t, std::int64_t D);

// Peeling one x variable over horizontal strips (and one y variable over
// vertical strips when l >= 1).
bool verify_gen_pieri(const Partition& lambda, int k, int l);

// Block decomposition of LS over ascending-block permutations, checked at
// explicit rational points.  Requires lambda_L >= lambda_{L+1} + Q and
// length(lambda) <= L+K.
bool verify_ls_laplace(const Partition& lambda, int L, int K, int Q,
                       const std::vector<Rational>& alpha,
                       const std::vector<Rational>& gamma);

// Factorization when lambda contains the k x l rectangle:
// LS_lambda = s_nu(x) s_{eta'}(y) prod (x_i + y_j).
bool verify_berele_regev(const Partition& lambda, int k, int l);

// Coefficient identity behind the coproduct compatibility:
// sum_lam c^lam_{mu nu} c^lam_{sigma tau}
//   = sum c^sigma_{phi eta} c^tau_{psi xi} c^mu_{phi xi} c^nu_{psi eta}.
bool verify_hopf(const Partition& mu, const Partition& nu, const Partition& sigma,
                 const Partition& tau);
BigInt hopf_pairing(const Partition& mu, const Partition& nu, const Partition& sigma,
                    const Partition& tau);

// Evaluation helpers used by the box-sum verifications: x evaluated at
// rational points, y kept symbolic (truncated at total y-degree D) or also
// evaluated.  Both go through the skew route sum_mu s_mu(x) s_{lam'/mu'}(y),
// an independent path from ls() above.
LaurentPoly ls_series_at(const Partition& lambda, const std::vector<Rational>& xpts,
                         int l, std::int64_t D);
Rational ls_eval_at(const Partition& lambda, const std::vector<Rational>& xpts,
                    const std::vector<Rational>& ypts);

} // namespace cpavg
