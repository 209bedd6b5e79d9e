#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cpavg/errors.hpp"
#include "cpavg/haar.hpp"
#include "cpavg/symmetric.hpp"
#include "test_util.hpp"

using namespace cpavg;
using testutil::Rng;

namespace {

LaurentPoly X(int nvars, int i, std::int64_t p = 1) {
    return LaurentPoly::variable(nvars, i, p);
}

// det(I - g)^k over the free eigenvalue pairs of a non-unitary family
LaurentPoly det_one_minus_pow(const GroupSpec& g, int k) {
    const int d = ClassFunction::free_vars(g);
    LaurentPoly body = LaurentPoly::constant(d, Rational(1));
    for (int rep = 0; rep < k; ++rep) {
        for (int v = 0; v < d; ++v)
            body = body * (LaurentPoly::constant(d, Rational(1)) - X(d, v)) *
                   (LaurentPoly::constant(d, Rational(1)) - X(d, v, -1));
        if (g.family == GroupFamily::SOOdd) body.scale(Rational(0)); // (1-1) factor
    }
    return body;
}

} // namespace

TEST_CASE("ct examples") {
    // U(1): CT of t + 1/t
    ClassFunction f1(GroupSpec{GroupFamily::Unitary, 1}, X(1, 0) + X(1, 0, -1));
    CHECK(ct_average(f1) == Rational(0));

    // Sp(2): det(I - g)^2 averages to 5
    GroupSpec sp1{GroupFamily::Symplectic, 1};
    ClassFunction f2(sp1, det_one_minus_pow(sp1, 2));
    CHECK(ct_average(f2) == Rational(5));

    // constant class function
    ClassFunction f3(sp1, LaurentPoly::constant(1, Rational(7)));
    CHECK(ct_average(f3) == Rational(7));
}

TEST_CASE("schur orthogonality over U(2)") {
    GroupSpec u2{GroupFamily::Unitary, 2};
    auto parts = partitions_up_to(3);
    for (const auto& lam : parts) {
        if (lam.length() > 2) continue;
        for (const auto& mu : parts) {
            if (mu.length() > 2) continue;
            LaurentPoly body = schur(lam, 2) * schur(mu, 2).invert_var(0).invert_var(1);
            ClassFunction f(u2, body);
            CHECK(ct_average(f) == (lam == mu ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("ct errors") {
    ClassFunction f(GroupSpec{GroupFamily::OMinus, 2}, X(1, 0) + X(1, 0, -1));
    CHECK_THROWS_AS(ct_average(f), UnsupportedGroup);
    ClassFunction big(GroupSpec{GroupFamily::Unitary, 5},
                      LaurentPoly::constant(5, Rational(1)));
    CHECK_THROWS_AS(ct_average(big), TooLarge);
    CHECK_THROWS_AS(ClassFunction(GroupSpec{GroupFamily::Unitary, 2}, X(2, 0)),
                    NotSymmetric);
    CHECK_THROWS_AS(ClassFunction(GroupSpec{GroupFamily::Symplectic, 1}, X(1, 0)),
                    NotSymmetric);
}

namespace {

// s_lambda of the full eigenvalue alphabet t_1, 1/t_1, ..., t_N, 1/t_N
// (plus the fixed 1 for SO odd), as a Laurent polynomial in t_1..t_N
LaurentPoly schur_of_eigenvalues(const GroupSpec& g, const Partition& lam) {
    const int N = g.half_rank;
    int n_alpha = 2 * N + (g.family == GroupFamily::SOOdd ? 1 : 0);
    LaurentPoly s = schur(lam, n_alpha);
    LaurentPoly mapped(N);
    for (const auto& [e, c] : s.terms()) {
        ExponentVec e2(static_cast<std::size_t>(N), 0);
        for (int i = 0; i < 2 * N; ++i)
            e2[static_cast<std::size_t>(i / 2)] += (i % 2 == 0) ? e[static_cast<std::size_t>(i)]
                                                                : -e[static_cast<std::size_t>(i)];
        mapped += LaurentPoly::monomial(N, e2, c);
    }
    return mapped;
}

} // namespace

TEST_CASE("schur averages follow the parity rules") {
    for (int N = 1; N <= 2; ++N) {
        for (const auto& lam : partitions_up_to(3)) {
            // Sp(2N): 1 iff the conjugate is even
            GroupSpec sp{GroupFamily::Symplectic, N};
            Rational esp = ct_average(ClassFunction(sp, schur_of_eigenvalues(sp, lam)));
            CHECK(esp == (is_even_partition(lam.conjugate()) ? Rational(1) : Rational(0)));

            // SO(2N+1): even rule plus the determinant-twist correction
            // (the O(2N+1) representations lambda and lambda tensor det
            // restrict to the same SO representation)
            GroupSpec sod{GroupFamily::SOOdd, N};
            Rational eso = ct_average(ClassFunction(sod, schur_of_eigenvalues(sod, lam)));
            Partition fullcol{std::vector<std::int64_t>(static_cast<std::size_t>(2 * N + 1), 1)};
            BigInt expect_so = branch_gl_to_o(lam, Partition{}) + branch_gl_to_o(lam, fullcol);
            CHECK(eso == Rational(expect_so));

            // SO(2N): even rule plus the all-odd full-column correction
            GroupSpec soe{GroupFamily::SOEven, N};
            Rational esoe = ct_average(ClassFunction(soe, schur_of_eigenvalues(soe, lam)));
            bool expect = is_even_partition(lam) ||
                          (is_odd_partition(lam) && !lam.empty() && lam.length() == 2 * N);
            CHECK(esoe == (expect ? Rational(1) : Rational(0)));
        }
    }
}

namespace {

// s_lambda of the O^-(2N) coset eigenvalues: N-1 free pairs plus the fixed
// +1, -1 pair, as a Laurent polynomial in the free variables
LaurentPoly schur_of_coset_eigenvalues(int N, const Partition& lam) {
    const int n_alpha = 2 * N;
    const int d = N - 1;
    LaurentPoly s = schur(lam, n_alpha);
    LaurentPoly mapped(d);
    for (const auto& [e, c] : s.terms()) {
        ExponentVec e2(static_cast<std::size_t>(d), 0);
        Rational coef = c;
        for (int i = 0; i < 2 * d; ++i)
            e2[static_cast<std::size_t>(i / 2)] += (i % 2 == 0) ? e[static_cast<std::size_t>(i)]
                                                                : -e[static_cast<std::size_t>(i)];
        // slot 2N-2 carries the fixed +1; slot 2N-1 the fixed -1
        if (e[static_cast<std::size_t>(2 * N - 1)] % 2 != 0) coef = -coef;
        mapped += LaurentPoly::monomial(d, e2, coef);
    }
    return mapped;
}

} // namespace

TEST_CASE("full orthogonal schur averages follow the even rule") {
    // E_{O(2N)} s_lambda = 1 iff lambda is even, via the exact coset split
    // (SO part by constant term, O^- part by the coset weight)
    for (int N = 1; N <= 2; ++N) {
        for (const auto& lam : partitions_up_to(4)) {
            GroupSpec soe{GroupFamily::SOEven, N};
            Rational so = ct_average(ClassFunction(soe, schur_of_eigenvalues(soe, lam)));
            GroupSpec om{GroupFamily::OMinus, N};
            ClassFunction coset(om, schur_of_coset_eigenvalues(N, lam));
            Rational ominus = (coset.body * haar_weight(om)).constant_term() /
                              Rational(weyl_order(om));
            Rational full = (so + ominus) / Rational(2);
            bool expect = is_even_partition(lam) && lam.length() <= 2 * N;
            CHECK(full == (expect ? Rational(1) : Rational(0)));
        }
    }

    // the same rule through the matrix-model sampler on O(4)
    auto sum_and_squares = [](const std::vector<std::complex<double>>& eig) {
        std::complex<double> e1{0.0, 0.0}, p2{0.0, 0.0};
        for (const auto& t : eig) {
            e1 += t;
            p2 += t * t;
        }
        return std::make_pair(e1, p2);
    };
    auto h2 = [&](const std::vector<std::complex<double>>& eig) {
        auto [e1, p2] = sum_and_squares(eig);
        return 0.5 * (e1 * e1 + p2).real();
    };
    auto e2 = [&](const std::vector<std::complex<double>>& eig) {
        auto [e1, p2] = sum_and_squares(eig);
        return 0.5 * (e1 * e1 - p2).real();
    };
    auto r1 = mc_matrix_average(4, 0, h2, 150000, 321); // s_(2): even
    CHECK(std::abs(r1.mean - 1.0) <= 4.0 * r1.stderr_est);
    auto r2 = mc_matrix_average(4, 0, e2, 150000, 322); // s_(1,1): not even
    CHECK(std::abs(r2.mean) <= 4.0 * r2.stderr_est);
}

TEST_CASE("so-even O-characters average to their trivial component") {
    Rng rng(626262);
    for (int N = 1; N <= 2; ++N) {
        GroupSpec g{GroupFamily::SOEven, N};
        std::map<Partition, LaurentPoly> chi;
        for (const auto& lam : partitions_up_to(3, N)) {
            LaurentPoly body = schur_of_eigenvalues(g, lam);
            for (const auto& [mu, poly] : chi) {
                if (mu == lam) continue;
                BigInt mult = branch_gl_to_o(lam, mu);
                if (mult != 0) body -= Rational(mult) * LaurentPoly(poly);
            }
            chi.emplace(lam, body);
            auto pts = testutil::rand_generic_points(rng, N);
            CHECK(body.eval(pts) ==
                  char_eval({GroupSpec{GroupFamily::OFull, N}, SignedPartition(lam), pts}));
            Rational avg = ct_average(ClassFunction(g, body));
            CHECK(avg == (lam.empty() ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("irreducible characters average to zero") {
    // Build character bodies chi_lambda recursively from
    // s_lambda(eigenvalues) = sum_mu [branching multiplicity] chi_mu,
    // validate them against char_eval, then check E chi_lambda = delta.
    Rng rng(424242);
    for (auto family : {GroupFamily::Symplectic, GroupFamily::SOOdd}) {
        for (int N = 1; N <= 2; ++N) {
            GroupSpec g{family, N};
            std::map<Partition, LaurentPoly> chi;
            for (const auto& lam : partitions_up_to(3, N)) {
                LaurentPoly body = schur_of_eigenvalues(g, lam);
                for (const auto& [mu, poly] : chi) {
                    if (mu == lam) continue;
                    BigInt mult = family == GroupFamily::Symplectic ? branch_gl_to_sp(lam, mu)
                                                                    : branch_gl_to_o(lam, mu);
                    if (mult != 0) body -= Rational(mult) * LaurentPoly(poly);
                }
                chi.emplace(lam, body);

                // candidate body must agree with the alternant evaluation
                auto pts = testutil::rand_generic_points(rng, N);
                CHECK(body.eval(pts) ==
                      char_eval({g, SignedPartition(lam), pts}));

                Rational avg = ct_average(ClassFunction(g, body));
                CHECK(avg == (lam.empty() ? Rational(1) : Rational(0)));
            }
        }
    }
}

TEST_CASE("gauss legendre integrates smooth functions") {
    std::vector<double> nodes, weights;
    gauss_legendre(20, 0.0, 3.141592653589793, nodes, weights);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * std::sin(nodes[i]);
    CHECK(std::abs(s - 2.0) < 1e-12);
}

TEST_CASE("densities normalize to one") {
    QuadratureSpec spec{40};
    for (auto family : {GroupFamily::Unitary, GroupFamily::Symplectic, GroupFamily::SOEven,
                        GroupFamily::SOOdd}) {
        for (int N = 1; N <= 2; ++N) {
            GroupSpec g{family, N};
            double norm = quad_average_angles(g, [](const std::vector<double>&) { return 1.0; }, spec);
            CHECK(std::abs(norm - 1.0) < 1e-10);
        }
    }
    // O^- coset density (C-type on N-1 angles)
    GroupSpec om3{GroupFamily::OMinus, 3};
    double norm = quad_average_angles(om3, [](const std::vector<double>&) { return 1.0; }, spec);
    CHECK(std::abs(norm - 1.0) < 1e-10);
}

TEST_CASE("quadrature matches known averages") {
    QuadratureSpec spec{40};
    GroupSpec sp1{GroupFamily::Symplectic, 1};
    ClassFunction f1(sp1, det_one_minus_pow(sp1, 1));
    CHECK(std::abs(quad_average(f1, spec) - 2.0) < 1e-10);

    GroupSpec so1{GroupFamily::SOEven, 1};
    ClassFunction f2(so1, det_one_minus_pow(so1, 1));
    CHECK(std::abs(quad_average(f2, spec) - 2.0) < 1e-12);

    GroupSpec so2{GroupFamily::SOEven, 2};
    ClassFunction f3(so2, det_one_minus_pow(so2, 2));
    CHECK(std::abs(quad_average(f3, spec) - 10.0) < 1e-8);
}

TEST_CASE("ct agrees with quadrature on random class functions") {
    Rng rng(5150);
    QuadratureSpec spec{40};
    for (auto family : {GroupFamily::Unitary, GroupFamily::Symplectic, GroupFamily::SOEven,
                        GroupFamily::SOOdd}) {
        for (int rep = 0; rep < 5; ++rep) {
            int N = static_cast<int>(testutil::rand_int(rng, 1, 2));
            GroupSpec g{family, N};
            // random symmetric Laurent body built from symmetrized monomials
            LaurentPoly body(N);
            for (int t = 0; t < 3; ++t) {
                ExponentVec e(static_cast<std::size_t>(N));
                for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] = testutil::rand_int(rng, -2, 2);
                Rational c = testutil::rand_rational(rng, 4, 3);
                // symmetrize over permutations and, for the non-unitary
                // families, all sign flips of the exponents
                std::vector<ExponentVec> perms{e};
                if (N == 2) {
                    ExponentVec s = e;
                    std::swap(s[0], s[1]);
                    perms.push_back(s);
                }
                for (const auto& p : perms) {
                    int flips = family == GroupFamily::Unitary ? 1 : (1 << N);
                    for (int m = 0; m < flips; ++m) {
                        ExponentVec q = p;
                        for (int i = 0; i < N; ++i)
                            if (m & (1 << i)) q[static_cast<std::size_t>(i)] = -q[static_cast<std::size_t>(i)];
                        body += LaurentPoly::monomial(N, q, c);
                    }
                }
            }
            ClassFunction f(g, body);
            double exact = ct_average(f).to_double();
            double approx = quad_average(f, spec);
            CHECK(std::abs(exact - approx) < 1e-8 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("eigenvalue monte carlo") {
    GroupSpec sp1{GroupFamily::Symplectic, 1};
    ClassFunction f(sp1, det_one_minus_pow(sp1, 1));
    auto r = mc_eigen_average(f, 200000, 41);
    CHECK(std::abs(r.mean - 2.0) <= 4.0 * r.stderr_est);

    GroupSpec u2{GroupFamily::Unitary, 2};
    LaurentPoly body = LaurentPoly::constant(2, Rational(1));
    for (int v = 0; v < 2; ++v)
        body = body * (LaurentPoly::constant(2, Rational(1)) - X(2, v)) *
               (LaurentPoly::constant(2, Rational(1)) - X(2, v, -1));
    ClassFunction f2(u2, body);
    auto r2 = mc_eigen_average(f2, 200000, 42);
    CHECK(std::abs(r2.mean - 3.0) <= 4.0 * r2.stderr_est);

    ClassFunction c1(sp1, LaurentPoly::constant(1, Rational(1)));
    auto r3 = mc_eigen_average(c1, 1000, 7);
    CHECK(r3.mean == 1.0);
    CHECK(r3.stderr_est == 0.0);

    // determinism
    auto r4 = mc_eigen_average(f, 50000, 99);
    auto r5 = mc_eigen_average(f, 50000, 99);
    CHECK(r4.mean == r5.mean);
    CHECK(r4.stderr_est == r5.stderr_est);
}

TEST_CASE("matrix model monte carlo") {
    // O^-(2): eigenvalues are +1 and -1, so det(I - g) vanishes identically
    auto detIm = [](const std::vector<std::complex<double>>& eig) {
        std::complex<double> v{1.0, 0.0};
        for (const auto& t : eig) v *= (std::complex<double>{1.0, 0.0} - t);
        return v.real();
    };
    auto r = mc_matrix_average(2, -1, detIm, 2000, 5);
    CHECK(std::abs(r.mean) < 1e-12);
    CHECK(r.stderr_est < 1e-12);

    // O^-(2): det(I + g/2) = 1 - 1/4
    auto detPlusHalf = [](const std::vector<std::complex<double>>& eig) {
        std::complex<double> v{1.0, 0.0};
        for (const auto& t : eig) v *= (std::complex<double>{1.0, 0.0} + 0.5 * t);
        return v.real();
    };
    auto r2 = mc_matrix_average(2, -1, detPlusHalf, 20000, 11);
    CHECK(std::abs(r2.mean - 0.75) <= std::max(4.0 * r2.stderr_est, 1e-10));

    // SO(4): det(I - g)^2 averages to 10
    auto detImSq = [&](const std::vector<std::complex<double>>& eig) {
        double v = detIm(eig);
        return v * v;
    };
    auto r3 = mc_matrix_average(4, +1, detImSq, 60000, 13);
    CHECK(std::abs(r3.mean - 10.0) <= 4.0 * r3.stderr_est);
}

TEST_CASE("o-minus coset law matches the matrix model") {
    // E_{O^-(4)} det(I + x g) at x = 1/3: fixed pair gives (1-x^2), the
    // angle carries the C-type density
    ProductQuery q;
    q.group = GroupSpec{GroupFamily::OMinus, 2};
    q.x = {Rational(1, 3)};
    Rational exact = ct_product_average(q);
    auto f = [](const std::vector<std::complex<double>>& eig) {
        std::complex<double> v{1.0, 0.0};
        for (const auto& t : eig) v *= (std::complex<double>{1.0, 0.0} + t / 3.0);
        return v.real();
    };
    auto r = mc_matrix_average(4, -1, f, 200000, 17);
    CHECK(std::abs(exact.to_double() - r.mean) <= 4.0 * r.stderr_est);
}

TEST_CASE("truncated ratio integrand") {
    // U(1), one gamma and one delta: E = sum_{m<=D} (gamma delta)^m
    RatioQuery q;
    q.base.group = GroupSpec{GroupFamily::Unitary, 1};
    q.gamma = {Rational(1, 4)};
    q.delta = {Rational(1, 5)};
    ClassFunction f = truncated_ratio_integrand(q, 6);
    Rational expect(0);
    for (int m = 0; m <= 6; ++m) expect += Rational(1, 20).pow(m);
    CHECK(ct_average(f) == expect);

    // no denominators: exact product integrand
    RatioQuery q0;
    q0.base.group = GroupSpec{GroupFamily::Symplectic, 1};
    q0.base.x = {Rational(1, 2)};
    CHECK(truncated_ratio_integrand(q0, 3).body == product_integrand(q0.base).body);

    // Sp(2), l=1, y=1/5, D=10: within the geometric tail of 1
    RatioQuery q1;
    q1.base.group = GroupSpec{GroupFamily::Symplectic, 1};
    q1.y = {Rational(1, 5)};
    Rational val = ct_average(truncated_ratio_integrand(q1, 10));
    Rational tail = Rational(1, 5).pow(11) / (Rational(1) - Rational(1, 5));
    CHECK((val - Rational(1)).abs() <= tail);

    // the specialized oracle agrees exactly at N = 1 (same truncation)
    CHECK(ct_ratio_average(q1, 10) == val);
    CHECK(ct_ratio_average(q, 6) == expect);
}

TEST_CASE("ratio oracle on the fixed-eigenvalue coset") {
    // O^-(2): no free angles; det(I + x g)/det(I - y g) = (1-x^2)/(1-y^2)
    RatioQuery q;
    q.base.group = GroupSpec{GroupFamily::OMinus, 1};
    q.base.x = {Rational(1, 2)};
    q.y = {Rational(1, 4)};
    CHECK(ct_ratio_average(q, 30) == (Rational(1) - Rational(1, 4)) /
                                         (Rational(1) - Rational(1, 16)));
}
