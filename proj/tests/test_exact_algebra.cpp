#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpavg/errors.hpp"
#include "cpavg/laurent.hpp"
#include "cpavg/ring_matrix.hpp"
#include "test_util.hpp"

using namespace cpavg;
using testutil::Rng;

namespace {

LaurentPoly X(int nvars, int i, std::int64_t p = 1) {
    return LaurentPoly::variable(nvars, i, p);
}

LaurentPoly C(int nvars, long num, long den = 1) {
    return LaurentPoly::constant(nvars, Rational(num, den));
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("7/21") == Rational(1, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), ZeroAtNegativeExponent);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("poly arithmetic examples") {
    // (x1+x2)(x1-x2) = x1^2 - x2^2
    auto lhs = (X(2, 0) + X(2, 1)) * (X(2, 0) - X(2, 1));
    CHECK(lhs == X(2, 0, 2) - X(2, 1, 2));

    // p + 0 = p
    auto p = X(2, 0, 3) + C(2, 5);
    CHECK(p + LaurentPoly(2) == p);

    // (1+x)(1-x+x^2) = 1+x^3
    auto q = (C(1, 1) + X(1, 0)) * (C(1, 1) - X(1, 0) + X(1, 0, 2));
    CHECK(q == C(1, 1) + X(1, 0, 3));

    CHECK_THROWS_AS(X(1, 0) + X(2, 0), VariableCountMismatch);
}

TEST_CASE("poly_eval examples") {
    auto p = X(1, 0) + X(1, 0, -1);
    CHECK(p.eval({Rational(2)}) == Rational(5, 2));
    CHECK(C(3, 7).eval({Rational(1), Rational(0), Rational(-4)}) == Rational(7));
    auto q = X(2, 0, 2) * X(2, 1, -1);
    CHECK(q.eval({Rational(3), Rational(2)}) == Rational(9, 2));
    CHECK_THROWS_AS(p.eval({Rational(0)}), ZeroAtNegativeExponent);
}

TEST_CASE("constant_term examples") {
    auto p = X(1, 0) + C(1, 2) + X(1, 0, -1);
    CHECK(p.constant_term() == Rational(2));
    CHECK((X(2, 0) * X(2, 1, -1)).constant_term() == Rational(0));
    auto sq = (X(1, 0) + X(1, 0, -1)).pow(2);
    CHECK(sq.constant_term() == Rational(2));
}

TEST_CASE("truncate_total_degree examples") {
    auto p = C(1, 1) + X(1, 0) + X(1, 0, 2) + X(1, 0, 3);
    CHECK(p.truncate_total_degree({0}, 1) == C(1, 1) + X(1, 0));

    // independent of the selected variables -> unchanged
    auto q = X(2, 0, 4) + C(2, 2);
    CHECK(q.truncate_total_degree({1}, 0) == q);

    auto cube = (C(1, 1) + X(1, 0)).pow(3);
    auto want = C(1, 1) + C(1, 3) * X(1, 0) + C(1, 3) * X(1, 0, 2);
    CHECK(cube.truncate_total_degree({0}, 2) == want);
}

TEST_CASE("determinant examples") {
    RingMatrix id(3, 3, 0);
    for (int i = 0; i < 3; ++i) id.at(i, i) = C(0, 1);
    CHECK(determinant(id) == C(0, 1));

    // Vandermonde with columns x_i^{n-j}
    RingMatrix v(3, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.at(i, j) = X(3, i, 2 - j);
    auto vd = (X(3, 0) - X(3, 1)) * (X(3, 0) - X(3, 2)) * (X(3, 1) - X(3, 2));
    CHECK(determinant(v) == vd);

    RingMatrix m(2, 2, 0);
    m.at(0, 0) = C(0, 1); m.at(0, 1) = C(0, 2);
    m.at(1, 0) = C(0, 3); m.at(1, 1) = C(0, 4);
    CHECK(determinant(m) == C(0, -2));

    RingMatrix bad(2, 3, 0);
    CHECK_THROWS_AS(determinant(bad), NonSquare);
}

TEST_CASE("laplace_terms examples") {
    RingMatrix m(2, 2, 0);
    m.at(0, 0) = C(0, 1); m.at(0, 1) = C(0, 2);
    m.at(1, 0) = C(0, 3); m.at(1, 1) = C(0, 4);
    auto terms = laplace_terms(m, {0});
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].first == C(0, 1));
    CHECK(terms[0].second == C(0, 4));
    CHECK(terms[1].first == C(0, 2));
    CHECK(terms[1].second == C(0, -3));

    CHECK_THROWS_AS(laplace_terms(m, {0, 0}), BadRowSet);
    CHECK_THROWS_AS(laplace_terms(m, {5}), BadRowSet);
}

TEST_CASE("laplace sum reproduces determinant") {
    Rng rng(12345);
    for (int n : {4, 5, 6}) {
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = testutil::rand_rational(rng);
        auto m = RingMatrix::from_rationals(a);
        auto det = determinant(m);
        for (int L = 1; L <= n; ++L) {
            std::vector<int> rows;
            for (int i = 0; i < L; ++i) rows.push_back(i);
            LaurentPoly sum(0);
            for (const auto& [minor, cof] : laplace_terms(m, rows)) sum += minor * cof;
            CHECK(sum == det);
        }
        // a non-leading row set as well
        if (n >= 3) {
            LaurentPoly sum(0);
            for (const auto& [minor, cof] : laplace_terms(m, {1, n - 1})) sum += minor * cof;
            CHECK(sum == det);
        }
    }
}

TEST_CASE("determinant is alternating") {
    Rng rng(777);
    for (int rep = 0; rep < 5; ++rep) {
        int n = 4;
        RingMatrix m(n, n, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = testutil::rand_poly(rng, 2, 2, 2);
        auto det = determinant(m);
        RingMatrix sw = m;
        for (int j = 0; j < n; ++j) std::swap(sw.at(1, j), sw.at(2, j));
        CHECK(determinant(sw) == -det);
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(99);
    for (int nvars : {0, 1, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            auto a = testutil::rand_poly(rng, nvars, 3, 2);
            auto b = testutil::rand_poly(rng, nvars, 3, 2);
            auto c = testutil::rand_poly(rng, nvars, 3, 2);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("eval commutes with multiplication") {
    Rng rng(4242);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = testutil::rand_poly(rng, 2, 4, 3);
        auto b = testutil::rand_poly(rng, 2, 4, 3);
        std::vector<Rational> pt{testutil::rand_nonzero_rational(rng),
                                 testutil::rand_nonzero_rational(rng)};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("canonical text form") {
    auto p = C(2, 1, 3) + Rational(2) * (X(2, 0, 2) * X(2, 1, -1));
    CHECK(p.str() == "1/3 + 2*x1^2*x2^-1");
    CHECK(LaurentPoly(2).str() == "0");
}

TEST_CASE("determinant edge cases") {
    // permutation matrix: determinant is the permutation sign
    RingMatrix p(3, 3, 0);
    p.at(0, 1) = C(0, 1);
    p.at(1, 2) = C(0, 1);
    p.at(2, 0) = C(0, 1);
    CHECK(determinant(p) == C(0, 1)); // 3-cycle, even

    RingMatrix t(2, 2, 0);
    t.at(0, 1) = C(0, 1);
    t.at(1, 0) = C(0, 1);
    CHECK(determinant(t) == C(0, -1)); // transposition, odd

    // rank-deficient matrix
    RingMatrix s(3, 3, 0);
    for (int j = 0; j < 3; ++j) {
        s.at(0, j) = C(0, j + 1);
        s.at(1, j) = C(0, 2 * (j + 1));
        s.at(2, j) = C(0, 5 - j);
    }
    CHECK(determinant(s).is_zero());

    // 0x0 determinant is 1
    RingMatrix z(0, 0, 0);
    CHECK(determinant(z) == C(0, 1));
}
