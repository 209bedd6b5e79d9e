#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpavg/errors.hpp"
#include "cpavg/weyl.hpp"
#include "test_util.hpp"

using namespace cpavg;
using testutil::Rng;

namespace {
Rational ce(GroupFamily f, int n, const Partition& lam, std::vector<Rational> pts,
            int sign = +1) {
    return char_eval({GroupSpec{f, n}, SignedPartition(lam, sign), std::move(pts)});
}
} // namespace

TEST_CASE("symplectic character examples") {
    // defining representation of Sp(2): x + 1/x
    CHECK(ce(GroupFamily::Symplectic, 1, Partition{1}, {Rational(2)}) == Rational(5, 2));
    // Sp(4), (1,1) at (2,3): e_2 of {2,1/2,3,1/3} minus 1
    CHECK(ce(GroupFamily::Symplectic, 2, Partition{1, 1}, {Rational(2), Rational(3)}) ==
          Rational(28, 3));
    // empty label is the trivial character
    CHECK(ce(GroupFamily::Symplectic, 2, Partition{}, {Rational(2), Rational(3)}) ==
          Rational(1));
}

TEST_CASE("so(2) sector characters") {
    CHECK(ce(GroupFamily::SOEven, 1, Partition{3}, {Rational(5)}, +1) == Rational(125));
    CHECK(ce(GroupFamily::SOEven, 1, Partition{3}, {Rational(5)}, -1) == Rational(1, 125));
    // O(2) full-length label: chi_+ + chi_-
    CHECK(ce(GroupFamily::OFull, 1, Partition{3}, {Rational(5)}) ==
          Rational(125) + Rational(1, 125));
    CHECK(ce(GroupFamily::OFull, 1, Partition{}, {Rational(5)}) == Rational(1));
}

TEST_CASE("so odd characters") {
    // defining representation of SO(3): x + 1 + 1/x
    CHECK(ce(GroupFamily::SOOdd, 1, Partition{1}, {Rational(2)}) == Rational(7, 2));
    CHECK(ce(GroupFamily::SOOdd, 2, Partition{}, {Rational(2), Rational(3)}) == Rational(1));
}

TEST_CASE("character errors") {
    CHECK_THROWS_AS(ce(GroupFamily::Symplectic, 1, Partition{1, 1}, {Rational(2)}),
                    LabelTooLong);
    CHECK_THROWS_AS(ce(GroupFamily::Symplectic, 1, Partition{1}, {Rational(1)}),
                    SingularPoint);
    CHECK_THROWS_AS(
        ce(GroupFamily::Symplectic, 2, Partition{1}, {Rational(2), Rational(2)}),
        SingularPoint);
    CHECK_THROWS_AS(
        ce(GroupFamily::SOEven, 2, Partition{1}, {Rational(2), Rational(1, 2)}),
        SingularPoint);
}

TEST_CASE("dimension examples") {
    CHECK(char_dim(GroupSpec{GroupFamily::Symplectic, 2}, SignedPartition(Partition{1, 1})) == 5);
    CHECK(char_dim(GroupSpec{GroupFamily::Symplectic, 2}, SignedPartition(Partition{1})) == 4);
    CHECK(char_dim(GroupSpec{GroupFamily::Symplectic, 2}, SignedPartition(Partition{2})) == 10);
    CHECK(char_dim(GroupSpec{GroupFamily::SOEven, 2}, SignedPartition(Partition{1, 1}, +1)) == 3);
    CHECK(char_dim(GroupSpec{GroupFamily::SOEven, 2}, SignedPartition(Partition{2})) == 9);
    CHECK(char_dim(GroupSpec{GroupFamily::SOOdd, 1}, SignedPartition(Partition{1})) == 3);
    CHECK(char_dim(GroupSpec{GroupFamily::SOOdd, 2}, SignedPartition(Partition{1, 1})) == 10);
    // O(4) with full-length label counts both sign sectors
    CHECK(char_dim(GroupSpec{GroupFamily::OFull, 2}, SignedPartition(Partition{2, 2})) == 10);
    CHECK(hook_content_dim_so_even(Partition{2, 2}, 2) == 10);
    CHECK(char_dim(GroupSpec{GroupFamily::SOEven, 2}, SignedPartition(Partition{2, 2}, +1)) == 5);
}

TEST_CASE("sp dimension forms agree on a sweep") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& lam : enumerate_in_box(3, 3, BoxFilter::All)) {
            if (lam.length() > k) continue;
            // char_dim cross-checks Weyl vs El-Samra--King internally
            CHECK(char_dim(GroupSpec{GroupFamily::Symplectic, k}, SignedPartition(lam)) ==
                  elsamra_king_dim_sp(lam, k));
        }
}

TEST_CASE("so-even hook form counts both sectors at full length") {
    for (int k = 1; k <= 3; ++k)
        for (const auto& lam : enumerate_in_box(3, k, BoxFilter::All)) {
            BigInt weyl = char_dim(GroupSpec{GroupFamily::SOEven, k}, SignedPartition(lam));
            BigInt hook = hook_content_dim_so_even(lam, k);
            if (lam.length() == k && !lam.empty())
                CHECK(hook == 2 * weyl);
            else
                CHECK(hook == weyl);
        }
}

TEST_CASE("symplectic characters are inversion invariant") {
    Rng rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        int n = static_cast<int>(testutil::rand_int(rng, 1, 3));
        auto pts = testutil::rand_generic_points(rng, n);
        Partition lam = testutil::rand_partition(rng, 4);
        if (lam.length() > n) continue;
        auto inv = pts;
        inv[0] = inv[0].inv();
        CHECK(ce(GroupFamily::Symplectic, n, lam, pts) ==
              ce(GroupFamily::Symplectic, n, lam, inv));
    }
}

TEST_CASE("dual pair decompositions") {
    Rng rng(7);
    for (int rep = 0; rep < 4; ++rep) {
        for (int k = 1; k <= 2; ++k)
            for (int N = 1; N <= 2; ++N) {
                auto pts = testutil::rand_generic_points(rng, k + N);
                std::vector<Rational> xs(pts.begin(), pts.begin() + k);
                std::vector<Rational> ts(pts.begin() + k, pts.end());
                CHECK(verify_dual_pair(GroupFamily::Symplectic, k, N, xs, ts));
                CHECK(verify_dual_pair(GroupFamily::SOEven, k, N, xs, ts));
                CHECK(verify_dual_pair(GroupFamily::SOOdd, k, N, xs, ts));
            }
    }
}

TEST_CASE("group cauchy identities") {
    Rng rng(19);
    auto t1 = testutil::rand_generic_points(rng, 1);
    CHECK(verify_group_cauchy(GroupFamily::Symplectic, 1, 1, 6, t1));
    CHECK(verify_group_cauchy(GroupFamily::SOEven, 1, 1, 6, t1));
    CHECK(verify_group_cauchy(GroupFamily::SOOdd, 1, 1, 6, t1));
    auto t2 = testutil::rand_generic_points(rng, 2);
    CHECK(verify_group_cauchy(GroupFamily::Symplectic, 2, 2, 6, t2));
    CHECK(verify_group_cauchy(GroupFamily::SOEven, 2, 2, 6, t2));
    CHECK(verify_group_cauchy(GroupFamily::SOOdd, 2, 1, 6, t2));
    CHECK(verify_group_cauchy(GroupFamily::Symplectic, 2, 0, 6, t2));
}

TEST_CASE("branching multiplicities") {
    CHECK(branch_gl_to_sp(Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(branch_gl_to_o(Partition{3, 2}, Partition{3, 2}) == 1);
    CHECK(branch_gl_to_sp(Partition{1, 1}, Partition{}) == 1);
    CHECK(branch_gl_to_sp(Partition{2}, Partition{}) == 0);
    CHECK(branch_gl_to_o(Partition{2}, Partition{}) == 1);
    CHECK(branch_gl_to_o(Partition{1, 1}, Partition{}) == 0);
    CHECK(branch_gl_to_sp(Partition{2, 1, 1}, Partition{2}) == 1);
}

TEST_CASE("littlewood parity series") {
    CHECK(littlewood_parity_series(ParityKind::TransposeEven, 1, 6));
    CHECK(littlewood_parity_series(ParityKind::TransposeEven, 2, 6));
    CHECK(littlewood_parity_series(ParityKind::Even, 2, 6));
    CHECK(littlewood_parity_series(ParityKind::Even, 1, 6));
    CHECK(littlewood_parity_series(ParityKind::TransposeEven, 3, 5));
}

TEST_CASE("group spec parsing") {
    CHECK(GroupSpec::parse("sp", 2).matrix_size() == 4);
    CHECK(GroupSpec::parse("so-odd", 2).matrix_size() == 5);
    CHECK(GroupSpec::parse("u", 3).matrix_size() == 3);
    CHECK(GroupSpec::parse("o-minus", 2).name() == "o-minus");
    CHECK_THROWS_AS(GroupSpec::parse("su", 2), UnsupportedGroup);
    CHECK_THROWS_AS(GroupSpec::parse("sp", 0), PreconditionViolated);
}
