#pragma once

#include <string>

#include "cpavg/partition.hpp"
#include "cpavg/symmetric.hpp"

namespace cpavg {

enum class GroupFamily { Unitary, Symplectic, SOEven, SOOdd, OFull, OMinus };

// Compact classical group (or coset) identified by family and half-rank N.
// Matrix sizes: U(N) -> N, Sp -> 2N, SO even -> 2N, SO odd -> 2N+1,
// O and O^- -> 2N.
struct GroupSpec {
    GroupFamily family = GroupFamily::Unitary;
    int half_rank = 1;

    int matrix_size() const;
    // rank of the character label space (n in the alternant formulas)
    int rank() const;
    std::string name() const;

    static GroupSpec parse(const std::string& name, int half_rank);
};

struct CharacterQuery {
    GroupSpec group;
    SignedPartition label;
    std::vector<Rational> points; // the x_i; inverses are implied
};

// Exact irreducible character value as a ratio of alternants at generic
// rational points.  For SO(2n) the label sign selects the +/- character;
// for O(2n) with full-length label the value is the sum of the two.
// Throws SingularPoint when the denominator alternant vanishes.
Rational char_eval(const CharacterQuery& q);

// Dimension of the labelled irreducible representation.  For Sp the Weyl
// and El-Samra--King forms are computed and checked against each other.
// For O(2n) with full-length label this is dim chi_+ + dim chi_-.
BigInt char_dim(const GroupSpec& g, const SignedPartition& label);

// Hook-content style dimension form for so(2k); when the label has full
// length k this evaluates to dim chi_+ + dim chi_- (both readings are
// exercised in tests).
BigInt hook_content_dim_so_even(const Partition& lambda, int k);
BigInt elsamra_king_dim_sp(const Partition& lambda, int k);

// Character-pair decompositions of prod (x_i + x_i^{-1} - t_n - t_n^{-1})
// over the box, checked at the supplied generic points.  Supported
// families: Symplectic, SOEven, SOOdd.
bool verify_dual_pair(GroupFamily family, int k, int N,
                      const std::vector<Rational>& xs,
                      const std::vector<Rational>& ts);

// Group Cauchy identity, as a series in the y alphabet through total
// degree D, with the eigenvalue points t generic rationals.  Requires
// l <= N.  Supported families: Symplectic, SOEven, SOOdd.
bool verify_group_cauchy(GroupFamily family, int N, int l, std::int64_t D,
                         const std::vector<Rational>& ts);

// Littlewood branching multiplicities GL -> Sp and GL -> O:
// sums of c^lambda_{mu beta} over beta with even columns resp. even rows.
BigInt branch_gl_to_sp(const Partition& lambda, const Partition& mu);
BigInt branch_gl_to_o(const Partition& lambda, const Partition& mu);

enum class ParityKind { TransposeEven, Even };

// Littlewood parity series: sum over beta with even columns of s_beta(y)
// equals 1/prod_{i<j}(1-y_i y_j); the all-even variant uses i<=j.
// Checked through total degree D in l variables.
bool littlewood_parity_series(ParityKind kind, int l, std::int64_t D);

} // namespace cpavg
