#include "cpavg/weyl.hpp"

#include <algorithm>

#include "cpavg/errors.hpp"
#include "cpavg/ring_matrix.hpp"

namespace cpavg {

int GroupSpec::matrix_size() const {
    switch (family) {
        case GroupFamily::Unitary: return half_rank;
        case GroupFamily::Symplectic: return 2 * half_rank;
        case GroupFamily::SOEven: return 2 * half_rank;
        case GroupFamily::SOOdd: return 2 * half_rank + 1;
        case GroupFamily::OFull: return 2 * half_rank;
        case GroupFamily::OMinus: return 2 * half_rank;
    }
    return 0;
}

int GroupSpec::rank() const { return half_rank; }

std::string GroupSpec::name() const {
    switch (family) {
        case GroupFamily::Unitary: return "u";
        case GroupFamily::Symplectic: return "sp";
        case GroupFamily::SOEven: return "so-even";
        case GroupFamily::SOOdd: return "so-odd";
        case GroupFamily::OFull: return "o";
        case GroupFamily::OMinus: return "o-minus";
    }
    return "?";
}

GroupSpec GroupSpec::parse(const std::string& name, int half_rank) {
    if (half_rank < 1) throw PreconditionViolated("half-rank must be >= 1");
    GroupFamily f;
    if (name == "u") f = GroupFamily::Unitary;
    else if (name == "sp") f = GroupFamily::Symplectic;
    else if (name == "so-even") f = GroupFamily::SOEven;
    else if (name == "so-odd") f = GroupFamily::SOOdd;
    else if (name == "o") f = GroupFamily::OFull;
    else if (name == "o-minus") f = GroupFamily::OMinus;
    else throw UnsupportedGroup(name);
    return GroupSpec{f, half_rank};
}

namespace {

using Mat = std::vector<std::vector<Rational>>;

// det(x_j^{e_i} - x_j^{-e_i - shift}) for exponent list e and shift 0 or 1;
// sign = -1 flips the second term to "+".
Mat alternant(const std::vector<Rational>& x, const std::vector<std::int64_t>& e,
              std::int64_t shift, int minus) {
    const int n = static_cast<int>(x.size());
    Mat m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational up = x[static_cast<std::size_t>(j)].pow(e[static_cast<std::size_t>(i)]);
            Rational down = x[static_cast<std::size_t>(j)].pow(-e[static_cast<std::size_t>(i)] - shift);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                minus > 0 ? up - down : up + down;
        }
    return m;
}

std::vector<std::int64_t> label_exponents(const Partition& lam, int n, std::int64_t offset) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = lam.part(i) + n - i + offset;
    return e;
}

void check_query(const CharacterQuery& q) {
    const int n = q.group.rank();
    if (q.label.base.length() > n)
        throw LabelTooLong(q.label.base.str() + " for rank " + std::to_string(n));
    if (static_cast<int>(q.points.size()) != n)
        throw PreconditionViolated("character needs rank-many points");
    for (const auto& p : q.points)
        if (p.is_zero()) throw SingularPoint("zero eigenvalue point");
    if (q.label.sign != +1 && q.label.sign != -1)
        throw PreconditionViolated("label sign must be +1 or -1");
    if (q.label.sign == -1 && q.group.family != GroupFamily::SOEven &&
        q.group.family != GroupFamily::OMinus && q.group.family != GroupFamily::OFull)
        throw PreconditionViolated("signed labels only apply to the SO(2N) families");
}

Rational so_even_char(const Partition& lam, int sign, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    auto e = label_exponents(lam, n, 0);
    Rational dplus = determinant_rational(alternant(x, e, 0, -1));
    Rational dminus = determinant_rational(alternant(x, e, 0, +1));
    std::vector<std::int64_t> e0(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) e0[static_cast<std::size_t>(i - 1)] = n - i;
    Rational den = determinant_rational(alternant(x, e0, 0, -1));
    if (den.is_zero()) throw SingularPoint("SO(2n) denominator");
    return sign > 0 ? (dplus + dminus) / den : (dplus - dminus) / den;
}

} // namespace

Rational char_eval(const CharacterQuery& q) {
    check_query(q);
    const int n = q.group.rank();
    const Partition& lam = q.label.base;
    const auto& x = q.points;

    switch (q.group.family) {
        case GroupFamily::Unitary:
            return schur_eval_bialternant(lam, x);
        case GroupFamily::Symplectic: {
            auto e = label_exponents(lam, n, 1);
            Rational num = determinant_rational(alternant(x, e, 0, +1));
            std::vector<std::int64_t> e0(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) e0[static_cast<std::size_t>(i - 1)] = n - i + 1;
            Rational den = determinant_rational(alternant(x, e0, 0, +1));
            if (den.is_zero()) throw SingularPoint("Sp denominator");
            return num / den;
        }
        case GroupFamily::SOOdd: {
            // half-integer exponents lambda_i + n - i + 1/2 with the common
            // column factor x_j^{1/2} cancelled between numerator and
            // denominator: entries x^a - x^{-a-1}
            auto e = label_exponents(lam, n, 0);
            Rational num = determinant_rational(alternant(x, e, 1, +1));
            std::vector<std::int64_t> e0(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) e0[static_cast<std::size_t>(i - 1)] = n - i;
            Rational den = determinant_rational(alternant(x, e0, 1, +1));
            if (den.is_zero()) throw SingularPoint("SO(2n+1) denominator");
            return num / den;
        }
        case GroupFamily::SOEven:
            return so_even_char(lam, q.label.sign, x);
        case GroupFamily::OFull: {
            if (lam.length() < n) return so_even_char(lam, +1, x);
            return so_even_char(lam, +1, x) + so_even_char(lam, -1, x);
        }
        case GroupFamily::OMinus:
            return so_even_char(lam, q.label.sign, x);
    }
    throw UnsupportedGroup("char_eval");
}

BigInt elsamra_king_dim_sp(const Partition& lambda, int k) {
    if (lambda.length() > k) return 0;
    Partition conj = lambda.conjugate();
    Rational prod(1);
    auto hooks = hook_lengths(lambda);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (std::int64_t j = 1; j <= lambda.part(i); ++j) {
            std::int64_t c = i <= j ? i + j - conj.part(static_cast<int>(i)) - conj.part(static_cast<int>(j))
                                    : lambda.part(i) + lambda.part(static_cast<int>(j)) + 2 - i - j;
            prod *= Rational(static_cast<long>(2 * k + c),
                             static_cast<long>(hooks[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]));
        }
    }
    if (!prod.is_integer()) throw std::logic_error("elsamra_king_dim_sp: non-integer");
    return prod.num();
}

BigInt hook_content_dim_so_even(const Partition& lambda, int k) {
    if (lambda.length() > k) return 0;
    Partition conj = lambda.conjugate();
    Rational prod(1);
    auto hooks = hook_lengths(lambda);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (std::int64_t j = 1; j <= lambda.part(i); ++j) {
            std::int64_t c = i < j ? i + j - conj.part(static_cast<int>(i)) - conj.part(static_cast<int>(j)) - 2
                                   : lambda.part(i) + lambda.part(static_cast<int>(j)) - i - j;
            prod *= Rational(static_cast<long>(2 * k + c),
                             static_cast<long>(hooks[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]));
        }
    }
    if (!prod.is_integer()) throw std::logic_error("hook_content_dim_so_even: non-integer");
    return prod.num();
}

namespace {

BigInt weyl_dim_sp(const Partition& lam, int n) {
    if (lam.length() > n) return 0;
    Rational dim(1);
    for (int i = 1; i <= n; ++i) {
        std::int64_t mi = lam.part(i) + n - i;
        dim *= Rational(static_cast<long>(mi + 1), static_cast<long>(n - i + 1));
        for (int j = i + 1; j <= n; ++j) {
            std::int64_t mj = lam.part(j) + n - j;
            dim *= Rational(static_cast<long>(mi - mj), static_cast<long>(j - i));
            dim *= Rational(static_cast<long>(mi + mj + 2), static_cast<long>(2 * n - i - j + 2));
        }
    }
    if (!dim.is_integer()) throw std::logic_error("weyl_dim_sp: non-integer");
    return dim.num();
}

BigInt weyl_dim_so_even(const Partition& lam, int n) {
    if (lam.length() > n) return 0;
    if (n == 1) return 1;
    Rational dim(1);
    for (int i = 1; i <= n; ++i) {
        std::int64_t mi = lam.part(i) + n - i;
        for (int j = i + 1; j <= n; ++j) {
            std::int64_t mj = lam.part(j) + n - j;
            dim *= Rational(static_cast<long>(mi - mj), static_cast<long>(j - i));
            dim *= Rational(static_cast<long>(mi + mj), static_cast<long>(2 * n - i - j));
        }
    }
    if (!dim.is_integer()) throw std::logic_error("weyl_dim_so_even: non-integer");
    return dim.num();
}

BigInt weyl_dim_so_odd(const Partition& lam, int n) {
    if (lam.length() > n) return 0;
    // doubled half-integers: m_i = 2(lambda_i + n - i) + 1
    Rational dim(1);
    for (int i = 1; i <= n; ++i) {
        std::int64_t mi = 2 * (lam.part(i) + n - i) + 1;
        std::int64_t ri = 2 * (n - i) + 1;
        dim *= Rational(static_cast<long>(mi), static_cast<long>(ri));
        for (int j = i + 1; j <= n; ++j) {
            std::int64_t mj = 2 * (lam.part(j) + n - j) + 1;
            std::int64_t rj = 2 * (n - j) + 1;
            dim *= Rational(static_cast<long>(mi * mi - mj * mj),
                            static_cast<long>(ri * ri - rj * rj));
        }
    }
    if (!dim.is_integer()) throw std::logic_error("weyl_dim_so_odd: non-integer");
    return dim.num();
}

} // namespace

BigInt char_dim(const GroupSpec& g, const SignedPartition& label) {
    const int n = g.rank();
    const Partition& lam = label.base;
    switch (g.family) {
        case GroupFamily::Unitary:
            return schur_dim(lam, n);
        case GroupFamily::Symplectic: {
            BigInt w = weyl_dim_sp(lam, n);
            if (lam.length() <= n && w != elsamra_king_dim_sp(lam, n))
                throw std::logic_error("Sp dimension forms disagree for " + lam.str());
            return w;
        }
        case GroupFamily::SOEven:
        case GroupFamily::OMinus:
            return weyl_dim_so_even(lam, n);
        case GroupFamily::SOOdd:
            return weyl_dim_so_odd(lam, n);
        case GroupFamily::OFull: {
            BigInt w = weyl_dim_so_even(lam, n);
            return lam.length() == n ? 2 * w : w;
        }
    }
    throw UnsupportedGroup("char_dim");
}

bool verify_dual_pair(GroupFamily family, int k, int N,
                      const std::vector<Rational>& xs,
                      const std::vector<Rational>& ts) {
    if (k < 1 || N < 1) throw PreconditionViolated("verify_dual_pair");
    if (static_cast<int>(xs.size()) != k || static_cast<int>(ts.size()) != N)
        throw PreconditionViolated("verify_dual_pair point counts");

    Rational lhs(1);
    for (const auto& x : xs)
        for (const auto& t : ts) lhs *= x + x.inv() - t - t.inv();

    GroupFamily xg = family, tg = family;
    GroupSpec gx{xg, k}, gt{tg, N};

    Rational rhs(0);
    for (const auto& lam : enumerate_in_box(N, k, BoxFilter::All)) {
        Partition tilde = box_complement(lam, N, k);
        int sgn = (tilde.size() % 2 == 0) ? 1 : -1;
        Rational term(0);
        if (family == GroupFamily::Symplectic || family == GroupFamily::SOOdd) {
            term = char_eval({gx, SignedPartition(lam), xs}) *
                   char_eval({gt, SignedPartition(tilde), ts});
        } else if (family == GroupFamily::SOEven) {
            term = char_eval({gx, SignedPartition(lam, +1), xs}) *
                       char_eval({gt, SignedPartition(tilde, +1), ts}) +
                   char_eval({gx, SignedPartition(lam, -1), xs}) *
                       char_eval({gt, SignedPartition(tilde, -1), ts});
        } else {
            throw UnsupportedGroup("verify_dual_pair: " + gx.name());
        }
        rhs += sgn > 0 ? term : -term;
    }
    if (lhs != rhs) return false;

    if (family == GroupFamily::Symplectic) {
        // trace form: prod (x + x^{-1} + t + t^{-1}) without signs
        Rational lhs2(1);
        for (const auto& x : xs)
            for (const auto& t : ts) lhs2 *= x + x.inv() + t + t.inv();
        Rational rhs2(0);
        for (const auto& lam : enumerate_in_box(N, k, BoxFilter::All)) {
            Partition tilde = box_complement(lam, N, k);
            rhs2 += char_eval({gx, SignedPartition(lam), xs}) *
                    char_eval({gt, SignedPartition(tilde), ts});
        }
        if (lhs2 != rhs2) return false;
    }
    return true;
}

namespace {

// truncated series of 1/(1 - c * y_i y_j) style factors in l variables
LaurentPoly geometric_series(int l, int vi, int vj, const Rational& c, std::int64_t D) {
    LaurentPoly out(l);
    ExponentVec e(static_cast<std::size_t>(l), 0);
    Rational pw(1);
    for (std::int64_t m = 0; ; ++m) {
        std::int64_t deg = (vi == vj) ? 2 * m : 2 * m;
        if (deg > D) break;
        std::fill(e.begin(), e.end(), 0);
        e[static_cast<std::size_t>(vi)] += m;
        e[static_cast<std::size_t>(vj)] += m;
        out += LaurentPoly::monomial(l, e, pw);
        pw *= c;
    }
    return out;
}

LaurentPoly univariate_geometric(int l, int vi, const Rational& c, std::int64_t D) {
    LaurentPoly out(l);
    ExponentVec e(static_cast<std::size_t>(l), 0);
    Rational pw(1);
    for (std::int64_t m = 0; m <= D; ++m) {
        std::fill(e.begin(), e.end(), 0);
        e[static_cast<std::size_t>(vi)] = m;
        out += LaurentPoly::monomial(l, e, pw);
        pw *= c;
    }
    return out;
}

} // namespace

bool verify_group_cauchy(GroupFamily family, int N, int l, std::int64_t D,
                         const std::vector<Rational>& ts) {
    if (N < 1 || l < 0 || l > N) throw PreconditionViolated("verify_group_cauchy needs l <= N");
    if (static_cast<int>(ts.size()) != N)
        throw PreconditionViolated("verify_group_cauchy point count");
    if (l == 0) return true; // both sides are 1

    LaurentPoly lhs = LaurentPoly::constant(l, Rational(1));
    for (int j = 0; j < l; ++j) {
        for (const auto& t : ts) {
            lhs = (lhs * univariate_geometric(l, j, t, D)).truncate_total_degree(D);
            lhs = (lhs * univariate_geometric(l, j, t.inv(), D)).truncate_total_degree(D);
        }
        if (family == GroupFamily::SOOdd)
            lhs = (lhs * univariate_geometric(l, j, Rational(1), D)).truncate_total_degree(D);
    }

    LaurentPoly rhs(l);
    GroupSpec g{family == GroupFamily::SOEven ? GroupFamily::OFull : family, N};
    for (const auto& mu : partitions_up_to(D, l)) {
        Rational c = char_eval({g, SignedPartition(mu), ts});
        if (c.is_zero()) continue;
        LaurentPoly s = schur(mu, l);
        s.scale(c);
        rhs += s;
    }
    rhs = rhs.truncate_total_degree(D);
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) {
            if (i == j && family == GroupFamily::Symplectic) continue;
            rhs = (rhs * geometric_series(l, i, j, Rational(1), D)).truncate_total_degree(D);
        }
    return lhs == rhs;
}

BigInt branch_gl_to_sp(const Partition& lambda, const Partition& mu) {
    if (lambda.size() < mu.size() || !lambda.contains(mu)) return 0;
    BigInt total = 0;
    for (const auto& beta : partitions_of(lambda.size() - mu.size())) {
        if (!is_even_partition(beta.conjugate())) continue;
        total += lr_coefficient(lambda, mu, beta);
    }
    return total;
}

BigInt branch_gl_to_o(const Partition& lambda, const Partition& mu) {
    if (lambda.size() < mu.size() || !lambda.contains(mu)) return 0;
    BigInt total = 0;
    for (const auto& beta : partitions_of(lambda.size() - mu.size())) {
        if (!is_even_partition(beta)) continue;
        total += lr_coefficient(lambda, mu, beta);
    }
    return total;
}

bool littlewood_parity_series(ParityKind kind, int l, std::int64_t D) {
    if (l < 1 || D < 0) throw PreconditionViolated("littlewood_parity_series");
    LaurentPoly lhs(l);
    for (const auto& beta : partitions_up_to(D, l)) {
        bool keep = kind == ParityKind::TransposeEven
                        ? is_even_partition(beta.conjugate())
                        : is_even_partition(beta);
        if (keep) lhs += schur(beta, l);
    }
    lhs = lhs.truncate_total_degree(D);

    LaurentPoly rhs = LaurentPoly::constant(l, Rational(1));
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) {
            if (i == j && kind == ParityKind::TransposeEven) continue;
            rhs = (rhs * geometric_series(l, i, j, Rational(1), D)).truncate_total_degree(D);
        }
    return lhs == rhs;
}

} // namespace cpavg
