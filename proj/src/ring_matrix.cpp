#include "cpavg/ring_matrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "cpavg/errors.hpp"

namespace cpavg {

RingMatrix::RingMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<std::size_t>(rows) * cols, LaurentPoly(nvars)) {}

RingMatrix RingMatrix::from_rationals(const std::vector<std::vector<Rational>>& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    RingMatrix m(rows, cols, 0);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(a[r].size()) != cols)
            throw VariableCountMismatch("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(r, c) = LaurentPoly::constant(0, a[r][c]);
    }
    return m;
}

Rational determinant_rational(const std::vector<std::vector<Rational>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw NonSquare("rational determinant");
    if (n == 0) return Rational(1);

    // Clear denominators row by row, then run fraction-free Bareiss on the
    // integer matrix; divide the scaling back out at the end.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    Rational scale(1);
    for (int r = 0; r < n; ++r) {
        BigInt l = 1;
        for (int c = 0; c < n; ++c) {
            BigInt g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), a[r][c].den().get_mpz_t());
            l = g;
        }
        scale *= Rational(BigInt(1), l);
        for (int c = 0; c < n; ++c) m[r][c] = a[r][c].num() * (l / a[r][c].den());
    }

    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { p = r; break; }
            if (p < 0) return Rational(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det) * scale;
}

namespace {

bool all_constant(const RingMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_constant()) return false;
    return true;
}

// Minor expansion along the topmost remaining row, memoized on the bitmask
// of still-available columns.
class MinorExpander {
  public:
    explicit MinorExpander(const RingMatrix& m) : m_(m), n_(m.rows()) {}

    LaurentPoly run() {
        if (n_ > 62) throw TooLarge("minor expansion beyond 62x62");
        return expand((n_ == 0) ? 0ULL : ((1ULL << n_) - 1));
    }

  private:
    const RingMatrix& m_;
    int n_;
    std::unordered_map<std::uint64_t, LaurentPoly> memo_;

    LaurentPoly expand(std::uint64_t colmask) {
        if (colmask == 0) return LaurentPoly::constant(m_.nvars(), Rational(1));
        auto it = memo_.find(colmask);
        if (it != memo_.end()) return it->second;
        int row = n_ - __builtin_popcountll(colmask);
        LaurentPoly acc(m_.nvars());
        int sign = 1;
        for (int c = 0; c < n_; ++c) {
            if (!(colmask & (1ULL << c))) continue;
            const LaurentPoly& e = m_.at(row, c);
            if (!e.is_zero()) {
                LaurentPoly sub = expand(colmask & ~(1ULL << c));
                LaurentPoly term = e * sub;
                if (sign < 0) term = -term;
                acc += term;
            }
            sign = -sign;
        }
        memo_.emplace(colmask, acc);
        return acc;
    }
};

int subset_sign(const std::vector<int>& subset, int L) {
    // sgn of the permutation sending positions 1..L to the subset (ascending)
    // and the rest to the complement (ascending): (-1)^{sum(subset) - L(L+1)/2}
    // with 1-based entries.
    long s = 0;
    for (int v : subset) s += v + 1;
    s -= static_cast<long>(L) * (L + 1) / 2;
    return (s % 2 == 0) ? 1 : -1;
}

} // namespace

LaurentPoly determinant(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("determinant");
    if (m.rows() == 0) return LaurentPoly::constant(m.nvars(), Rational(1));
    if (all_constant(m)) {
        std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).constant_term();
        return LaurentPoly::constant(m.nvars(), determinant_rational(a));
    }
    return MinorExpander(m).run();
}

std::vector<std::pair<LaurentPoly, LaurentPoly>>
laplace_terms(const RingMatrix& m, const std::vector<int>& rows) {
    if (m.rows() != m.cols()) throw NonSquare("laplace_terms");
    const int n = m.rows();
    const int L = static_cast<int>(rows.size());
    std::vector<int> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    if (L == 0 || L > n) throw BadRowSet("row set size");
    for (int i = 0; i < L; ++i) {
        if (sorted[i] < 0 || sorted[i] >= n) throw BadRowSet("row index out of range");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw BadRowSet("duplicate row index");
    }
    std::vector<int> other;
    for (int r = 0; r < n; ++r)
        if (!std::binary_search(sorted.begin(), sorted.end(), r)) other.push_back(r);

    // The row set itself carries a sign relative to expanding in the top rows.
    int row_sign = subset_sign(sorted, L);

    std::vector<std::pair<LaurentPoly, LaurentPoly>> out;
    std::vector<int> cols(L);
    for (int i = 0; i < L; ++i) cols[i] = i;
    while (true) {
        std::vector<int> colsc;
        for (int c = 0; c < n; ++c)
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) colsc.push_back(c);

        RingMatrix minor(L, L, m.nvars());
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) minor.at(i, j) = m.at(sorted[i], cols[j]);
        RingMatrix comp(n - L, n - L, m.nvars());
        for (int i = 0; i < n - L; ++i)
            for (int j = 0; j < n - L; ++j) comp.at(i, j) = m.at(other[i], colsc[j]);

        LaurentPoly cof = determinant(comp);
        if (row_sign * subset_sign(cols, L) < 0) cof = -cof;
        out.emplace_back(determinant(minor), std::move(cof));

        // next L-subset of {0..n-1} in lexicographic order
        int i = L - 1;
        while (i >= 0 && cols[i] == n - L + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < L; ++j) cols[j] = cols[j - 1] + 1;
    }
    return out;
}

} // namespace cpavg
