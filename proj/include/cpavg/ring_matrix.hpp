#pragma once

#include <utility>
#include <vector>

#include "cpavg/laurent.hpp"

namespace cpavg {

// Rectangular matrix with LaurentPoly entries sharing one variable count.
// A matrix over plain rationals is the 0-variable case (or any matrix whose
// entries are all constant).
class RingMatrix {
  public:
    RingMatrix(int rows, int cols, int nvars);

    static RingMatrix from_rationals(const std::vector<std::vector<Rational>>& a);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    LaurentPoly& at(int r, int c) { return entries_.at(r * cols_ + c); }
    const LaurentPoly& at(int r, int c) const { return entries_.at(r * cols_ + c); }

  private:
    int rows_, cols_, nvars_;
    std::vector<LaurentPoly> entries_;
};

// Exact determinant.  Constant matrices go through fraction-free Bareiss
// elimination on scaled integer entries; genuinely polynomial matrices use
// recursive minor expansion with memoization on column subsets (intended for
// sizes up to ~10).
LaurentPoly determinant(const RingMatrix& m);

// Fast path for matrices of plain rationals.
Rational determinant_rational(const std::vector<std::vector<Rational>>& a);

// Laplace expansion along a fixed set of rows.  Returns the C(n, L) pairs
// (minor, signed complementary cofactor), with the column subsets enumerated
// in lexicographic order, i.e. the order of the permutations with ascending
// blocks.  The sum of the products equals the determinant.
std::vector<std::pair<LaurentPoly, LaurentPoly>>
laplace_terms(const RingMatrix& m, const std::vector<int>& rows);

} // namespace cpavg
