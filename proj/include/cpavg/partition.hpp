#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpavg/rational.hpp"

namespace cpavg {

// Integer partition: weakly decreasing positive parts; the empty list is the
// empty partition.  Trailing zeros in the input are trimmed.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<std::int64_t> parts);
    explicit Partition(std::vector<std::int64_t> parts);

    static Partition parse(const std::string& text); // "5,5,3,2"; "-" = empty

    int length() const { return static_cast<int>(parts_.size()); }
    std::int64_t size() const;
    bool empty() const { return parts_.empty(); }

    // 1-based part access; zero beyond the length.
    std::int64_t part(int i) const;
    const std::vector<std::int64_t>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    // Adds k to the first n parts (pads with zeros up to length n first).
    Partition plus_rectangle(std::int64_t k, int n) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

  private:
    std::vector<std::int64_t> parts_;
};

// SO(2n) highest-weight label: a partition plus a sign that is meaningful
// only when the label has full length n (otherwise the two characters
// coincide and the sign must be +1).
struct SignedPartition {
    Partition base;
    int sign = +1;

    SignedPartition() = default;
    SignedPartition(Partition p, int s = +1) : base(std::move(p)), sign(s) {}
};

Partition part_sum(const Partition& a, const Partition& b);
Partition part_union(const Partition& a, const Partition& b);

// Row-major tables over the boxes of the diagram.
std::vector<std::vector<std::int64_t>> hook_lengths(const Partition& p);
std::vector<std::vector<std::int64_t>> contents(const Partition& p);
BigInt hook_product(const Partition& p);

// mu must be contained in lambda for a true result; the difference must
// avoid repeated columns (horizontal) resp. repeated rows (vertical).
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

// Complement of lambda inside the k x width box, read backwards:
// (k - lambda'_width, ..., k - lambda'_1).  Applying it twice with the box
// transposed returns lambda.
Partition box_complement(const Partition& lambda, std::int64_t width, int k);

int odd_row_count(const Partition& p);
// All parts even; the empty partition counts as even.
bool is_even_partition(const Partition& p);
// All parts odd; vacuously true for the empty partition.  Odd-column box
// sums nevertheless exclude the empty partition (see enumerate_in_box).
bool is_odd_partition(const Partition& p);

enum class BoxFilter {
    All,
    EvenRows,            // all parts even
    EvenColumns,         // conjugate has all parts even
    OddColumnsLiteral,   // conjugate has all parts odd; empty excluded
    OddColumnsCorrected, // as literal AND first part equals the box width
    OddRowCount,         // odd_row_count(lambda) == r
};

// Complete duplicate-free enumeration of the partitions inside the
// k x width box passing the filter, in lexicographically descending order.
std::vector<Partition> enumerate_in_box(std::int64_t width, int k, BoxFilter filter,
                                        int r = -1);

// All partitions of n (optionally with length capped), descending lex order.
std::vector<Partition> partitions_of(std::int64_t n, int max_length = -1);
// All partitions of size <= n (length capped optionally).
std::vector<Partition> partitions_up_to(std::int64_t n, int max_length = -1);

} // namespace cpavg
