#include "cpavg/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cpavg/errors.hpp"

namespace cpavg {

namespace {
void validate(std::vector<std::int64_t>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw ParseError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("partition parts must be weakly decreasing");
    }
}
} // namespace

Partition::Partition(std::initializer_list<std::int64_t> parts)
    : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    validate(parts_);
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition();
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw ParseError("bad partition literal '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

std::int64_t Partition::size() const {
    std::int64_t s = 0;
    for (auto p : parts_) s += p;
    return s;
}

std::int64_t Partition::part(int i) const {
    if (i < 1) throw ParseError("partition parts are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<std::int64_t> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (auto p : parts_)
        for (std::int64_t j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

Partition Partition::plus_rectangle(std::int64_t k, int n) const {
    if (length() > n) throw DoesNotFitBox("length exceeds rectangle height");
    std::vector<std::int64_t> out(n, k);
    for (int i = 0; i < length(); ++i) out[i] += parts_[i];
    return Partition(std::move(out));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition part_sum(const Partition& a, const Partition& b) {
    int n = std::max(a.length(), b.length());
    std::vector<std::int64_t> out(n);
    for (int i = 1; i <= n; ++i) out[i - 1] = a.part(i) + b.part(i);
    return Partition(std::move(out));
}

Partition part_union(const Partition& a, const Partition& b) {
    std::vector<std::int64_t> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return Partition(std::move(out));
}

std::vector<std::vector<std::int64_t>> hook_lengths(const Partition& p) {
    Partition conj = p.conjugate();
    std::vector<std::vector<std::int64_t>> out(p.length());
    for (int i = 1; i <= p.length(); ++i) {
        out[i - 1].resize(static_cast<std::size_t>(p.part(i)));
        for (std::int64_t j = 1; j <= p.part(i); ++j)
            out[i - 1][j - 1] = p.part(i) + conj.part(static_cast<int>(j)) - i - j + 1;
    }
    return out;
}

std::vector<std::vector<std::int64_t>> contents(const Partition& p) {
    std::vector<std::vector<std::int64_t>> out(p.length());
    for (int i = 1; i <= p.length(); ++i) {
        out[i - 1].resize(static_cast<std::size_t>(p.part(i)));
        for (std::int64_t j = 1; j <= p.part(i); ++j) out[i - 1][j - 1] = j - i;
    }
    return out;
}

BigInt hook_product(const Partition& p) {
    BigInt prod = 1;
    for (const auto& row : hook_lengths(p))
        for (auto h : row) prod *= h;
    return prod;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    // No two difference boxes in one column: lambda'_j - mu'_j <= 1, i.e.
    // interlacing lambda_i >= mu_i >= lambda_{i+1}.
    for (int i = 1; i <= lambda.length(); ++i)
        if (mu.part(i) < lambda.part(i + 1)) return false;
    return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) - mu.part(i) > 1) return false;
    return true;
}

Partition box_complement(const Partition& lambda, std::int64_t width, int k) {
    if (lambda.length() > k || lambda.part(1) > width)
        throw DoesNotFitBox(lambda.str() + " in " + std::to_string(k) + "x" +
                            std::to_string(width));
    Partition conj = lambda.conjugate();
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(width));
    for (std::int64_t j = width; j >= 1; --j)
        out.push_back(k - conj.part(static_cast<int>(j)));
    return Partition(std::move(out));
}

int odd_row_count(const Partition& p) {
    int r = 0;
    for (auto v : p.parts())
        if (v % 2 != 0) ++r;
    return r;
}

bool is_even_partition(const Partition& p) {
    for (auto v : p.parts())
        if (v % 2 != 0) return false;
    return true;
}

bool is_odd_partition(const Partition& p) {
    for (auto v : p.parts())
        if (v % 2 == 0) return false;
    return true;
}

namespace {
bool passes(const Partition& p, std::int64_t width, BoxFilter filter, int r) {
    switch (filter) {
        case BoxFilter::All: return true;
        case BoxFilter::EvenRows: return is_even_partition(p);
        case BoxFilter::EvenColumns: return is_even_partition(p.conjugate());
        case BoxFilter::OddColumnsLiteral:
            return !p.empty() && is_odd_partition(p.conjugate());
        case BoxFilter::OddColumnsCorrected:
            return !p.empty() && is_odd_partition(p.conjugate()) && p.part(1) == width;
        case BoxFilter::OddRowCount: return odd_row_count(p) == r;
    }
    return false;
}
} // namespace

std::vector<Partition> enumerate_in_box(std::int64_t width, int k, BoxFilter filter,
                                        int r) {
    if (filter == BoxFilter::OddRowCount && r < 0)
        throw PreconditionViolated("OddRowCount filter needs r >= 0");
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, int)> rec = [&](std::int64_t maxPart, int rowsLeft) {
        Partition p{std::vector<std::int64_t>(cur)};
        if (passes(p, width, filter, r)) out.push_back(p);
        if (rowsLeft == 0) return;
        for (std::int64_t v = maxPart; v >= 1; --v) {
            cur.push_back(v);
            rec(v, rowsLeft - 1);
            cur.pop_back();
        }
    };
    rec(width, k);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

std::vector<Partition> partitions_of(std::int64_t n, int max_length) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rem,
                                                              std::int64_t maxPart) {
        if (rem == 0) {
            out.emplace_back(std::vector<std::int64_t>(cur));
            return;
        }
        if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
        for (std::int64_t v = std::min(rem, maxPart); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

std::vector<Partition> partitions_up_to(std::int64_t n, int max_length) {
    std::vector<Partition> out;
    for (std::int64_t s = 0; s <= n; ++s) {
        auto ps = partitions_of(s, max_length);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

} // namespace cpavg
