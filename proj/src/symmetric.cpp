#include "cpavg/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "cpavg/errors.hpp"
#include "cpavg/ring_matrix.hpp"

namespace cpavg {

void SchurExpansion::add(const Partition& p, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt SchurExpansion::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string SchurExpansion::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*s[" << p.str() << "]";
    }
    return os.str();
}

namespace {

// e_0..e_rmax and h_0..h_rmax of n variables by one-variable-at-a-time
// recurrences.
std::vector<LaurentPoly> elementary_table(std::int64_t rmax, int n) {
    std::vector<LaurentPoly> e(static_cast<std::size_t>(rmax) + 1, LaurentPoly(n));
    e[0] = LaurentPoly::constant(n, Rational(1));
    for (int v = 0; v < n; ++v) {
        LaurentPoly x = LaurentPoly::variable(n, v);
        for (std::int64_t r = std::min<std::int64_t>(rmax, v + 1); r >= 1; --r)
            e[static_cast<std::size_t>(r)] += e[static_cast<std::size_t>(r - 1)] * x;
    }
    return e;
}

std::vector<LaurentPoly> complete_table(std::int64_t rmax, int n) {
    std::vector<LaurentPoly> h(static_cast<std::size_t>(rmax) + 1, LaurentPoly(n));
    h[0] = LaurentPoly::constant(n, Rational(1));
    for (int v = 0; v < n; ++v) {
        LaurentPoly x = LaurentPoly::variable(n, v);
        for (std::int64_t r = 1; r <= rmax; ++r)
            h[static_cast<std::size_t>(r)] += h[static_cast<std::size_t>(r - 1)] * x;
    }
    return h;
}

} // namespace

LaurentPoly elementary(std::int64_t r, int n) {
    if (r < 0) throw PreconditionViolated("elementary: r < 0");
    if (r > n) return LaurentPoly(n);
    return elementary_table(r, n)[static_cast<std::size_t>(r)];
}

LaurentPoly complete(std::int64_t r, int n) {
    if (r < 0) throw PreconditionViolated("complete: r < 0");
    if (r > 0 && n == 0) return LaurentPoly(0);
    return complete_table(r, n)[static_cast<std::size_t>(r)];
}

LaurentPoly elementary_lambda(const Partition& p, int n) {
    LaurentPoly out = LaurentPoly::constant(n, Rational(1));
    for (auto part : p.parts()) out = out * elementary(part, n);
    return out;
}

LaurentPoly complete_lambda(const Partition& p, int n) {
    LaurentPoly out = LaurentPoly::constant(n, Rational(1));
    for (auto part : p.parts()) out = out * complete(part, n);
    return out;
}

LaurentPoly skew_schur(const Partition& lambda, const Partition& mu, int n) {
    if (!lambda.contains(mu)) return LaurentPoly(n);
    const int L = std::max(lambda.length(), 1);
    std::int64_t rmax = 0;
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            rmax = std::max(rmax, lambda.part(i) - mu.part(j) - i + j);
    auto h = complete_table(std::max<std::int64_t>(rmax, 0), n);
    RingMatrix m(L, L, n);
    for (int i = 1; i <= L; ++i) {
        for (int j = 1; j <= L; ++j) {
            std::int64_t r = lambda.part(i) - mu.part(j) - i + j;
            if (r == 0)
                m.at(i - 1, j - 1) = LaurentPoly::constant(n, Rational(1));
            else if (r > 0)
                m.at(i - 1, j - 1) = h[static_cast<std::size_t>(r)];
        }
    }
    return determinant(m);
}

namespace {
std::mutex schur_mutex;
std::map<std::pair<std::vector<std::int64_t>, int>, LaurentPoly> schur_cache;
} // namespace

LaurentPoly schur(const Partition& lambda, int n) {
    if (lambda.length() > n) return LaurentPoly(n);
    auto key = std::make_pair(lambda.parts(), n);
    {
        std::lock_guard<std::mutex> lock(schur_mutex);
        auto it = schur_cache.find(key);
        if (it != schur_cache.end()) return it->second;
    }
    LaurentPoly result = skew_schur(lambda, Partition{}, n);
    std::lock_guard<std::mutex> lock(schur_mutex);
    schur_cache.emplace(std::move(key), result);
    return result;
}

Rational schur_eval_bialternant(const Partition& lambda,
                                const std::vector<Rational>& points) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw RepeatedPoint("bialternant at " + points[i].str());
    if (lambda.length() > n) return Rational(0);
    if (n == 0) return Rational(1);
    std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n));
    std::vector<std::vector<Rational>> den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            num[i][j] = points[i].pow(lambda.part(j + 1) + n - (j + 1));
            den[i][j] = points[i].pow(n - (j + 1));
        }
    }
    return determinant_rational(num) / determinant_rational(den);
}

BigInt schur_dim(const Partition& lambda, int n) {
    if (lambda.length() > n) return 0;
    if (n == 0) return 1;

    // Weyl dimension formula with mu_i = lambda_i + n - i.
    Rational weyl(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::int64_t mi = lambda.part(i) + n - i;
            std::int64_t mj = lambda.part(j) + n - j;
            weyl *= Rational(static_cast<long>(mi - mj), static_cast<long>(j - i));
        }

    // Hook-content formula.
    Rational hooks(1);
    auto h = hook_lengths(lambda);
    auto c = contents(lambda);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h[i].size(); ++j)
            hooks *= Rational(static_cast<long>(n + c[i][j]), static_cast<long>(h[i][j]));

    if (weyl != hooks || !weyl.is_integer())
        throw std::logic_error("schur_dim: formula mismatch for " + lambda.str());
    return weyl.num();
}

bool is_symmetric(const LaurentPoly& p) {
    for (int i = 0; i + 1 < p.nvars(); ++i)
        if (p.swap_vars(i, i + 1) != p) return false;
    return true;
}

namespace {

// Peels a symmetric polynomial into Schur terms using the lex-leading
// monomial, whose exponent vector is weakly decreasing for symmetric input.
SchurExpansion peel(LaurentPoly p, int n) {
    SchurExpansion out;
    while (!p.is_zero()) {
        auto lead = std::prev(p.terms().end());
        ExponentVec e = lead->first;
        Rational c = lead->second;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) throw NotSymmetric("leading monomial not dominant");
        for (auto v : e)
            if (v < 0) throw NotSymmetric("negative exponent");
        if (!c.is_integer())
            throw PreconditionViolated("non-integer Schur coefficient " + c.str());
        std::vector<std::int64_t> parts(e.begin(), e.end());
        Partition lam{std::move(parts)};
        out.add(lam, c.num());
        p -= c * schur(lam, n);
    }
    return out;
}

std::mutex lr_mutex;
std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, SchurExpansion>
    lr_cache;

} // namespace

SchurExpansion lr_expand(const Partition& mu, const Partition& nu) {
    // symmetric in the two factors; normalize the cache key
    const Partition& a = (nu < mu) ? nu : mu;
    const Partition& b = (nu < mu) ? mu : nu;
    auto key = std::make_pair(a.parts(), b.parts());
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    int n = std::max(1, a.length() + b.length());
    SchurExpansion out = peel(schur(a, n) * schur(b, n), n);
    std::lock_guard<std::mutex> lock(lr_mutex);
    lr_cache.emplace(std::move(key), out);
    return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    return lr_expand(mu, nu).coeff(lambda);
}

SchurExpansion pieri_h(const Partition& mu, std::int64_t r) {
    if (r < 0) throw PreconditionViolated("pieri_h: r < 0");
    SchurExpansion out;
    // choose lambda_i in [mu_i, mu_{i-1}] rows 1..len+1, total growth r
    int rows = mu.length() + 1;
    std::vector<std::int64_t> lam(static_cast<std::size_t>(rows));
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
        if (i == rows) {
            if (left == 0) {
                std::vector<std::int64_t> parts(lam.begin(), lam.end());
                out.add(Partition{std::move(parts)}, 1);
            }
            return;
        }
        std::int64_t lo = mu.part(i + 1);
        std::int64_t hi = (i == 0) ? mu.part(1) + left : mu.part(i);
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (v - mu.part(i + 1) > left) break;
            lam[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - (v - mu.part(i + 1)));
        }
    };
    rec(0, r);
    return out;
}

SchurExpansion pieri_e(const Partition& mu, std::int64_t r) {
    if (r < 0) throw PreconditionViolated("pieri_e: r < 0");
    // vertical strips are horizontal strips of the conjugate
    SchurExpansion out;
    auto conj = pieri_h(mu.conjugate(), r);
    for (const auto& [p, c] : conj.terms()) out.add(p.conjugate(), c);
    return out;
}

SchurExpansion decompose_in_schur_basis(const LaurentPoly& p, int n) {
    if (p.nvars() != n) throw VariableCountMismatch("decompose_in_schur_basis");
    if (!is_symmetric(p)) throw NotSymmetric("decompose_in_schur_basis");
    for (const auto& [e, c] : p.terms())
        for (auto v : e)
            if (v < 0) throw NotSymmetric("negative exponent in symmetric decomposition");
    return peel(p, n);
}

bool verify_dual_pair_expand(int k, int N) {
    if (k < 1 || N < 1) throw PreconditionViolated("verify_dual_pair_expand");
    const int n = k + N;
    LaurentPoly lhs = LaurentPoly::constant(n, Rational(1));
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < N; ++t)
            lhs = lhs * (LaurentPoly::variable(n, i) - LaurentPoly::variable(n, k + t));

    LaurentPoly rhs(n);
    std::vector<int> xmap(k), tmap(N);
    for (int i = 0; i < k; ++i) xmap[i] = i;
    for (int t = 0; t < N; ++t) tmap[t] = k + t;
    for (const auto& lam : enumerate_in_box(N, k, BoxFilter::All)) {
        Partition tilde = box_complement(lam, N, k);
        LaurentPoly sx = schur(lam, k).map_vars(n, xmap);
        LaurentPoly st = schur(tilde, N).map_vars(n, tmap);
        LaurentPoly term = sx * st;
        if (tilde.size() % 2 != 0) term = -term;
        rhs += term;
    }
    return lhs == rhs;
}

bool verify_cauchy(int p, int q, std::int64_t D) {
    if (p < 1 || q < 1 || D < 0) throw PreconditionViolated("verify_cauchy");
    const int n = p + q;
    LaurentPoly lhs = LaurentPoly::constant(n, Rational(1));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            // truncated geometric series for 1/(1 - x_i y_j)
            LaurentPoly geo(n);
            LaurentPoly xy = LaurentPoly::variable(n, i) * LaurentPoly::variable(n, p + j);
            LaurentPoly pw = LaurentPoly::constant(n, Rational(1));
            for (std::int64_t m = 0; 2 * m <= D; ++m) {
                geo += pw;
                pw = pw * xy;
            }
            lhs = (lhs * geo).truncate_total_degree(D);
        }
    }

    LaurentPoly rhs(n);
    std::vector<int> xmap(p), ymap(q);
    for (int i = 0; i < p; ++i) xmap[i] = i;
    for (int j = 0; j < q; ++j) ymap[j] = p + j;
    for (const auto& lam : partitions_up_to(D / 2, std::min(p, q))) {
        rhs += schur(lam, p).map_vars(n, xmap) * schur(lam, q).map_vars(n, ymap);
    }
    return lhs == rhs.truncate_total_degree(D);
}

bool verify_dual_cauchy(int p, int q) {
    if (p < 1 || q < 1) throw PreconditionViolated("verify_dual_cauchy");
    const int n = p + q;
    LaurentPoly lhs = LaurentPoly::constant(n, Rational(1));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            lhs = lhs * (LaurentPoly::constant(n, Rational(1)) +
                         LaurentPoly::variable(n, i) * LaurentPoly::variable(n, p + j));

    LaurentPoly rhs(n);
    std::vector<int> xmap(p), ymap(q);
    for (int i = 0; i < p; ++i) xmap[i] = i;
    for (int j = 0; j < q; ++j) ymap[j] = p + j;
    for (const auto& lam : enumerate_in_box(q, p, BoxFilter::All))
        rhs += schur(lam, p).map_vars(n, xmap) *
               schur(lam.conjugate(), q).map_vars(n, ymap);
    return lhs == rhs;
}

bool verify_branching_split(const Partition& lambda, int p, int q) {
    if (p < 1 || q < 1) throw PreconditionViolated("verify_branching_split");
    const int n = p + q;
    LaurentPoly lhs = schur(lambda, n);

    LaurentPoly rhs(n);
    std::vector<int> xmap(p), ymap(q);
    for (int i = 0; i < p; ++i) xmap[i] = i;
    for (int j = 0; j < q; ++j) ymap[j] = p + j;
    for (std::int64_t s = 0; s <= lambda.size(); ++s) {
        for (const auto& mu : partitions_of(s, p)) {
            if (!lambda.contains(mu)) continue;
            for (const auto& nu : partitions_of(lambda.size() - s, q)) {
                BigInt c = lr_coefficient(lambda, mu, nu);
                if (c == 0) continue;
                LaurentPoly term = schur(mu, p).map_vars(n, xmap) *
                                   schur(nu, q).map_vars(n, ymap);
                term.scale(Rational(c));
                rhs += term;
            }
        }
    }
    return lhs == rhs;
}

} // namespace cpavg
