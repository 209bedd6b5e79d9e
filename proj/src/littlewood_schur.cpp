#include "cpavg/littlewood_schur.hpp"

#include <algorithm>
#include <functional>

#include "cpavg/errors.hpp"

namespace cpavg {

namespace {

std::vector<int> block_map(int count, int offset, int total) {
    (void)total;
    std::vector<int> m(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(i)] = offset + i;
    return m;
}

// all mu contained in lambda with at most maxlen rows
void for_each_subpartition(const Partition& lambda, int maxlen,
                           const std::function<void(const Partition&)>& fn) {
    std::vector<std::int64_t> cur;
    std::function<void(int)> rec = [&](int row) {
        if (row > std::min(maxlen, lambda.length())) return;
        Partition p{std::vector<std::int64_t>(cur)};
        fn(p);
        if (row > std::min(maxlen, lambda.length()) - 1) return;
        std::int64_t hi = std::min(lambda.part(row + 1),
                                   row == 0 ? lambda.part(1) : cur[row - 1]);
        for (std::int64_t v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace

LSFunction ls(const Partition& lambda, int k, int l) {
    // The inner sum over nu collapses through conjugation symmetry of the
    // LR coefficients: sum_nu c^lambda_{mu nu} s_{nu'}(y) = s_{lambda'/mu'}(y).
    const int n = k + l;
    LSFunction out{lambda, k, l, LaurentPoly(n)};
    auto xmap = block_map(k, 0, n);
    auto ymap = block_map(l, k, n);
    Partition lc = lambda.conjugate();
    for_each_subpartition(lambda, k, [&](const Partition& mu) {
        LaurentPoly smu = schur(mu, k);
        if (smu.is_zero()) return;
        LaurentPoly inner = skew_schur(lc, mu.conjugate(), l);
        if (inner.is_zero()) return;
        out.value += smu.map_vars(n, xmap) * inner.map_vars(n, ymap);
    });
    return out;
}

LaurentPoly ls_rectangle(int k, int l, std::int64_t m) {
    if (m < 0) throw PreconditionViolated("ls_rectangle: m < 0");
    const int n = k + l;
    LaurentPoly out = LaurentPoly::constant(n, Rational(1));
    for (int i = 0; i < k; ++i)
        out = out * LaurentPoly::variable(n, i, m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j)
            out = out * (LaurentPoly::variable(n, i) + LaurentPoly::variable(n, k + j));
    return out;
}

bool verify_interchange(const Partition& lambda, int k, int l) {
    LaurentPoly lhs = ls(lambda, k, l).value;
    LaurentPoly rhs = ls(lambda.conjugate(), l, k).value;
    // rhs lives in (y-block, x-block) order; move y to the back
    std::vector<int> m(static_cast<std::size_t>(l + k));
    for (int j = 0; j < l; ++j) m[static_cast<std::size_t>(j)] = k + j;
    for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(l + i)] = i;
    return lhs == rhs.map_vars(k + l, m);
}

bool verify_generalized_cauchy(int m, int n, int s, int t, std::int64_t D) {
    if (m < 0 || n < 0 || s < 0 || t < 0 || D < 0)
        throw PreconditionViolated("verify_generalized_cauchy");
    const int total = m + n + s + t;
    const int A = 0, B = m, G = m + n, Dl = m + n + s;

    LaurentPoly lhs(total);
    for (std::int64_t half = 0; 2 * half <= D; ++half) {
        for (const auto& lam : partitions_of(half)) {
            if (lam.part(m + 1) > n || lam.part(s + 1) > t) continue;
            LaurentPoly a = ls(lam, m, n).value;
            LaurentPoly b = ls(lam, s, t).value;
            if (a.is_zero() || b.is_zero()) continue;
            std::vector<int> mapa(static_cast<std::size_t>(m + n));
            for (int i = 0; i < m; ++i) mapa[static_cast<std::size_t>(i)] = A + i;
            for (int i = 0; i < n; ++i) mapa[static_cast<std::size_t>(m + i)] = B + i;
            std::vector<int> mapb(static_cast<std::size_t>(s + t));
            for (int i = 0; i < s; ++i) mapb[static_cast<std::size_t>(i)] = G + i;
            for (int i = 0; i < t; ++i) mapb[static_cast<std::size_t>(s + i)] = Dl + i;
            lhs += a.map_vars(total, mapa) * b.map_vars(total, mapb);
        }
    }
    lhs = lhs.truncate_total_degree(D);

    auto geom_inv = [&](int vi, int vj) {
        // truncated series for 1/(1 - u v)
        LaurentPoly g(total);
        LaurentPoly uv = LaurentPoly::variable(total, vi) * LaurentPoly::variable(total, vj);
        LaurentPoly p = LaurentPoly::constant(total, Rational(1));
        for (std::int64_t d = 0; 2 * d <= D; ++d) {
            g += p;
            p = p * uv;
        }
        return g;
    };
    auto one_plus = [&](int vi, int vj) {
        return LaurentPoly::constant(total, Rational(1)) +
               LaurentPoly::variable(total, vi) * LaurentPoly::variable(total, vj);
    };

    LaurentPoly rhs = LaurentPoly::constant(total, Rational(1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < s; ++j) rhs = (rhs * geom_inv(A + i, G + j)).truncate_total_degree(D);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < t; ++j) rhs = (rhs * one_plus(A + i, Dl + j)).truncate_total_degree(D);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < s; ++j) rhs = (rhs * one_plus(B + i, G + j)).truncate_total_degree(D);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < t; ++j) rhs = (rhs * geom_inv(B + i, Dl + j)).truncate_total_degree(D);

    return lhs == rhs;
}

bool verify_gen_pieri(const Partition& lambda, int k, int l) {
    bool ok = true;
    const int n = k + l;
    if (k >= 1) {
        LaurentPoly lhs = ls(lambda, k, l).value;
        LaurentPoly rhs(n);
        std::vector<int> sub(static_cast<std::size_t>(k - 1 + l));
        for (int i = 0; i < k - 1; ++i) sub[static_cast<std::size_t>(i)] = i;
        for (int j = 0; j < l; ++j) sub[static_cast<std::size_t>(k - 1 + j)] = k + j;
        for_each_subpartition(lambda, lambda.length(), [&](const Partition& mu) {
            if (!is_horizontal_strip(lambda, mu)) return;
            LaurentPoly term = ls(mu, k - 1, l).value.map_vars(n, sub);
            if (term.is_zero()) return;
            rhs += term * LaurentPoly::variable(n, k - 1, lambda.size() - mu.size());
        });
        ok = ok && lhs == rhs;
    }
    if (l >= 1) {
        LaurentPoly lhs = ls(lambda, k, l).value;
        LaurentPoly rhs(n);
        std::vector<int> sub(static_cast<std::size_t>(k + l - 1));
        for (int i = 0; i < k + l - 1; ++i) sub[static_cast<std::size_t>(i)] = i;
        for_each_subpartition(lambda, lambda.length(), [&](const Partition& mu) {
            if (!is_vertical_strip(lambda, mu)) return;
            LaurentPoly term = ls(mu, k, l - 1).value.map_vars(n, sub);
            if (term.is_zero()) return;
            rhs += term * LaurentPoly::variable(n, n - 1, lambda.size() - mu.size());
        });
        ok = ok && lhs == rhs;
    }
    return ok;
}

bool verify_ls_laplace(const Partition& lambda, int L, int K, int Q,
                       const std::vector<Rational>& alpha,
                       const std::vector<Rational>& gamma) {
    if (L < 1 || K < 1 || Q < 0) throw PreconditionViolated("ls_laplace: bad block sizes");
    if (lambda.length() > L + K) throw PreconditionViolated("ls_laplace: shape too long");
    if (lambda.part(L) < lambda.part(L + 1) + Q)
        throw PreconditionViolated("ls_laplace: lambda_L >= lambda_{L+1} + Q required");
    if (static_cast<int>(alpha.size()) != L + K || static_cast<int>(gamma.size()) != Q)
        throw PreconditionViolated("ls_laplace: point counts");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j]) throw SingularParameters("repeated alpha");

    auto eval_ls = [&](const Partition& shape, const std::vector<Rational>& xs) {
        std::vector<Rational> pt = xs;
        pt.insert(pt.end(), gamma.begin(), gamma.end());
        return ls(shape, static_cast<int>(xs.size()), Q).value.eval(pt);
    };

    Rational lhs = eval_ls(lambda, alpha);

    std::vector<std::int64_t> tau_parts, rho_parts;
    for (int i = 1; i <= L; ++i)
        if (lambda.part(i) > 0) tau_parts.push_back(lambda.part(i));
    for (int i = L + 1; i <= L + K; ++i)
        if (lambda.part(i) > 0) rho_parts.push_back(lambda.part(i));
    Partition tau{std::move(tau_parts)}, rho{std::move(rho_parts)};
    Partition tauK = tau.plus_rectangle(K, L);

    Rational rhs(0);
    std::vector<int> sel(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) sel[static_cast<std::size_t>(i)] = i;
    const int nn = L + K;
    while (true) {
        std::vector<Rational> as, ac;
        std::vector<bool> inSel(static_cast<std::size_t>(nn), false);
        for (int i : sel) inSel[static_cast<std::size_t>(i)] = true;
        for (int i = 0; i < nn; ++i)
            (inSel[static_cast<std::size_t>(i)] ? as : ac).push_back(alpha[static_cast<std::size_t>(i)]);
        Rational denom(1);
        for (const auto& a : as)
            for (const auto& b : ac) denom *= (a - b);
        rhs += eval_ls(tauK, as) * eval_ls(rho, ac) / denom;

        int i = L - 1;
        while (i >= 0 && sel[static_cast<std::size_t>(i)] == nn - L + i) --i;
        if (i < 0) break;
        ++sel[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < L; ++j) sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
    }
    return lhs == rhs;
}

bool verify_berele_regev(const Partition& lambda, int k, int l) {
    if (lambda.part(k) < l)
        throw PreconditionViolated("berele_regev: lambda must contain the k x l rectangle");
    const int n = k + l;
    std::vector<std::int64_t> nu_parts, eta_parts;
    for (int i = 1; i <= k; ++i)
        if (lambda.part(i) - l > 0) nu_parts.push_back(lambda.part(i) - l);
    for (int i = k + 1; i <= lambda.length(); ++i) eta_parts.push_back(lambda.part(i));
    Partition nu{std::move(nu_parts)}, eta{std::move(eta_parts)};

    LaurentPoly rhs = schur(nu, k).map_vars(n, block_map(k, 0, n)) *
                      schur(eta.conjugate(), l).map_vars(n, block_map(l, k, n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j)
            rhs = rhs * (LaurentPoly::variable(n, i) + LaurentPoly::variable(n, k + j));
    return ls(lambda, k, l).value == rhs;
}

BigInt hopf_pairing(const Partition& mu, const Partition& nu, const Partition& sigma,
                    const Partition& tau) {
    BigInt total = 0;
    if (mu.size() + nu.size() != sigma.size() + tau.size()) return 0;
    const auto left = lr_expand(mu, nu);
    const auto right = lr_expand(sigma, tau);
    for (const auto& [lam, c] : left.terms()) total += c * right.coeff(lam);
    return total;
}

bool verify_hopf(const Partition& mu, const Partition& nu, const Partition& sigma,
                 const Partition& tau) {
    BigInt lhs = hopf_pairing(mu, nu, sigma, tau);

    BigInt rhs = 0;
    for (std::int64_t a = 0; a <= sigma.size(); ++a) {
        for (const auto& phi : partitions_of(a)) {
            if (!sigma.contains(phi) || !mu.contains(phi)) continue;
            for (const auto& eta : partitions_of(sigma.size() - a)) {
                BigInt c1 = lr_coefficient(sigma, phi, eta);
                if (c1 == 0) continue;
                if (!nu.contains(eta)) continue;
                for (std::int64_t b = 0; b <= tau.size(); ++b) {
                    for (const auto& psi : partitions_of(b)) {
                        if (!tau.contains(psi) || !nu.contains(psi)) continue;
                        for (const auto& xi : partitions_of(tau.size() - b)) {
                            BigInt c2 = lr_coefficient(tau, psi, xi);
                            if (c2 == 0) continue;
                            BigInt c3 = lr_coefficient(mu, phi, xi);
                            if (c3 == 0) continue;
                            BigInt c4 = lr_coefficient(nu, psi, eta);
                            if (c4 == 0) continue;
                            rhs += c1 * c2 * c3 * c4;
                        }
                    }
                }
            }
        }
    }
    return lhs == rhs;
}

LaurentPoly ls_series_at(const Partition& lambda, const std::vector<Rational>& xpts,
                         int l, std::int64_t D) {
    const int k = static_cast<int>(xpts.size());
    LaurentPoly out(l);
    Partition lc = lambda.conjugate();
    for_each_subpartition(lambda, k, [&](const Partition& mu) {
        if (lambda.size() - mu.size() > D) return; // contributes beyond degree D
        Rational sx = schur_eval_bialternant(mu, xpts);
        if (sx.is_zero()) return;
        LaurentPoly sk = skew_schur(lc, mu.conjugate(), l);
        if (sk.is_zero()) return;
        out += sx * sk;
    });
    return out;
}

Rational ls_eval_at(const Partition& lambda, const std::vector<Rational>& xpts,
                    const std::vector<Rational>& ypts) {
    LaurentPoly series = ls_series_at(lambda, xpts, static_cast<int>(ypts.size()),
                                      lambda.size());
    return series.eval(ypts);
}

} // namespace cpavg
