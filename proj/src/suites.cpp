#include "cpavg/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include "cpavg/averages.hpp"
#include "cpavg/errors.hpp"
#include "cpavg/haar.hpp"
#include "cpavg/littlewood_schur.hpp"
#include "cpavg/prng.hpp"

namespace cpavg {

namespace {

using Clock = std::chrono::steady_clock;
using CaseFn = std::function<void(CaseResult&)>;

struct PendingCase {
    std::string id;
    std::string params;
    CaseFn fn;
};

CaseResult exec_case(const PendingCase& pc) {
    CaseResult cr;
    cr.id = pc.id;
    cr.params = pc.params;
    auto t0 = Clock::now();
    try {
        pc.fn(cr);
        if (cr.status.empty()) cr.status = cr.lhs == cr.rhs ? "pass" : "fail";
    } catch (const std::exception& e) {
        cr.status = "error";
        cr.lhs = e.what();
    }
    cr.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return cr;
}

// deterministic fan-out: cases are independent, results are reduced in
// submission order regardless of the thread count
void run_pending(Report& rep, std::vector<PendingCase>& pending, int threads) {
    if (threads <= 1) {
        for (const auto& pc : pending) rep.cases.push_back(exec_case(pc));
    } else {
        // bounded pipeline preserving submission order
        std::vector<std::future<CaseResult>> futs;
        futs.reserve(pending.size());
        std::size_t next = 0;
        const std::size_t window = static_cast<std::size_t>(threads);
        for (std::size_t i = 0; i < pending.size(); ++i) {
            futs.push_back(std::async(std::launch::async,
                                      [&pending, i] { return exec_case(pending[i]); }));
            if (futs.size() - next >= window) {
                rep.cases.push_back(futs[next].get());
                ++next;
            }
        }
        while (next < futs.size()) {
            rep.cases.push_back(futs[next].get());
            ++next;
        }
    }
    pending.clear();
}

void eq(CaseResult& cr, const std::string& lhs, const std::string& rhs) {
    cr.lhs = lhs;
    cr.rhs = rhs;
}

void tol(CaseResult& cr, double actual, double expected, double bound) {
    std::ostringstream a, b;
    a << actual;
    b << expected << " (tol " << bound << ")";
    cr.lhs = a.str();
    cr.rhs = b.str();
    cr.status = std::abs(actual - expected) <= bound ? "pass" : "fail";
}

std::vector<Rational> generic_points(Prng& rng, int count) {
    std::vector<Rational> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < count) {
        if (++guard > 100000) throw std::logic_error("sampling stalled");
        long num = static_cast<long>(rng.next() % 17) - 8;
        long den = static_cast<long>(rng.next() % 7) + 1;
        if (num == 0) continue;
        Rational c(num, den);
        if (c.abs() == Rational(1)) continue;
        bool ok = true;
        for (const auto& p : pts)
            if (p == c || (p * c).is_one()) ok = false;
        if (ok) pts.push_back(c);
    }
    return pts;
}

std::vector<Rational> small_points(Prng& rng, int count) {
    std::vector<Rational> pts;
    while (static_cast<int>(pts.size()) < count) {
        long num = static_cast<long>(rng.next() % 7) - 3;
        long den = static_cast<long>(rng.next() % 16) + 13;
        if (num == 0) continue;
        Rational c(num, den);
        if (c.abs() > Rational(1, 4)) continue;
        bool dup = false;
        for (const auto& p : pts)
            if (p == c) dup = true;
        if (!dup) pts.push_back(c);
    }
    return pts;
}

std::string fmt_bool(bool b) { return b ? "holds" : "violated"; }

RatioQuery make_ratio_query(GroupFamily family, int N, int k, int l, Prng& rng) {
    RatioQuery q;
    q.base.group = GroupSpec{family, N};
    if (family == GroupFamily::Unitary) {
        auto xs = generic_points(rng, 2 * k);
        q.base.alpha_inv.assign(xs.begin(), xs.begin() + k);
        q.base.alpha.assign(xs.begin() + k, xs.end());
        q.gamma = small_points(rng, l);
        q.delta = small_points(rng, l);
    } else {
        q.base.x = generic_points(rng, k);
        q.y = small_points(rng, l);
    }
    return q;
}

// ---------------------------------------------------------------- symfunc

void build_symfunc(std::vector<PendingCase>& out, const SuiteOptions& opts) {
    for (int p = 1; p <= 3; ++p)
        for (int q = p; q <= 3; ++q)
            out.push_back({"dual-cauchy", "p=" + std::to_string(p) + " q=" + std::to_string(q),
                           [p, q](CaseResult& cr) {
                               eq(cr, fmt_bool(verify_dual_cauchy(p, q)), "holds");
                           }});
    for (int p = 1; p <= 2; ++p)
        for (int q = p; q <= 2; ++q)
            out.push_back({"cauchy-series", "p=" + std::to_string(p) + " q=" + std::to_string(q) + " D=8",
                           [p, q](CaseResult& cr) {
                               eq(cr, fmt_bool(verify_cauchy(p, q, 8)), "holds");
                           }});
    for (int k = 1; k <= 4; ++k)
        for (int N = 1; N <= 4; ++N)
            out.push_back({"dual-pair-expansion",
                           "k=" + std::to_string(k) + " N=" + std::to_string(N),
                           [k, N](CaseResult& cr) {
                               eq(cr, fmt_bool(verify_dual_pair_expand(k, N)), "holds");
                           }});
    out.push_back({"pieri-vs-lr", "|mu|<=6 r<=3", [](CaseResult& cr) {
                       bool ok = true;
                       for (const auto& mu : partitions_up_to(6))
                           for (std::int64_t r = 0; r <= 3; ++r) {
                               Partition row = r == 0 ? Partition{} : Partition{r};
                               Partition col(std::vector<std::int64_t>(static_cast<std::size_t>(r), 1));
                               ok = ok && pieri_h(mu, r) == lr_expand(mu, row);
                               ok = ok && pieri_e(mu, r) == lr_expand(mu, col);
                           }
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"branching-split", "lambda=(3,1) p=q=2", [](CaseResult& cr) {
                       eq(cr, fmt_bool(verify_branching_split(Partition{3, 1}, 2, 2)), "holds");
                   }});
    out.push_back({"schur-bialternant-agreement", "100 random cases seed=" + std::to_string(opts.seed),
                   [opts](CaseResult& cr) {
                       Prng rng(opts.seed);
                       bool ok = true;
                       for (int rep = 0; rep < 100 && ok; ++rep) {
                           int n = 1 + static_cast<int>(rng.next() % 3);
                           // random partition in the 5x4 box
                           std::vector<std::int64_t> parts;
                           std::int64_t prev = 5;
                           for (int i = 0; i < 4; ++i) {
                               std::int64_t v = static_cast<std::int64_t>(rng.next() % (prev + 1));
                               if (v == 0) break;
                               parts.push_back(v);
                               prev = v;
                           }
                           Partition lam{std::move(parts)};
                           auto pts = generic_points(rng, n);
                           Rational a = schur(lam, n).eval(pts);
                           Rational b = schur_eval_bialternant(lam, pts);
                           ok = a == b;
                           if (lam.size() <= 8) {
                               // SSYT route via the dimension specialization
                               ok = ok && schur_dim(lam, n) ==
                                              schur(lam, n).eval(std::vector<Rational>(
                                                  static_cast<std::size_t>(n), Rational(1))).num();
                           }
                       }
                       eq(cr, fmt_bool(ok), "holds");
                   }});
}

// --------------------------------------------------------------------- ls

void build_ls(std::vector<PendingCase>& out, const SuiteOptions& opts) {
    out.push_back({"ls-interchange", "|lambda|<=6 k,l<=2", [](CaseResult& cr) {
                       bool ok = true;
                       for (int k = 1; k <= 2; ++k)
                           for (int l = 1; l <= 2; ++l)
                               for (const auto& lam : partitions_up_to(6))
                                   ok = ok && verify_interchange(lam, k, l);
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"ls-rectangle", "k,l,m<=2", [](CaseResult& cr) {
                       bool ok = true;
                       for (int k = 1; k <= 2; ++k)
                           for (int l = 0; l <= 2; ++l)
                               for (std::int64_t m = 0; m <= 2; ++m) {
                                   if (l + m == 0) continue;
                                   Partition rect = Partition{}.plus_rectangle(l + m, k);
                                   ok = ok && ls_rectangle(k, l, m) == ls(rect, k, l).value;
                               }
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"ls-berele-regev", "k,l<=2, shapes over the rectangle", [](CaseResult& cr) {
                       bool ok = true;
                       for (int k = 1; k <= 2; ++k)
                           for (int l = 1; l <= 2; ++l)
                               for (const auto& lam : partitions_up_to(8)) {
                                   if (lam.part(k) < l) continue;
                                   ok = ok && verify_berele_regev(lam, k, l);
                               }
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"ls-generalized-cauchy", "alphabets<=2 D=6", [](CaseResult& cr) {
                       bool ok = verify_generalized_cauchy(1, 1, 1, 1, 6) &&
                                 verify_generalized_cauchy(2, 1, 1, 2, 6) &&
                                 verify_generalized_cauchy(2, 2, 2, 2, 6);
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"ls-generalized-pieri", "|lambda|<=6 k,l<=2", [](CaseResult& cr) {
                       bool ok = true;
                       for (int k = 1; k <= 2; ++k)
                           for (int l = 0; l <= 2; ++l)
                               for (const auto& lam : partitions_up_to(6))
                                   ok = ok && verify_gen_pieri(lam, k, l);
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"ls-block-laplace", "seeded points", [opts](CaseResult& cr) {
                       Prng rng(opts.seed + 5);
                       bool ok = true;
                       for (int rep = 0; rep < 5 && ok; ++rep) {
                           auto a = generic_points(rng, 3);
                           auto g = small_points(rng, 2);
                           ok = verify_ls_laplace(Partition{4, 1, 1}, 1, 2, 2, a, g);
                           auto a2 = generic_points(rng, 2);
                           ok = ok && verify_ls_laplace(Partition{3, 1}, 1, 1, 1, a2,
                                                        {g[0]});
                       }
                       eq(cr, fmt_bool(ok), "holds");
                   }});
    out.push_back({"ls-hopf", "all quadruples of size <= 3", [](CaseResult& cr) {
                       auto labels = partitions_up_to(3);
                       bool ok = true;
                       for (const auto& mu : labels)
                           for (const auto& nu : labels)
                               for (const auto& sg : labels)
                                   for (const auto& ta : labels)
                                       ok = ok && verify_hopf(mu, nu, sg, ta);
                       eq(cr, fmt_bool(ok), "holds");
                   }});
}

// ------------------------------------------------------------- characters

void build_characters(std::vector<PendingCase>& out, const SuiteOptions& opts) {
    for (auto family : {GroupFamily::Symplectic, GroupFamily::SOEven, GroupFamily::SOOdd}) {
        GroupSpec probe{family, 1};
        for (int k = 1; k <= std::min(opts.max_k, 3); ++k)
            for (int N = 1; N <= std::min(opts.max_n, 3); ++N) {
                std::ostringstream ps;
                ps << "family=" << probe.name() << " k=" << k << " N=" << N
                   << " 10 point sets seed=" << opts.seed;
                out.push_back({"dual-pair-decomposition", ps.str(),
                               [family, k, N, opts](CaseResult& cr) {
                                   Prng rng(opts.seed + 100 * k + N);
                                   bool ok = true;
                                   for (int rep = 0; rep < 10 && ok; ++rep) {
                                       auto pts = generic_points(rng, k + N);
                                       std::vector<Rational> xs(pts.begin(), pts.begin() + k);
                                       std::vector<Rational> ts(pts.begin() + k, pts.end());
                                       ok = verify_dual_pair(family, k, N, xs, ts);
                                   }
                                   eq(cr, fmt_bool(ok), "holds");
                               }});
            }
    }
    for (auto family : {GroupFamily::Symplectic, GroupFamily::SOEven, GroupFamily::SOOdd}) {
        GroupSpec probe{family, 1};
        for (int N = 1; N <= std::min(opts.max_n, 2); ++N)
            for (int l = 1; l <= N; ++l) {
                std::ostringstream ps;
                ps << "family=" << probe.name() << " N=" << N << " l=" << l << " D=6";
                out.push_back({"group-cauchy-series", ps.str(),
                               [family, N, l, opts](CaseResult& cr) {
                                   Prng rng(opts.seed + 17 * N + l);
                                   auto ts = generic_points(rng, N);
                                   eq(cr, fmt_bool(verify_group_cauchy(family, N, l, 6, ts)),
                                      "holds");
                               }});
            }
    }
    for (int n = 1; n <= 3; ++n)
        out.push_back({"schur-orthogonality-ct", "U(" + std::to_string(n) + ") |lambda|<=3",
                       [n](CaseResult& cr) {
                           bool ok = true;
                           auto labels = partitions_up_to(3, n);
                           for (const auto& lam : labels)
                               for (const auto& mu : labels) {
                                   LaurentPoly body = schur(lam, n);
                                   LaurentPoly other = schur(mu, n);
                                   for (int v = 0; v < n; ++v) other = other.invert_var(v);
                                   ClassFunction f(GroupSpec{GroupFamily::Unitary, n},
                                                   body * other);
                                   Rational want = lam == mu ? Rational(1) : Rational(0);
                                   ok = ok && ct_average(f) == want;
                               }
                           eq(cr, fmt_bool(ok), "holds");
                       }});
    out.push_back({"littlewood-parity-series", "l<=3 D=6", [](CaseResult& cr) {
                       bool ok = littlewood_parity_series(ParityKind::TransposeEven, 2, 6) &&
                                 littlewood_parity_series(ParityKind::Even, 2, 6) &&
                                 littlewood_parity_series(ParityKind::TransposeEven, 3, 6) &&
                                 littlewood_parity_series(ParityKind::Even, 3, 6);
                       eq(cr, fmt_bool(ok), "holds");
                   }});
}

// --------------------------------------------------------------- averages

void build_averages(std::vector<PendingCase>& out, const SuiteOptions& opts) {
    const std::vector<GroupFamily> families{GroupFamily::Unitary,    GroupFamily::Symplectic,
                                            GroupFamily::SOEven,     GroupFamily::SOOdd,
                                            GroupFamily::OFull,      GroupFamily::OMinus};

    // products: closed form vs character form (internal) vs exact CT oracle
    for (auto family : families) {
        GroupSpec probe{family, 1};
        for (int k = 1; k <= std::min(opts.max_k, 3); ++k)
            for (int N = 1; N <= opts.max_n; ++N) {
                if (family == GroupFamily::Unitary && N > 2) continue;
                std::ostringstream ps;
                ps << "family=" << probe.name() << " k=" << k << " N=" << N
                   << " 10 point sets seed=" << opts.seed;
                out.push_back({"product-closed-vs-ct", ps.str(),
                               [family, k, N, opts](CaseResult& cr) {
                                   Prng rng(opts.seed + 1000 + 37 * k + N);
                                   bool ok = true;
                                   std::string detail;
                                   for (int rep = 0; rep < 10 && ok; ++rep) {
                                       auto xs = generic_points(rng, k);
                                       ProductQuery q;
                                       q.group = GroupSpec{family, N};
                                       if (family == GroupFamily::Unitary) {
                                           int L = k / 2;
                                           q.alpha_inv.assign(xs.begin(), xs.begin() + L);
                                           q.alpha.assign(xs.begin() + L, xs.end());
                                       } else {
                                           q.x = xs;
                                       }
                                       Rational closed = product_average(q).value;
                                       Rational oracle = ct_product_average(q);
                                       ok = closed == oracle;
                                       if (!ok) detail = closed.str() + " vs " + oracle.str();
                                   }
                                   eq(cr, ok ? "closed=character=ct" : detail,
                                      "closed=character=ct");
                               }});
            }
    }

    // ratios: closed form vs the truncated CT oracle at D = 30
    for (auto family : families) {
        GroupSpec probe{family, 1};
        for (int k = 0; k <= std::min(opts.max_k, 2); ++k)
            for (int l = 1; l <= 2; ++l) {
                std::vector<int> Ns{l, l + 1, 3};
                for (int N : Ns) {
                    if (N > std::max(opts.max_n, 3)) continue;
                    std::ostringstream ps;
                    ps << "family=" << probe.name() << " k=" << k << " l=" << l << " N=" << N
                       << " D=30";
                    out.push_back({"ratio-closed-vs-ct", ps.str(),
                                   [family, k, l, N, opts](CaseResult& cr) {
                                       Prng rng(opts.seed + 2000 + 91 * k + 13 * l + N);
                                       RatioQuery q = make_ratio_query(family, N, k, l, rng);
                                       Rational closed = ratio_average(q).value;
                                       Rational oracle = ct_ratio_average(q, 30);
                                       tol(cr, oracle.to_double(), closed.to_double(), 1e-9);
                                   }});
                }
            }
    }

    // moments
    out.push_back({"moment-sweeps", "U n<=8 k<=5; Sp,SO,O N,k<=6", [](CaseResult& cr) {
                       for (int n = 1; n <= 8; ++n)
                           for (int k = 0; k <= 5; ++k)
                               moment(GroupSpec{GroupFamily::Unitary, n}, k);
                       for (int N = 1; N <= 6; ++N)
                           for (int k = 0; k <= 6; ++k) {
                               moment(GroupSpec{GroupFamily::Symplectic, N}, k);
                               moment(GroupSpec{GroupFamily::SOEven, N}, k);
                               moment(GroupSpec{GroupFamily::OFull, N}, k);
                           }
                       eq(cr, "all-forms-agree", "all-forms-agree");
                   }});
}

// ------------------------------------------------------------------- rect

// --------------------------------------------------------- oracle checks

void build_oracle_crosscheck(std::vector<PendingCase>& out, const SuiteOptions& opts) {
    const std::uint64_t samples = opts.mc_samples ? opts.mc_samples : 200000;
    for (auto family : {GroupFamily::Unitary, GroupFamily::Symplectic, GroupFamily::SOEven,
                        GroupFamily::SOOdd}) {
        GroupSpec probe{family, 1};
        out.push_back({"density-normalization", "family=" + probe.name() + " N<=2",
                       [family](CaseResult& cr) {
                           bool ok = true;
                           for (int N = 1; N <= 2; ++N) {
                               GroupSpec g{family, N};
                               double norm = quad_average_angles(
                                   g, [](const std::vector<double>&) { return 1.0; },
                                   QuadratureSpec{40});
                               ok = ok && std::abs(norm - 1.0) < 1e-10;
                           }
                           eq(cr, fmt_bool(ok), "holds");
                       }});
        out.push_back({"ct-vs-quadrature", "family=" + probe.name() + " 20 random bodies",
                       [family, opts](CaseResult& cr) {
                           Prng rng(opts.seed + 31 * static_cast<int>(family));
                           bool ok = true;
                           for (int rep = 0; rep < 20 && ok; ++rep) {
                               int N = 1 + static_cast<int>(rng.next() % 2);
                               LaurentPoly body(N);
                               for (int t = 0; t < 3; ++t) {
                                   ExponentVec e(static_cast<std::size_t>(N));
                                   for (int i = 0; i < N; ++i)
                                       e[static_cast<std::size_t>(i)] =
                                           static_cast<std::int64_t>(rng.next() % 5) - 2;
                                   Rational c(static_cast<long>(rng.next() % 9) - 4,
                                              static_cast<long>(rng.next() % 3) + 1);
                                   // symmetrize
                                   std::vector<ExponentVec> perms{e};
                                   if (N == 2) {
                                       auto s = e;
                                       std::swap(s[0], s[1]);
                                       perms.push_back(s);
                                   }
                                   for (const auto& p : perms) {
                                       int flips = family == GroupFamily::Unitary ? 1 : (1 << N);
                                       for (int m = 0; m < flips; ++m) {
                                           ExponentVec q = p;
                                           for (int i = 0; i < N; ++i)
                                               if (m & (1 << i))
                                                   q[static_cast<std::size_t>(i)] =
                                                       -q[static_cast<std::size_t>(i)];
                                           body += LaurentPoly::monomial(N, q, c);
                                       }
                                   }
                               }
                               ClassFunction f(GroupSpec{family, N}, body);
                               double exact = ct_average(f).to_double();
                               double approx = quad_average(f, QuadratureSpec{40});
                               ok = std::abs(exact - approx) <=
                                    1e-8 * std::max(1.0, std::abs(exact));
                           }
                           eq(cr, fmt_bool(ok), "holds");
                       }});
    }
    out.push_back({"o-minus-sampler-product", "dim=2 x=1/2 4 sigma, samples=" +
                                                  std::to_string(samples),
                   [samples, opts](CaseResult& cr) {
                       auto f = [](const std::vector<std::complex<double>>& eig) {
                           std::complex<double> v{1.0, 0.0};
                           for (const auto& t : eig)
                               v *= std::complex<double>{1.0, 0.0} + 0.5 * t;
                           return v.real();
                       };
                       auto r = mc_matrix_average(2, -1, f, samples, opts.seed + 7);
                       tol(cr, r.mean, 0.75, std::max(4.0 * r.stderr_est, 1e-12));
                   }});
    out.push_back({"o-minus-coset-vs-sampler", "dim=4 x=1/3 4 sigma",
                   [samples, opts](CaseResult& cr) {
                       ProductQuery q;
                       q.group = GroupSpec{GroupFamily::OMinus, 2};
                       q.x = {Rational(1, 3)};
                       Rational exact = ct_product_average(q);
                       auto f = [](const std::vector<std::complex<double>>& eig) {
                           std::complex<double> v{1.0, 0.0};
                           for (const auto& t : eig)
                               v *= std::complex<double>{1.0, 0.0} + t / 3.0;
                           return v.real();
                       };
                       auto r = mc_matrix_average(4, -1, f, samples, opts.seed + 8);
                       tol(cr, r.mean, exact.to_double(), 4.0 * r.stderr_est);
                   }});
    out.push_back({"so-odd-density-vs-sampler", "SO(3) det(I - g/2): quad and MC vs 7/8",
                   [samples, opts](CaseResult& cr) {
                       // validates the N-angle SO(2N+1) density against the
                       // matrix model on SO(3)
                       GroupSpec g{GroupFamily::SOOdd, 1};
                       double quad = quad_average_angles(
                           g,
                           [](const std::vector<double>& th) {
                               double c = std::cos(th[0]);
                               return 0.5 * (1.25 - c);
                           },
                           QuadratureSpec{40});
                       auto f = [](const std::vector<std::complex<double>>& eig) {
                           std::complex<double> v{1.0, 0.0};
                           for (const auto& t : eig)
                               v *= std::complex<double>{1.0, 0.0} - 0.5 * t;
                           return v.real();
                       };
                       auto r = mc_matrix_average(3, +1, f, samples, opts.seed + 9);
                       bool ok = std::abs(quad - 0.875) < 1e-8 &&
                                 std::abs(r.mean - 0.875) <= 4.0 * r.stderr_est;
                       std::ostringstream a;
                       a << "quad=" << quad << " mc=" << r.mean << " +-" << r.stderr_est;
                       cr.lhs = a.str();
                       cr.rhs = "7/8";
                       cr.status = ok ? "pass" : "fail";
                   }});
    out.push_back({"mc-determinism", "same flags give identical results",
                   [opts](CaseResult& cr) {
                       GroupSpec g{GroupFamily::Symplectic, 1};
                       auto f = [](const std::vector<double>& th) {
                           return 2.0 - 2.0 * std::cos(th[0]);
                       };
                       auto a = mc_eigen_average(g, f, 50000, opts.seed);
                       auto b = mc_eigen_average(g, f, 50000, opts.seed);
                       std::ostringstream s1, s2;
                       s1.precision(17);
                       s2.precision(17);
                       s1 << a.mean << "," << a.stderr_est;
                       s2 << b.mean << "," << b.stderr_est;
                       eq(cr, s1.str(), s2.str());
                   }});
}

} // namespace

std::vector<std::string> suite_names() {
    return {"symfunc", "ls", "characters", "averages", "rect", "oracle-crosscheck", "all"};
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
    Report rep;
    rep.suite = name;
    rep.seed = opts.seed;
    rep.threads = opts.threads;
    std::vector<PendingCase> pending;

    auto add = [&](const std::string& which) {
        if (which == "symfunc") build_symfunc(pending, opts);
        else if (which == "ls") build_ls(pending, opts);
        else if (which == "characters") build_characters(pending, opts);
        else if (which == "averages") build_averages(pending, opts);
        else if (which == "oracle-crosscheck") build_oracle_crosscheck(pending, opts);
        else if (which == "rect") {
            Report sub = verify_rectangular_identities(opts.max_k, opts.max_n, opts.seed, 2,
                                                       opts.degree);
            rep.cases.insert(rep.cases.end(), sub.cases.begin(), sub.cases.end());
        } else {
            throw PreconditionViolated("unknown suite '" + which + "'");
        }
    };

    if (name == "all") {
        for (const auto& s : suite_names())
            if (s != "all") add(s);
    } else {
        add(name);
    }
    run_pending(rep, pending, opts.threads);
    return rep;
}

} // namespace cpavg
