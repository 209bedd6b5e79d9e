// Command-line front end: exact moments and averages of characteristic
// polynomials over the compact classical groups, plus the verification
// suites.  Output is one JSON record per line; rationals are printed as
// "p/q" strings so exactness survives the pipe.
//
// Exit codes: 0 success, 1 unexpected verification failure, 2 bad flags,
// 3 unsupported group, 4 singular parameters, 5 precondition violated.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "cpavg/averages.hpp"
#include "cpavg/errors.hpp"
#include "cpavg/haar.hpp"
#include "cpavg/suites.hpp"

using json = nlohmann::ordered_json;
using namespace cpavg;

namespace {

std::vector<Rational> parse_rationals(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(Rational::parse(s));
    return out;
}

json report_to_json(const Report& rep) {
    json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["threads"] = rep.threads;
    j["summary"] = {{"pass", rep.count("pass")},
                    {"fail", rep.count("fail")},
                    {"expected_fail", rep.count("expected-fail")},
                    {"error", rep.count("error")}};
    j["cases"] = json::array();
    for (const auto& c : rep.cases) {
        j["cases"].push_back({{"id", c.id},
                              {"params", c.params},
                              {"status", c.status},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"elapsed_ms", c.elapsed_ms}});
    }
    return j;
}

// class function det(I - g)^k over the free eigenvalue variables
ClassFunction det_one_minus_pow(const GroupSpec& g, int k) {
    const int d = ClassFunction::free_vars(g);
    LaurentPoly body = LaurentPoly::constant(d, Rational(1));
    LaurentPoly factor = LaurentPoly::constant(d, Rational(1));
    for (int v = 0; v < d; ++v)
        factor = factor *
                 (LaurentPoly::constant(d, Rational(1)) - LaurentPoly::variable(d, v)) *
                 (LaurentPoly::constant(d, Rational(1)) - LaurentPoly::variable(d, v, -1));
    for (int rep = 0; rep < k; ++rep) body = body * factor;
    return ClassFunction(g, body);
}

int run_moment(const std::string& group, int n, int k, const std::string& method, int order,
               std::uint64_t samples, std::uint64_t seed) {
    GroupSpec g = GroupSpec::parse(group, n);
    json rec;
    rec["cmd"] = "moment";
    rec["group"] = g.name();
    rec["n"] = n;
    rec["k"] = k;
    rec["method"] = method;

    if (method == "closed") {
        AverageResult r = moment(g, k);
        rec["value_exact"] = r.value.str();
        rec["form"] = r.method;
    } else if (method == "ct") {
        Rational v;
        switch (g.family) {
            case GroupFamily::SOOdd:
            case GroupFamily::OMinus:
                v = k == 0 ? Rational(1) : Rational(0); // unit eigenvalue
                break;
            case GroupFamily::OFull:
                v = ct_average(det_one_minus_pow(GroupSpec{GroupFamily::SOEven, n}, k)) /
                    Rational(2);
                break;
            default:
                v = ct_average(det_one_minus_pow(g, k));
        }
        rec["value_exact"] = v.str();
        AverageResult closed = moment(g, k);
        if (closed.value != v) throw std::logic_error("closed and ct moments disagree");
        rec["agrees_with_closed"] = true;
    } else if (method == "quad") {
        QuadratureSpec spec{order};
        double v = 0.0;
        auto integrand = [k](const std::vector<double>& th) {
            double p = 1.0;
            for (double t : th) p *= 2.0 - 2.0 * std::cos(t);
            double out = 1.0;
            for (int i = 0; i < k; ++i) out *= p;
            return out;
        };
        switch (g.family) {
            case GroupFamily::SOOdd:
            case GroupFamily::OMinus: v = k == 0 ? 1.0 : 0.0; break;
            case GroupFamily::OFull:
                v = 0.5 * quad_average_angles(GroupSpec{GroupFamily::SOEven, n}, integrand, spec);
                break;
            default: v = quad_average_angles(g, integrand, spec);
        }
        rec["value_float"] = v;
        rec["order"] = order;
    } else if (method == "mc") {
        McResult r;
        auto on_eigs = [k](const std::vector<std::complex<double>>& eig) {
            std::complex<double> p{1.0, 0.0};
            for (const auto& t : eig) p *= std::complex<double>{1.0, 0.0} - t;
            double out = 1.0;
            for (int i = 0; i < k; ++i) out *= p.real();
            return out;
        };
        switch (g.family) {
            case GroupFamily::OFull:
                r = mc_matrix_average(g.matrix_size(), 0, on_eigs, samples, seed);
                break;
            case GroupFamily::OMinus:
                r = mc_matrix_average(g.matrix_size(), -1, on_eigs, samples, seed);
                break;
            default: {
                auto f = [k, &g](const std::vector<double>& th) {
                    double p = 1.0;
                    for (double t : th) p *= 2.0 - 2.0 * std::cos(t);
                    if (g.family == GroupFamily::SOOdd) p *= 0.0; // unit eigenvalue
                    double out = 1.0;
                    for (int i = 0; i < k; ++i) out *= p;
                    return out;
                };
                if (g.family == GroupFamily::SOOdd && k > 0)
                    r = McResult{0.0, 0.0, samples};
                else
                    r = mc_eigen_average(g, f, samples, seed);
            }
        }
        rec["value_float"] = r.mean;
        rec["stderr"] = r.stderr_est;
        rec["samples"] = r.samples;
        rec["seed"] = seed;
    } else {
        throw CLI::ValidationError("--method must be closed|ct|quad|mc");
    }
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_average(const std::string& kind, const std::string& group, int n,
                const std::vector<std::string>& xs, const std::vector<std::string>& ys,
                const std::vector<std::string>& alpha_inv, const std::vector<std::string>& alpha,
                const std::vector<std::string>& gammas, const std::vector<std::string>& deltas,
                const std::string& sign, bool check_ct, std::int64_t trunc_degree) {
    RatioQuery q;
    q.base.group = GroupSpec::parse(group, n);
    q.base.x = parse_rationals(xs);
    q.base.alpha_inv = parse_rationals(alpha_inv);
    q.base.alpha = parse_rationals(alpha);
    q.base.det_plus = sign != "minus";
    q.gamma = parse_rationals(gammas);
    q.delta = parse_rationals(deltas);
    q.y = parse_rationals(ys);

    const bool is_ratio = kind == "ratio";
    if (!is_ratio && (!q.y.empty() || !q.gamma.empty() || !q.delta.empty()))
        throw CLI::ValidationError("product queries take no denominator parameters");

    AverageResult r = is_ratio ? ratio_average(q) : product_average(q.base);
    json rec;
    rec["cmd"] = "average";
    rec["kind"] = kind;
    rec["group"] = q.base.group.name();
    rec["n"] = n;
    rec["params"] = r.params;
    rec["method"] = r.method;
    rec["value_exact"] = r.value.str();
    if (!is_ratio) rec["character_form"] = r.character_form.str();

    if (check_ct) {
        bool denominators = !(q.y.empty() && q.gamma.empty() && q.delta.empty());
        if (!denominators) {
            Rational oracle = ct_product_average(q.base);
            rec["oracle"] = "ct-exact";
            rec["oracle_value"] = oracle.str();
            rec["agrees"] = oracle == r.value;
            if (oracle != r.value) throw std::logic_error("closed form disagrees with ct oracle");
        } else {
            Rational oracle = ct_ratio_average(q, trunc_degree);
            double diff = std::abs((oracle - r.value).to_double());
            rec["oracle"] = "ct-truncated";
            rec["oracle_degree"] = trunc_degree;
            rec["oracle_value"] = oracle.str();
            rec["difference"] = diff;
            rec["tolerance"] = 1e-9;
            if (diff > 1e-9) throw std::logic_error("closed form disagrees with truncated ct oracle");
        }
    }
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int max_k, int max_n, std::uint64_t seed, int threads,
               std::int64_t degree, std::uint64_t mc_samples, const std::string& report_path) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw CLI::ValidationError("--suite must be one of symfunc|ls|characters|averages|rect|oracle-crosscheck|all");
    SuiteOptions opts;
    opts.max_k = max_k;
    opts.max_n = max_n;
    opts.seed = seed;
    opts.threads = threads;
    opts.degree = degree;
    if (mc_samples) opts.mc_samples = mc_samples;
    Report rep = run_suite(suite, opts);
    for (const auto& c : rep.cases) {
        json rec;
        rec["cmd"] = "verify";
        rec["suite"] = rep.suite;
        rec["id"] = c.id;
        rec["params"] = c.params;
        rec["status"] = c.status;
        if (c.status != "pass") {
            rec["lhs"] = c.lhs;
            rec["rhs"] = c.rhs;
        }
        std::cout << rec.dump() << "\n";
    }
    json summary;
    summary["cmd"] = "verify-summary";
    summary["suite"] = rep.suite;
    summary["seed"] = rep.seed;
    summary["threads"] = rep.threads;
    summary["pass"] = rep.count("pass");
    summary["fail"] = rep.count("fail");
    summary["expected_fail"] = rep.count("expected-fail");
    summary["error"] = rep.count("error");
    summary["ok"] = rep.ok();
    std::cout << summary.dump() << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report_to_json(rep).dump(2) << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic-polynomial averages over compact classical groups"};
    app.require_subcommand(1);

    // moment
    auto* mom = app.add_subcommand("moment", "E det(I-g)^k as an exact rational");
    std::string m_group;
    int m_n = 1, m_k = 1, m_order = 40;
    std::string m_method = "closed";
    std::uint64_t m_samples = 1000000, m_seed = 1;
    mom->add_option("--group", m_group, "u | sp | so-even | so-odd | o | o-minus")->required();
    mom->add_option("--n", m_n, "half-rank N")->required();
    mom->add_option("--k", m_k, "moment order")->required();
    mom->add_option("--method", m_method, "closed | ct | quad | mc");
    mom->add_option("--order", m_order, "quadrature order per angle");
    mom->add_option("--samples", m_samples, "Monte Carlo samples");
    mom->add_option("--seed", m_seed, "Monte Carlo seed");

    // average
    auto* avg = app.add_subcommand("average", "product or ratio average");
    std::string a_kind, a_group, a_sign = "plus";
    int a_n = 1;
    std::vector<std::string> a_x, a_y, a_ainv, a_adir, a_gamma, a_delta;
    bool a_check = false;
    std::int64_t a_degree = 30;
    avg->add_option("kind", a_kind, "product | ratio")->required();
    avg->add_option("--group", a_group, "u | sp | so-even | so-odd | o | o-minus")->required();
    avg->add_option("--n", a_n, "half-rank N")->required();
    avg->add_option("--x", a_x, "numerator parameter (repeatable, rational p/q)");
    avg->add_option("--y", a_y, "denominator parameter, |y| < 1 (repeatable)");
    avg->add_option("--alpha-inv", a_ainv, "unitary inverse-side parameter (repeatable)");
    avg->add_option("--alpha", a_adir, "unitary direct-side parameter (repeatable)");
    avg->add_option("--gamma", a_gamma, "unitary denominator parameter (repeatable)");
    avg->add_option("--delta", a_delta, "unitary inverse denominator parameter (repeatable)");
    avg->add_option("--sign", a_sign, "plus: det(I+xg), minus: det(I-xg)");
    avg->add_flag("--check-ct", a_check, "cross-check against the constant-term oracle");
    avg->add_option("--trunc-degree", a_degree, "oracle truncation degree for ratios");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite = "all", v_report;
    int v_maxk = 2, v_maxn = 2, v_threads = 1;
    std::uint64_t v_seed = 1, v_samples = 0;
    std::int64_t v_degree = 6;
    ver->add_option("--suite", v_suite, "symfunc | ls | characters | averages | rect | oracle-crosscheck | all");
    ver->add_option("--max-k", v_maxk, "largest number of numerator parameters");
    ver->add_option("--max-n", v_maxn, "largest half-rank");
    ver->add_option("--seed", v_seed, "seed for the generic-point sampler");
    ver->add_option("--threads", v_threads, "worker threads (deterministic reduction)");
    ver->add_option("--degree", v_degree, "series truncation degree");
    ver->add_option("--mc-samples", v_samples, "Monte Carlo sample override");
    ver->add_option("--report", v_report, "write the full JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mom->parsed())
            return run_moment(m_group, m_n, m_k, m_method, m_order, m_samples, m_seed);
        if (avg->parsed()) {
            if (a_kind != "product" && a_kind != "ratio")
                throw CLI::ValidationError("kind must be product or ratio");
            return run_average(a_kind, a_group, a_n, a_x, a_y, a_ainv, a_adir, a_gamma,
                               a_delta, a_sign, a_check, a_degree);
        }
        if (ver->parsed())
            return run_verify(v_suite, v_maxk, v_maxn, v_seed, v_threads, v_degree, v_samples,
                              v_report);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnsupportedGroup& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const TooLarge& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const SingularParameters& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const PreconditionViolated& e) {
        std::cerr << e.what() << "\n";
        return 5;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
