#include "cpavg/haar.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include "cpavg/errors.hpp"
#include "cpavg/prng.hpp"

namespace cpavg {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

int ClassFunction::free_vars(const GroupSpec& g) {
    switch (g.family) {
        case GroupFamily::Unitary:
        case GroupFamily::Symplectic:
        case GroupFamily::SOEven:
        case GroupFamily::SOOdd:
            return g.half_rank;
        case GroupFamily::OMinus:
            return g.half_rank - 1;
        case GroupFamily::OFull:
            throw UnsupportedGroup("O(2N) class functions split into SO and O^- parts");
    }
    return 0;
}

ClassFunction::ClassFunction(GroupSpec g, LaurentPoly b) : group(g), body(std::move(b)) {
    const int d = free_vars(g);
    if (body.nvars() != d)
        throw VariableCountMismatch("class function over " + g.name() + " needs " +
                                    std::to_string(d) + " variables");
    for (int i = 0; i + 1 < d; ++i)
        if (body.swap_vars(i, i + 1) != body)
            throw NotSymmetric("class function not permutation symmetric");
    // Full per-variable inversion symmetry is required even for SO(2N):
    // the angle parametrization on [0,pi]^N (and its density) only
    // represents functions of the unordered angle set, and the D-type
    // constant-term weight is correct a fortiori on that subspace.
    switch (g.family) {
        case GroupFamily::Symplectic:
        case GroupFamily::SOOdd:
        case GroupFamily::SOEven:
        case GroupFamily::OMinus:
            if (d >= 1 && body.invert_var(0) != body)
                throw NotSymmetric("class function not inversion symmetric");
            break;
        default:
            break;
    }
}

namespace {

LaurentPoly one_minus(int n, const LaurentPoly& m) {
    return LaurentPoly::constant(n, Rational(1)) - m;
}

LaurentPoly pair_root_factors(int n, int i, int j) {
    LaurentPoly ti = LaurentPoly::variable(n, i), tj = LaurentPoly::variable(n, j);
    LaurentPoly tii = LaurentPoly::variable(n, i, -1), tjj = LaurentPoly::variable(n, j, -1);
    return one_minus(n, ti * tj) * one_minus(n, tii * tjj) * one_minus(n, ti * tjj) *
           one_minus(n, tii * tj);
}

} // namespace

LaurentPoly haar_weight(const GroupSpec& g) {
    const int d = ClassFunction::free_vars(g);
    LaurentPoly w = LaurentPoly::constant(d, Rational(1));
    switch (g.family) {
        case GroupFamily::Unitary:
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (i != j)
                        w = w * one_minus(d, LaurentPoly::variable(d, i) *
                                                 LaurentPoly::variable(d, j, -1));
            return w;
        case GroupFamily::Symplectic:
        case GroupFamily::OMinus: // coset angles carry the C-type weight
            for (int i = 0; i < d; ++i)
                w = w * one_minus(d, LaurentPoly::variable(d, i, 2)) *
                    one_minus(d, LaurentPoly::variable(d, i, -2));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) w = w * pair_root_factors(d, i, j);
            return w;
        case GroupFamily::SOEven:
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) w = w * pair_root_factors(d, i, j);
            return w;
        case GroupFamily::SOOdd:
            for (int i = 0; i < d; ++i)
                w = w * one_minus(d, LaurentPoly::variable(d, i)) *
                    one_minus(d, LaurentPoly::variable(d, i, -1));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) w = w * pair_root_factors(d, i, j);
            return w;
        case GroupFamily::OFull:
            throw UnsupportedGroup("haar_weight for O(2N)");
    }
    throw UnsupportedGroup("haar_weight");
}

BigInt weyl_order(const GroupSpec& g) {
    auto fact = [](int n) {
        BigInt f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    BigInt two = 2;
    const int N = g.half_rank;
    switch (g.family) {
        case GroupFamily::Unitary: return fact(N);
        case GroupFamily::Symplectic:
        case GroupFamily::SOOdd: {
            BigInt p = 1;
            for (int i = 0; i < N; ++i) p *= two;
            return p * fact(N);
        }
        case GroupFamily::SOEven: {
            BigInt p = 1;
            for (int i = 0; i < N - 1; ++i) p *= two;
            return p * fact(N);
        }
        case GroupFamily::OMinus: {
            BigInt p = 1;
            for (int i = 0; i < N - 1; ++i) p *= two;
            return p * fact(N - 1);
        }
        case GroupFamily::OFull: throw UnsupportedGroup("weyl_order for O(2N)");
    }
    throw UnsupportedGroup("weyl_order");
}

double eigen_density(const GroupSpec& g, const std::vector<double>& theta) {
    const int d = ClassFunction::free_vars(g);
    if (static_cast<int>(theta.size()) != d)
        throw PreconditionViolated("eigen_density angle count");
    auto fact = [](int n) {
        double f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    double pairs = 1.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            double c = std::cos(theta[static_cast<std::size_t>(j)]) -
                       std::cos(theta[static_cast<std::size_t>(i)]);
            pairs *= c * c;
        }
    switch (g.family) {
        case GroupFamily::Unitary: {
            double v = 1.0;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    double s = 2.0 - 2.0 * std::cos(theta[static_cast<std::size_t>(i)] -
                                                    theta[static_cast<std::size_t>(j)]);
                    v *= s;
                }
            return v / (std::pow(2.0 * kPi, d) * fact(d));
        }
        case GroupFamily::Symplectic:
        case GroupFamily::OMinus: {
            double v = pairs * std::pow(2.0, d * d) / (std::pow(kPi, d) * fact(d));
            for (int i = 0; i < d; ++i) {
                double s = std::sin(theta[static_cast<std::size_t>(i)]);
                v *= s * s;
            }
            return v;
        }
        case GroupFamily::SOEven:
            return pairs * std::pow(2.0, (d - 1) * (d - 1)) / (std::pow(kPi, d) * fact(d));
        case GroupFamily::SOOdd: {
            double v = pairs * std::pow(2.0, d * d) / (std::pow(kPi, d) * fact(d));
            for (int i = 0; i < d; ++i) {
                double s = std::sin(theta[static_cast<std::size_t>(i)] / 2.0);
                v *= s * s;
            }
            return v;
        }
        case GroupFamily::OFull:
            throw UnsupportedGroup("eigen_density for O(2N)");
    }
    throw UnsupportedGroup("eigen_density");
}

void gauss_legendre(int order, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (order < 2) throw PreconditionViolated("quadrature order >= 2");
    nodes.assign(static_cast<std::size_t>(order), 0.0);
    weights.assign(static_cast<std::size_t>(order), 0.0);
    const int m = (order + 1) / 2;
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double z1 = 2.0, pp = 0.0;
        while (std::abs(z - z1) > 1e-15) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        }
        nodes[static_cast<std::size_t>(i)] = xm - xl * z;
        nodes[static_cast<std::size_t>(order - 1 - i)] = xm + xl * z;
        weights[static_cast<std::size_t>(i)] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        weights[static_cast<std::size_t>(order - 1 - i)] = weights[static_cast<std::size_t>(i)];
    }
}

double quad_average_angles(const GroupSpec& g,
                           const std::function<double(const std::vector<double>&)>& f,
                           const QuadratureSpec& spec) {
    const int d = ClassFunction::free_vars(g);
    if (d == 0) return f({});
    const double hi = g.family == GroupFamily::Unitary ? 2.0 * kPi : kPi;
    std::vector<double> nodes, weights;
    gauss_legendre(spec.order, 0.0, hi, nodes, weights);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> theta(static_cast<std::size_t>(d));
    double total = 0.0;
    for (;;) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            theta[static_cast<std::size_t>(i)] = nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            w *= weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        }
        total += w * f(theta) * eigen_density(g, theta);
        int k = 0;
        while (k < d && ++idx[static_cast<std::size_t>(k)] == spec.order) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == d) break;
    }
    return total;
}

namespace {

double eval_body_at_angles(const LaurentPoly& body, const std::vector<double>& theta) {
    // value of the Laurent polynomial at t_j = exp(i theta_j); the result is
    // real for Weyl-symmetric bodies, so the cosine parts suffice
    double v = 0.0;
    for (const auto& [e, c] : body.terms()) {
        double phase = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i)
            phase += static_cast<double>(e[i]) * theta[i];
        v += c.to_double() * std::cos(phase);
    }
    return v;
}

} // namespace

double quad_average(const ClassFunction& f, const QuadratureSpec& spec) {
    return quad_average_angles(
        f.group, [&](const std::vector<double>& th) { return eval_body_at_angles(f.body, th); },
        spec);
}

namespace {

// Lazy quadrature cross-validation of the algebraic weight for a group, as
// required before constant-term use.
std::mutex validation_mutex;
std::set<std::pair<int, int>> validated;

Rational ct_core(const ClassFunction& f) {
    LaurentPoly prod = f.body * haar_weight(f.group);
    return prod.constant_term() / Rational(weyl_order(f.group));
}

void validate_weight(const GroupSpec& g) {
    auto key = std::make_pair(static_cast<int>(g.family), g.half_rank);
    {
        std::lock_guard<std::mutex> lock(validation_mutex);
        if (validated.count(key)) return;
    }
    QuadratureSpec spec{24};
    double norm = quad_average_angles(g, [](const std::vector<double>&) { return 1.0; }, spec);
    if (std::abs(norm - 1.0) > 1e-8)
        throw std::logic_error("density for " + g.name() + " does not normalize");
    const int d = ClassFunction::free_vars(g);
    if (d > 0) {
        LaurentPoly test(d);
        for (int i = 0; i < d; ++i)
            test += LaurentPoly::variable(d, i) + LaurentPoly::variable(d, i, -1);
        test = test * test;
        ClassFunction cf(g, test);
        double exact = ct_core(cf).to_double();
        double approx = quad_average(cf, spec);
        if (std::abs(exact - approx) > 1e-6 * std::max(1.0, std::abs(exact)))
            throw std::logic_error("weight validation failed for " + g.name());
    }
    std::lock_guard<std::mutex> lock(validation_mutex);
    validated.insert(key);
}

} // namespace

Rational ct_average(const ClassFunction& f) {
    switch (f.group.family) {
        case GroupFamily::Unitary:
        case GroupFamily::Symplectic:
        case GroupFamily::SOEven:
        case GroupFamily::SOOdd:
            break;
        default:
            throw UnsupportedGroup("ct_average over " + f.group.name());
    }
    if (f.group.half_rank > 4) throw TooLarge("ct_average beyond N = 4");
    validate_weight(f.group);
    return ct_core(f);
}

McResult mc_eigen_average(const GroupSpec& g,
                          const std::function<double(const std::vector<double>&)>& f,
                          std::uint64_t samples, std::uint64_t seed) {
    const int d = ClassFunction::free_vars(g);
    if (g.family == GroupFamily::OFull) throw UnsupportedGroup("mc_eigen_average over O(2N)");
    if (samples == 0) throw PreconditionViolated("mc_eigen_average: samples == 0");
    if (d == 0) return {f({}), 0.0, samples};

    const double hi = g.family == GroupFamily::Unitary ? 2.0 * kPi : kPi;
    // analytic envelope bound for density * domain volume
    double logBound = 0.0;
    {
        double fact = 1.0;
        for (int i = 2; i <= d; ++i) fact *= i;
        double pairPow = static_cast<double>(d) * (d - 1) / 2.0;
        switch (g.family) {
            case GroupFamily::Unitary: logBound = pairPow * std::log(4.0) - std::log(fact); break;
            case GroupFamily::Symplectic:
            case GroupFamily::OMinus:
            case GroupFamily::SOOdd:
                logBound = d * d * std::log(2.0) + pairPow * std::log(4.0) - std::log(fact);
                break;
            case GroupFamily::SOEven:
                logBound = (d - 1) * (d - 1) * std::log(2.0) + pairPow * std::log(4.0) -
                           std::log(fact);
                break;
            default: throw UnsupportedGroup("mc_eigen_average");
        }
    }
    const double bound = std::exp(logBound);
    const double volume = std::pow(hi, d);

    const std::uint64_t shard_size = 1u << 15;
    const std::uint64_t nshards = (samples + shard_size - 1) / shard_size;
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t count = 0;
    std::vector<double> theta(static_cast<std::size_t>(d));
    for (std::uint64_t s = 0; s < nshards; ++s) {
        Prng rng = Prng::for_shard(seed, s);
        std::uint64_t quota = std::min(shard_size, samples - s * shard_size);
        double lsum = 0.0, lsq = 0.0;
        for (std::uint64_t i = 0; i < quota; ++i) {
            for (;;) {
                for (int k = 0; k < d; ++k) theta[static_cast<std::size_t>(k)] = rng.uniform(0.0, hi);
                double a = eigen_density(g, theta) * volume;
                if (rng.uniform01() * bound <= a) break;
            }
            double v = f(theta);
            lsum += v;
            lsq += v * v;
        }
        sum += lsum;
        sumsq += lsq;
        count += quota;
    }
    double mean = sum / static_cast<double>(count);
    double var = std::max(0.0, sumsq / static_cast<double>(count) - mean * mean);
    double se = count > 1 ? std::sqrt(var / static_cast<double>(count - 1)) : 0.0;
    return {mean, se, count};
}

McResult mc_eigen_average(const ClassFunction& f, std::uint64_t samples, std::uint64_t seed) {
    return mc_eigen_average(
        f.group, [&](const std::vector<double>& th) { return eval_body_at_angles(f.body, th); },
        samples, seed);
}

McResult mc_matrix_average(
    int dim, int det_sign,
    const std::function<double(const std::vector<std::complex<double>>&)>& f,
    std::uint64_t samples, std::uint64_t seed) {
    if (dim < 1 || dim > 8) throw PreconditionViolated("mc_matrix_average: dim in 1..8");
    if (samples == 0) throw PreconditionViolated("mc_matrix_average: samples == 0");

    const std::uint64_t shard_size = 1u << 14;
    const std::uint64_t nshards = (samples + shard_size - 1) / shard_size;
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < nshards; ++s) {
        Prng rng = Prng::for_shard(seed, s);
        std::uint64_t quota = std::min(shard_size, samples - s * shard_size);
        double lsum = 0.0, lsq = 0.0;
        for (std::uint64_t i = 0; i < quota; ++i) {
            std::vector<std::complex<double>> eig;
            for (;;) {
                Eigen::MatrixXd G(dim, dim);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) G(r, c) = rng.normal();
                Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
                Eigen::MatrixXd Q = qr.householderQ();
                Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
                for (int c = 0; c < dim; ++c)
                    if (R(c, c) < 0) Q.col(c) = -Q.col(c);
                double det = Q.determinant();
                if (det_sign != 0 && det * det_sign < 0) continue;
                Eigen::EigenSolver<Eigen::MatrixXd> es(Q, false);
                eig.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
                break;
            }
            double v = f(eig);
            lsum += v;
            lsq += v * v;
        }
        sum += lsum;
        sumsq += lsq;
        count += quota;
    }
    double mean = sum / static_cast<double>(count);
    double var = std::max(0.0, sumsq / static_cast<double>(count) - mean * mean);
    double se = count > 1 ? std::sqrt(var / static_cast<double>(count - 1)) : 0.0;
    return {mean, se, count};
}

void validate_product_query(const ProductQuery& q) {
    const bool unitary = q.group.family == GroupFamily::Unitary;
    if (unitary) {
        if (!q.x.empty()) throw PreconditionViolated("unitary products use alpha parameters");
        std::vector<Rational> all = q.alpha_inv;
        all.insert(all.end(), q.alpha.begin(), q.alpha.end());
        for (const auto& a : all)
            if (a.is_zero()) throw SingularParameters("alpha = 0");
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i] == all[j]) throw SingularParameters("repeated alpha");
        return;
    }
    if (!q.alpha.empty() || !q.alpha_inv.empty())
        throw PreconditionViolated("alpha parameters are unitary-only");
    for (const auto& x : q.x)
        if (x.is_zero()) throw SingularParameters("x = 0");
    for (std::size_t i = 0; i < q.x.size(); ++i)
        for (std::size_t j = i + 1; j < q.x.size(); ++j) {
            if (q.x[i] == q.x[j]) throw SingularParameters("repeated x");
            if ((q.x[i] * q.x[j]).is_one()) throw SingularParameters("x_i x_j = 1");
        }
    if (q.group.family == GroupFamily::Symplectic)
        for (const auto& x : q.x)
            if (x.abs().is_one()) throw SingularParameters("x = +-1 over Sp");
    if (q.group.family == GroupFamily::SOOdd)
        for (const auto& x : q.x)
            if ((q.det_plus ? -x : x).is_one())
                throw SingularParameters("unit eigenvalue parameter over SO(2N+1)");
}

ClassFunction product_integrand(const ProductQuery& q) {
    validate_product_query(q);
    const int d = ClassFunction::free_vars(q.group);
    LaurentPoly body = LaurentPoly::constant(d, Rational(1));
    const Rational sign = q.det_plus ? Rational(1) : Rational(-1);

    if (q.group.family == GroupFamily::Unitary) {
        for (const auto& a0 : q.alpha_inv) {
            Rational a = sign * a0;
            for (int v = 0; v < d; ++v)
                body = body * (LaurentPoly::constant(d, Rational(1)) +
                               a.inv() * LaurentPoly::variable(d, v, -1));
        }
        for (const auto& a0 : q.alpha) {
            Rational a = sign * a0;
            for (int v = 0; v < d; ++v)
                body = body * (LaurentPoly::constant(d, Rational(1)) +
                               a * LaurentPoly::variable(d, v));
        }
        return ClassFunction(q.group, std::move(body));
    }

    for (const auto& x0 : q.x) {
        Rational x = sign * x0;
        for (int v = 0; v < d; ++v)
            body = body *
                   (LaurentPoly::constant(d, Rational(1)) + x * LaurentPoly::variable(d, v)) *
                   (LaurentPoly::constant(d, Rational(1)) + x * LaurentPoly::variable(d, v, -1));
        if (q.group.family == GroupFamily::SOOdd)
            body.scale(Rational(1) + x);
        if (q.group.family == GroupFamily::OMinus)
            body.scale((Rational(1) + x) * (Rational(1) - x));
    }
    return ClassFunction(q.group, std::move(body));
}

void validate_ratio_query(const RatioQuery& q, bool for_ct) {
    validate_product_query(q.base);
    const bool unitary = q.base.group.family == GroupFamily::Unitary;
    auto check_small = [&](const std::vector<Rational>& ys, const char* tag) {
        for (const auto& y : ys) {
            if (y.abs() >= Rational(1))
                throw PreconditionViolated(std::string(tag) + " must satisfy |.| < 1");
            if (for_ct && y.abs() > Rational(1, 4))
                throw PreconditionViolated(std::string(tag) +
                                           " must satisfy |.| <= 1/4 for the truncated oracle");
        }
    };
    if (unitary) {
        if (!q.y.empty()) throw PreconditionViolated("unitary ratios use gamma/delta");
        check_small(q.gamma, "gamma");
        check_small(q.delta, "delta");
        const int N = q.base.group.half_rank;
        if (static_cast<int>(q.gamma.size()) > N || static_cast<int>(q.delta.size()) > N)
            throw PreconditionViolated("unitary ratio requires N >= Q and N >= R");
    } else {
        if (!q.gamma.empty() || !q.delta.empty())
            throw PreconditionViolated("gamma/delta are unitary-only");
        check_small(q.y, "y");
        if (static_cast<int>(q.y.size()) > q.base.group.half_rank)
            throw PreconditionViolated("ratio requires N >= l");
    }
}

namespace {

// coefficients of the truncated series sum_{m<=D} y^m h_m(alphabet) graded
// by m, for an alphabet of monomials/constants
std::vector<LaurentPoly> graded_h_series(int d, const std::vector<LaurentPoly>& alphabet,
                                         std::int64_t D) {
    std::vector<LaurentPoly> levels(static_cast<std::size_t>(D) + 1, LaurentPoly(d));
    levels[0] = LaurentPoly::constant(d, Rational(1));
    for (const auto& a : alphabet) {
        // multiply by 1/(1 - y a): new[m] = sum_j old[j] a^{m-j}
        std::vector<LaurentPoly> next(static_cast<std::size_t>(D) + 1, LaurentPoly(d));
        for (std::int64_t m = 0; m <= D; ++m) {
            LaurentPoly acc(d);
            LaurentPoly apow = LaurentPoly::constant(d, Rational(1));
            for (std::int64_t j = m; j >= 0; --j) {
                acc += levels[static_cast<std::size_t>(j)] * apow;
                if (j > 0) apow = apow * a;
            }
            next[static_cast<std::size_t>(m)] = std::move(acc);
        }
        levels = std::move(next);
    }
    return levels;
}

} // namespace

ClassFunction truncated_ratio_integrand(const RatioQuery& q, std::int64_t D) {
    if (D < 1) throw PreconditionViolated("truncation degree >= 1");
    validate_ratio_query(q, true);
    const GroupSpec g = q.base.group;
    const int d = ClassFunction::free_vars(g);
    LaurentPoly body = product_integrand(q.base).body;

    auto fold_series = [&](const Rational& yval, const std::vector<LaurentPoly>& alphabet) {
        auto levels = graded_h_series(d, alphabet, D);
        LaurentPoly series(d);
        for (std::int64_t m = 0; m <= D; ++m) {
            LaurentPoly lvl = levels[static_cast<std::size_t>(m)];
            lvl.scale(yval.pow(m));
            series += lvl;
        }
        body = body * series;
    };

    switch (g.family) {
        case GroupFamily::Unitary: {
            std::vector<LaurentPoly> ts, tinvs;
            for (int v = 0; v < d; ++v) {
                ts.push_back(LaurentPoly::variable(d, v));
                tinvs.push_back(LaurentPoly::variable(d, v, -1));
            }
            for (const auto& gam : q.gamma) fold_series(gam, ts);
            for (const auto& del : q.delta) fold_series(del, tinvs);
            break;
        }
        case GroupFamily::Symplectic:
        case GroupFamily::SOEven:
        case GroupFamily::SOOdd:
        case GroupFamily::OMinus: {
            std::vector<LaurentPoly> alphabet;
            for (int v = 0; v < d; ++v) {
                alphabet.push_back(LaurentPoly::variable(d, v));
                alphabet.push_back(LaurentPoly::variable(d, v, -1));
            }
            if (g.family == GroupFamily::SOOdd)
                alphabet.push_back(LaurentPoly::constant(d, Rational(1)));
            if (g.family == GroupFamily::OMinus) {
                alphabet.push_back(LaurentPoly::constant(d, Rational(1)));
                alphabet.push_back(LaurentPoly::constant(d, Rational(-1)));
            }
            for (const auto& yv : q.y) fold_series(yv, alphabet);
            break;
        }
        case GroupFamily::OFull:
            throw UnsupportedGroup("truncated_ratio_integrand over O(2N)");
    }
    return ClassFunction(g, std::move(body));
}

Rational ct_product_average(const ProductQuery& q) {
    if (q.group.family == GroupFamily::OFull) {
        // O(2N) is the disjoint union of SO(2N) and its coset
        ProductQuery qa = q, qb = q;
        qa.group.family = GroupFamily::SOEven;
        qb.group.family = GroupFamily::OMinus;
        return (ct_product_average(qa) + ct_product_average(qb)) / Rational(2);
    }
    ClassFunction f = product_integrand(q);
    if (f.group.family != GroupFamily::OMinus) return ct_average(f);
    // O^-(2N): fixed +1,-1 eigenvalues are folded into the integrand; the
    // remaining N-1 angle pairs carry the C-type weight.
    LaurentPoly prod = f.body * haar_weight(f.group);
    return prod.constant_term() / Rational(weyl_order(f.group));
}

Rational ct_ratio_average(const RatioQuery& q, std::int64_t D) {
    if (D < 1) throw PreconditionViolated("truncation degree >= 1");
    if (q.base.group.family == GroupFamily::OFull) {
        RatioQuery qa = q, qb = q;
        qa.base.group.family = GroupFamily::SOEven;
        qb.base.group.family = GroupFamily::OMinus;
        return (ct_ratio_average(qa, D) + ct_ratio_average(qb, D)) / Rational(2);
    }
    validate_ratio_query(q, /*for_truncated_oracle=*/true);
    const GroupSpec g = q.base.group;
    const int d = ClassFunction::free_vars(g);
    const bool unitary = g.family == GroupFamily::Unitary;

    // P = product integrand * Weyl weight; the truncated denominator series
    // is folded in per variable via coefficient convolution.  Each factor
    // 1/((1-y t)(1-y/t)) (resp. 1/(1-y t)) is truncated at order D in y; on
    // |t| = 1 and |y| <= 1/4 the dropped tail per factor is below
    // sum_{m>D} (m+1) 4^{-m}, i.e. ~5e-17 at D = 30.
    LaurentPoly P = product_integrand(q.base).body * haar_weight(g);

    Rational prefactor(1);
    if (g.family == GroupFamily::SOOdd)
        for (const auto& yv : q.y) prefactor /= (Rational(1) - yv);
    if (g.family == GroupFamily::OMinus)
        for (const auto& yv : q.y) prefactor /= (Rational(1) - yv) * (Rational(1) + yv);

    // per-variable series coefficient arrays on exponent range [-lD, lD]
    const std::vector<Rational>& ys = unitary ? q.gamma : q.y;
    const std::vector<Rational>& ds = q.delta;
    const std::int64_t nfac = unitary ? static_cast<std::int64_t>(ys.size() + ds.size())
                                      : static_cast<std::int64_t>(ys.size());
    const std::int64_t range = std::max<std::int64_t>(1, nfac) * D;
    auto conv_index = [&](std::int64_t e) { return static_cast<std::size_t>(e + range); };

    std::vector<Rational> folded(static_cast<std::size_t>(2 * range + 1), Rational(0));
    folded[conv_index(0)] = Rational(1);
    auto fold = [&](const std::function<Rational(std::int64_t)>& coeff, std::int64_t lo,
                    std::int64_t hi) {
        std::vector<Rational> next(folded.size(), Rational(0));
        for (std::int64_t e = -range; e <= range; ++e) {
            const Rational& cur = folded[conv_index(e)];
            if (cur.is_zero()) continue;
            for (std::int64_t m = lo; m <= hi; ++m) {
                std::int64_t target = e + m;
                if (target < -range || target > range) continue;
                Rational c = coeff(m);
                if (c.is_zero()) continue;
                next[conv_index(target)] += cur * c;
            }
        }
        folded = std::move(next);
    };

    // Build one folded array per variable (they are identical across
    // variables only for equal parameter sets, so compute per variable).
    std::vector<std::vector<Rational>> per_var;
    for (int v = 0; v < d; ++v) {
        folded.assign(static_cast<std::size_t>(2 * range + 1), Rational(0));
        folded[conv_index(0)] = Rational(1);
        if (unitary) {
            for (const auto& gam : q.gamma)
                fold([&](std::int64_t m) { return m >= 0 ? gam.pow(m) : Rational(0); }, 0, D);
            for (const auto& del : q.delta)
                fold([&](std::int64_t m) { return m <= 0 ? del.pow(-m) : Rational(0); }, -D, 0);
        } else {
            for (const auto& yv : q.y)
                fold(
                    [&](std::int64_t m) {
                        // coefficient of t^m in sum_{j<=D} y^j h_j(t, 1/t)
                        Rational acc(0);
                        for (std::int64_t j = m < 0 ? -m : m; j <= D; j += 2) acc += yv.pow(j);
                        return acc;
                    },
                    -D, D);
        }
        per_var.push_back(folded);
    }

    Rational total(0);
    for (const auto& [e, c] : P.terms()) {
        Rational term = c;
        bool dead = false;
        for (int v = 0; v < d && !dead; ++v) {
            std::int64_t want = -e[static_cast<std::size_t>(v)];
            if (want < -range || want > range) { dead = true; break; }
            const Rational& cv = per_var[static_cast<std::size_t>(v)][conv_index(want)];
            if (cv.is_zero()) { dead = true; break; }
            term *= cv;
        }
        if (!dead) total += term;
    }
    return prefactor * total / Rational(weyl_order(g));
}

} // namespace cpavg
