#include "tailscope/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace tailscope {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2Pi = 0.3989422804014326779; // 1/sqrt(2*pi)

double phi_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }
double phi_tail(double z) { return 0.5 * std::erfc(z / kSqrt2); }
double phi_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

void require(bool ok, const char* msg) {
    if (!ok) throw parameter_error(msg);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

void DistributionModel::validate() const {
    std::visit(overloaded{
                   [](const Gaussian& g) {
                       require(finite(g.mean), "gaussian: mean must be finite");
                       require(finite(g.sigma) && g.sigma > 0.0, "gaussian: sigma must be > 0");
                   },
                   [](const Laplace& l) {
                       require(finite(l.scale) && l.scale > 0.0, "laplace: scale must be > 0");
                   },
                   [](const SymmetricStable& s) {
                       require(finite(s.alpha) && s.alpha > 0.0 && s.alpha <= 2.0,
                               "stable: alpha must be in (0,2]");
                   },
                   [](const Pareto& p) {
                       require(finite(p.alpha) && p.alpha > 0.0, "pareto: alpha must be > 0");
                       require(finite(p.xm) && p.xm > 0.0, "pareto: xm must be > 0");
                   },
                   [](const ReciprocalPareto& r) {
                       require(finite(r.alpha) && r.alpha > 0.0,
                               "reciprocal_pareto: alpha must be > 0");
                   },
                   [](const SymmetricReciprocalPareto& r) {
                       require(finite(r.alpha) && r.alpha > 0.0,
                               "symmetric_reciprocal_pareto: alpha must be > 0");
                   },
                   [](const PutTailDown& t) {
                       require(t.base != nullptr, "put_tail_down: base model required");
                       require(finite(t.p) && t.p > 0.0 && t.p < 1.0,
                               "put_tail_down: p must be in (0,1)");
                       require(is_symmetric(*t.base), "put_tail_down: base must be symmetric");
                       require(has_finite_variance(*t.base),
                               "put_tail_down: base must have finite variance");
                   },
                   [](const ThreePointExtremal& e) {
                       require(finite(e.sigma) && e.sigma > 0.0,
                               "three_point_extremal: sigma must be > 0");
                       require(finite(e.k) && e.k > 1.0, "three_point_extremal: k must be > 1");
                   },
               },
               v_);
}

// ---------------------------------------------------------------------------
// cdf / tails / density
// ---------------------------------------------------------------------------

double cdf(const DistributionModel& m, double x) {
    return std::visit(
        overloaded{
            [x](const Gaussian& g) { return phi_cdf((x - g.mean) / g.sigma); },
            [x](const Laplace& l) {
                return x < 0.0 ? 0.5 * std::exp(x / l.scale)
                               : 1.0 - 0.5 * std::exp(-x / l.scale);
            },
            [x](const SymmetricStable& s) {
                if (s.alpha == 2.0) return phi_cdf(x / kSqrt2);
                if (s.alpha == 1.0) return 0.5 + std::atan(x) / kPi;
                throw unsupported_error("stable cdf: closed form only for alpha in {1,2}");
            },
            [x](const Pareto& p) {
                return x <= p.xm ? 0.0 : 1.0 - std::pow(p.xm / x, p.alpha);
            },
            [x](const ReciprocalPareto& r) {
                if (x <= 0.0) return 0.0;
                if (x >= 1.0) return 1.0;
                return std::pow(x, r.alpha);
            },
            [x](const SymmetricReciprocalPareto& r) {
                if (x <= -1.0) return 0.0;
                if (x >= 1.0) return 1.0;
                return x < 0.0 ? 0.5 * (1.0 - std::pow(-x, r.alpha))
                               : 0.5 * (1.0 + std::pow(x, r.alpha));
            },
            [x](const PutTailDown& t) {
                return (1.0 - t.p) * cdf(*t.base, x) + (x >= 0.0 ? t.p : 0.0);
            },
            [x](const ThreePointExtremal& e) {
                const double ks = e.k * e.sigma;
                const double q = 0.5 / (e.k * e.k);
                if (x < -ks) return 0.0;
                if (x < 0.0) return q;
                if (x < ks) return 1.0 - q;
                return 1.0;
            },
        },
        m.variant());
}

double cdf_left(const DistributionModel& m, double x) {
    return std::visit(
        overloaded{
            [x](const PutTailDown& t) {
                return (1.0 - t.p) * cdf_left(*t.base, x) + (x > 0.0 ? t.p : 0.0);
            },
            [x](const ThreePointExtremal& e) {
                const double ks = e.k * e.sigma;
                const double q = 0.5 / (e.k * e.k);
                if (x <= -ks) return 0.0;
                if (x <= 0.0) return q;
                if (x <= ks) return 1.0 - q;
                return 1.0;
            },
            [&m, x](const auto&) { return cdf(m, x); },
        },
        m.variant());
}

double upper_tail(const DistributionModel& m, double x) {
    return std::visit(
        overloaded{
            [x](const Gaussian& g) { return phi_tail((x - g.mean) / g.sigma); },
            [x](const Laplace& l) {
                return x >= 0.0 ? 0.5 * std::exp(-x / l.scale)
                                : 1.0 - 0.5 * std::exp(x / l.scale);
            },
            [x](const SymmetricStable& s) {
                if (s.alpha == 2.0) return phi_tail(x / kSqrt2);
                if (s.alpha == 1.0)
                    return x > 0.0 ? std::atan(1.0 / x) / kPi : 0.5 - std::atan(x) / kPi;
                throw unsupported_error("stable tail: closed form only for alpha in {1,2}");
            },
            [x](const Pareto& p) { return x <= p.xm ? 1.0 : std::pow(p.xm / x, p.alpha); },
            [&m, x](const ReciprocalPareto&) { return 1.0 - cdf(m, x); },
            [x](const SymmetricReciprocalPareto& r) {
                if (x <= -1.0) return 1.0;
                if (x >= 1.0) return 0.0;
                return x < 0.0 ? 0.5 * (1.0 + std::pow(-x, r.alpha))
                               : 0.5 * (1.0 - std::pow(x, r.alpha));
            },
            [x](const PutTailDown& t) {
                return (1.0 - t.p) * upper_tail(*t.base, x) + (x < 0.0 ? t.p : 0.0);
            },
            [x](const ThreePointExtremal& e) {
                const double ks = e.k * e.sigma;
                const double q = 0.5 / (e.k * e.k);
                if (x < -ks) return 1.0;
                if (x < 0.0) return 1.0 - q;
                if (x < ks) return q;
                return 0.0;
            },
        },
        m.variant());
}

double pdf(const DistributionModel& m, double x) {
    return std::visit(
        overloaded{
            [x](const Gaussian& g) { return phi_pdf((x - g.mean) / g.sigma) / g.sigma; },
            [x](const Laplace& l) {
                return std::exp(-std::abs(x) / l.scale) / (2.0 * l.scale);
            },
            [x](const SymmetricStable& s) {
                if (s.alpha == 2.0) return phi_pdf(x / kSqrt2) / kSqrt2;
                if (s.alpha == 1.0) return 1.0 / (kPi * (1.0 + x * x));
                throw unsupported_error("stable pdf: closed form only for alpha in {1,2}");
            },
            [x](const Pareto& p) {
                if (x < p.xm) return 0.0;
                return (p.alpha / p.xm) * std::pow(p.xm / x, p.alpha + 1.0);
            },
            [x](const ReciprocalPareto& r) {
                if (x <= 0.0 || x >= 1.0) return 0.0;
                return r.alpha * std::pow(x, r.alpha - 1.0);
            },
            [x](const SymmetricReciprocalPareto& r) {
                const double a = std::abs(x);
                if (a >= 1.0) return 0.0;
                return 0.5 * r.alpha * std::pow(a, r.alpha - 1.0);
            },
            [&, x](const PutTailDown& t) {
                if (x == 0.0) throw atomic_point_error("put_tail_down: atom at 0");
                return (1.0 - t.p) * pdf(*t.base, x);
            },
            [x](const ThreePointExtremal& e) {
                const double ks = e.k * e.sigma;
                if (x == 0.0 || x == ks || x == -ks)
                    throw atomic_point_error("three_point_extremal: density requested at an atom");
                return 0.0;
            },
        },
        m.variant());
}

// ---------------------------------------------------------------------------
// moments and structural queries
// ---------------------------------------------------------------------------

double mean(const DistributionModel& m) {
    return std::visit(
        overloaded{
            [](const Gaussian& g) { return g.mean; },
            [](const Laplace&) { return 0.0; },
            [](const SymmetricStable& s) {
                if (s.alpha > 1.0) return 0.0;
                throw parameter_error("stable: mean undefined for alpha <= 1");
            },
            [](const Pareto& p) {
                if (p.alpha > 1.0) return p.alpha * p.xm / (p.alpha - 1.0);
                throw parameter_error("pareto: mean infinite for alpha <= 1");
            },
            [](const ReciprocalPareto& r) { return r.alpha / (r.alpha + 1.0); },
            [](const SymmetricReciprocalPareto&) { return 0.0; },
            [](const PutTailDown& t) { return (1.0 - t.p) * mean(*t.base); },
            [](const ThreePointExtremal&) { return 0.0; },
        },
        m.variant());
}

double variance(const DistributionModel& m) {
    return std::visit(
        overloaded{
            [](const Gaussian& g) { return g.sigma * g.sigma; },
            [](const Laplace& l) { return 2.0 * l.scale * l.scale; },
            [](const SymmetricStable& s) {
                if (s.alpha == 2.0) return 2.0;
                throw parameter_error("stable: variance infinite for alpha < 2");
            },
            [](const Pareto& p) {
                if (p.alpha > 2.0)
                    return p.alpha * p.xm * p.xm /
                           ((p.alpha - 1.0) * (p.alpha - 1.0) * (p.alpha - 2.0));
                throw parameter_error("pareto: variance infinite for alpha <= 2");
            },
            [](const ReciprocalPareto& r) {
                const double ex = r.alpha / (r.alpha + 1.0);
                return r.alpha / (r.alpha + 2.0) - ex * ex;
            },
            [](const SymmetricReciprocalPareto& r) { return r.alpha / (2.0 + r.alpha); },
            [](const PutTailDown& t) { return (1.0 - t.p) * variance(*t.base); },
            [](const ThreePointExtremal& e) { return e.sigma * e.sigma; },
        },
        m.variant());
}

double stddev(const DistributionModel& m) { return std::sqrt(variance(m)); }

bool is_symmetric(const DistributionModel& m) {
    return std::visit(overloaded{
                          [](const Gaussian& g) { return g.mean == 0.0; },
                          [](const Laplace&) { return true; },
                          [](const SymmetricStable&) { return true; },
                          [](const Pareto&) { return false; },
                          [](const ReciprocalPareto&) { return false; },
                          [](const SymmetricReciprocalPareto&) { return true; },
                          [](const PutTailDown& t) { return is_symmetric(*t.base); },
                          [](const ThreePointExtremal&) { return true; },
                      },
                      m.variant());
}

bool has_finite_variance(const DistributionModel& m) {
    return std::visit(overloaded{
                          [](const Gaussian&) { return true; },
                          [](const Laplace&) { return true; },
                          [](const SymmetricStable& s) { return s.alpha == 2.0; },
                          [](const Pareto& p) { return p.alpha > 2.0; },
                          [](const ReciprocalPareto&) { return true; },
                          [](const SymmetricReciprocalPareto&) { return true; },
                          [](const PutTailDown& t) { return has_finite_variance(*t.base); },
                          [](const ThreePointExtremal&) { return true; },
                      },
                      m.variant());
}

bool has_evaluable_density(const DistributionModel& m) {
    return std::visit(overloaded{
                          [](const SymmetricStable& s) { return s.alpha == 1.0 || s.alpha == 2.0; },
                          [](const PutTailDown&) { return false; },
                          [](const ThreePointExtremal&) { return false; },
                          [](const auto&) { return true; },
                      },
                      m.variant());
}

Interval support(const DistributionModel& m) {
    return std::visit(
        overloaded{
            [](const Gaussian&) { return Interval{-kInf, kInf}; },
            [](const Laplace&) { return Interval{-kInf, kInf}; },
            [](const SymmetricStable&) { return Interval{-kInf, kInf}; },
            [](const Pareto& p) { return Interval{p.xm, kInf}; },
            [](const ReciprocalPareto&) { return Interval{0.0, 1.0}; },
            [](const SymmetricReciprocalPareto&) { return Interval{-1.0, 1.0}; },
            [](const PutTailDown& t) {
                Interval b = support(*t.base);
                return Interval{std::min(b.lo, 0.0), std::max(b.hi, 0.0)};
            },
            [](const ThreePointExtremal& e) {
                return Interval{-e.k * e.sigma, e.k * e.sigma};
            },
        },
        m.variant());
}

Interval abs_support(const DistributionModel& m) {
    const Interval s = support(m);
    if (s.lo >= 0.0) return s;
    if (s.hi <= 0.0) return Interval{-s.hi, -s.lo};
    return Interval{0.0, std::max(-s.lo, s.hi)};
}

std::optional<double> tail_index_at_infinity(const DistributionModel& m) {
    return std::visit(
        overloaded{
            [](const Pareto& p) { return std::optional<double>(p.alpha); },
            [](const SymmetricStable& s) {
                return s.alpha < 2.0 ? std::optional<double>(s.alpha) : std::nullopt;
            },
            [](const auto&) { return std::optional<double>(); },
        },
        m.variant());
}

std::optional<double> tail_index_at_zero(const DistributionModel& m) {
    return std::visit(
        overloaded{
            [](const ReciprocalPareto& r) { return std::optional<double>(r.alpha); },
            [](const SymmetricReciprocalPareto& r) { return std::optional<double>(r.alpha); },
            // Positive continuous density of |X| at 0+ means regular
            // variation with exponent 0, i.e. index 1.
            [](const Gaussian&) { return std::optional<double>(1.0); },
            [](const Laplace&) { return std::optional<double>(1.0); },
            [](const SymmetricStable&) { return std::optional<double>(1.0); },
            [](const auto&) { return std::optional<double>(); },
        },
        m.variant());
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

double sample_one(const DistributionModel& m, RngStream& rng) {
    return std::visit(
        overloaded{
            [&rng](const Gaussian& g) {
                const double u1 = rng.u01();
                const double u2 = rng.u01();
                return g.mean +
                       g.sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
            },
            [&rng](const Laplace& l) {
                const double c = rng.u01() - 0.5;
                const double mag = -l.scale * std::log(1.0 - 2.0 * std::abs(c));
                return c < 0.0 ? -mag : mag;
            },
            [&rng](const SymmetricStable& s) {
                // Chambers-Mallows-Stuck transform, symmetric case. Exact for
                // all alpha in (0,2]; reduces to tan(theta) at alpha=1 and to
                // 2*sin(theta)*sqrt(w) ~ N(0,2) at alpha=2.
                const double theta = kPi * (rng.u01() - 0.5);
                const double w = -std::log(rng.u01());
                const double a = s.alpha;
                return std::sin(a * theta) * std::pow(std::cos(theta), -1.0 / a) *
                       std::pow(std::cos((1.0 - a) * theta) / w, (1.0 - a) / a);
            },
            [&rng](const Pareto& p) { return p.xm * std::pow(rng.u01(), -1.0 / p.alpha); },
            [&rng](const ReciprocalPareto& r) { return std::pow(rng.u01(), 1.0 / r.alpha); },
            [&rng](const SymmetricReciprocalPareto& r) {
                const double mag = std::pow(rng.u01(), 1.0 / r.alpha);
                return rng.u01() < 0.5 ? -mag : mag;
            },
            [&rng](const PutTailDown& t) {
                if (rng.u01() < t.p) return 0.0;
                return sample_one(*t.base, rng);
            },
            [&rng](const ThreePointExtremal& e) {
                const double q = 0.5 / (e.k * e.k);
                const double u = rng.u01();
                if (u < q) return -e.k * e.sigma;
                if (u < 2.0 * q) return e.k * e.sigma;
                return 0.0;
            },
        },
        m.variant());
}

void sample_into(const DistributionModel& m, std::span<double> out, RngStream& rng) {
    for (double& v : out) v = sample_one(m, rng);
}

SampleBatch sample(const DistributionModel& m, std::size_t n, std::uint64_t master_seed,
                   std::uint64_t replicate_index) {
    require(n >= 1, "sample: n must be >= 1");
    SampleBatch batch{std::vector<double>(n), m, master_seed, replicate_index};
    RngStream rng(master_seed, replicate_index);
    sample_into(m, batch.values, rng);
    return batch;
}

// ---------------------------------------------------------------------------
// constructive procedures
// ---------------------------------------------------------------------------

DistributionModel put_tail_down(const DistributionModel& base, double p) {
    return DistributionModel(PutTailDown{std::make_shared<DistributionModel>(base), p});
}

double ptd_tail_probability(const DistributionModel& base, double p, double k) {
    require(finite(p) && p > 0.0 && p < 1.0, "ptd_tail_probability: p must be in (0,1)");
    require(finite(k) && k > 0.0, "ptd_tail_probability: k must be > 0");
    const double sigma = stddev(base);
    return 2.0 * (1.0 - p) * upper_tail(base, k * std::sqrt(1.0 - p) * sigma);
}

bool ptd_outlier_gain_condition(const DistributionModel& base, double p, double k) {
    require(finite(p) && p > 0.0 && p < 1.0, "ptd_outlier_gain_condition: p must be in (0,1)");
    require(finite(k) && k > 0.0, "ptd_outlier_gain_condition: k must be > 0");
    const double sigma = stddev(base);
    return (1.0 - p) * upper_tail(base, k * std::sqrt(1.0 - p) * sigma) >
           upper_tail(base, k * sigma);
}

double selberg_bound(double k) {
    require(finite(k) && k > 1.0, "selberg_bound: k must be > 1");
    return 1.0 / (k * k);
}

DistributionModel extremal_three_point(double sigma, double k) {
    return DistributionModel(ThreePointExtremal{sigma, k});
}

ReciprocalParetoStats reciprocal_pareto_stats(double alpha) {
    require(finite(alpha) && alpha > 0.0, "reciprocal_pareto_stats: alpha must be > 0");
    const double var = alpha / (2.0 + alpha);
    const double t = 3.0 * std::sqrt(var);
    // Support is [-1,1]; for 3*sigma >= 1 the tail is empty.
    const double tail = t < 1.0 ? 1.0 - std::pow(t, alpha) : 0.0;
    return ReciprocalParetoStats{var, tail};
}

// ---------------------------------------------------------------------------
// description
// ---------------------------------------------------------------------------

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

std::string describe(const DistributionModel& m) {
    return std::visit(
        overloaded{
            [](const Gaussian& g) {
                return "gaussian:mean=" + fmt(g.mean) + ";sigma=" + fmt(g.sigma);
            },
            [](const Laplace& l) { return "laplace:scale=" + fmt(l.scale); },
            [](const SymmetricStable& s) { return "stable:alpha=" + fmt(s.alpha); },
            [](const Pareto& p) {
                return "pareto:alpha=" + fmt(p.alpha) + ";xm=" + fmt(p.xm);
            },
            [](const ReciprocalPareto& r) { return "rpareto:alpha=" + fmt(r.alpha); },
            [](const SymmetricReciprocalPareto& r) { return "srpareto:alpha=" + fmt(r.alpha); },
            [](const PutTailDown& t) {
                return "ptd:p=" + fmt(t.p) + ";base=" + describe(*t.base);
            },
            [](const ThreePointExtremal& e) {
                return "three_point:sigma=" + fmt(e.sigma) + ";k=" + fmt(e.k);
            },
        },
        m.variant());
}

} // namespace tailscope
