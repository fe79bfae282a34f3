#include "tailscope/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace tailscope {

namespace {

void check_density(const DistributionModel& m) {
    if (!has_evaluable_density(m))
        throw unsupported_error("oracle: model needs an evaluable continuous density (" +
                                describe(m) + ")");
}

void check_n(int n) {
    if (n < 2) throw parameter_error("oracle: n must be >= 2");
}

double inner_tol(double abs_tol, int n) {
    return std::max(abs_tol / n, 1e-14);
}

} // namespace

double abs_cdf(const DistributionModel& m, double x) {
    if (x <= 0.0) return 0.0;
    return cdf(m, x) - cdf(m, -x);
}

double abs_pdf(const DistributionModel& m, double x) {
    if (x < 0.0) return 0.0;
    return pdf(m, x) + pdf(m, -x);
}

double exact_min_ratio_prob(const DistributionModel& m, int n, double rho, double abs_tol) {
    check_density(m);
    check_n(n);
    if (!(rho > 1.0)) throw parameter_error("exact_min_ratio_prob: rho must be > 1");

    const Interval s = abs_support(m);
    // The factor (1 - F(rho x))^(n-1) vanishes once rho*x leaves the support.
    const double hi = std::isinf(s.hi) ? s.hi : s.hi / rho;
    auto f = [&m, n, rho](double x) {
        const double t = 1.0 - abs_cdf(m, rho * x);
        return std::pow(t, n - 1) * abs_pdf(m, x);
    };
    return n * quadrature(f, s.lo, hi, inner_tol(abs_tol, n)).value;
}

double exact_min_ratio_complement(const DistributionModel& m, int n, double rho,
                                  double abs_tol) {
    check_density(m);
    check_n(n);
    if (!(rho > 1.0)) throw parameter_error("exact_min_ratio_complement: rho must be > 1");

    const Interval s = abs_support(m);
    auto f = [&m, n, rho](double x) {
        const double t1 = 1.0 - abs_cdf(m, x);
        const double t2 = 1.0 - abs_cdf(m, rho * x);
        return (std::pow(t1, n - 1) - std::pow(t2, n - 1)) * abs_pdf(m, x);
    };
    return n * quadrature(f, s.lo, s.hi, inner_tol(abs_tol, n)).value;
}

double exact_max_ratio_prob(const DistributionModel& m, int n, double kappa, double abs_tol) {
    check_density(m);
    check_n(n);
    if (!(kappa > 0.0 && kappa < 1.0))
        throw parameter_error("exact_max_ratio_prob: kappa must be in (0,1)");

    // Computed as 1 - n*Integral [F^(n-1)(y) - F^(n-1)(kappa y)] p(y) dy:
    // the bracket decays one tail order faster than F^(n-1)(kappa y) p(y)
    // itself, which keeps heavy-tailed integrands (Pareto alpha < 1)
    // resolvable on the mapped unit interval.
    const Interval s = abs_support(m);
    auto f = [&m, n, kappa](double y) {
        const double a = abs_cdf(m, y);
        const double b = abs_cdf(m, kappa * y);
        return (std::pow(a, n - 1) - std::pow(b, n - 1)) * abs_pdf(m, y);
    };
    const double v = n * quadrature(f, s.lo, s.hi, inner_tol(abs_tol, n)).value;
    return std::clamp(1.0 - v, 0.0, 1.0);
}

double limit_min_ratio(double alpha, double rho) {
    if (!(alpha > 0.0)) throw parameter_error("limit_min_ratio: alpha must be > 0");
    if (!(rho > 1.0)) throw parameter_error("limit_min_ratio: rho must be > 1");
    return 1.0 - std::pow(rho, -alpha);
}

double limit_max_ratio(double alpha, double kappa) {
    if (!(alpha > 0.0)) throw parameter_error("limit_max_ratio: alpha must be > 0");
    if (!(kappa > 0.0 && kappa < 1.0))
        throw parameter_error("limit_max_ratio: kappa must be in (0,1)");
    return std::pow(kappa, alpha);
}

double gaussian_first_kind_reference(double k) {
    if (!(k >= 0.0)) throw parameter_error("gaussian_first_kind_reference: k must be >= 0");
    return std::erfc(k / std::sqrt(2.0));
}

double joint_extreme_pair_density(const DistributionModel& m, int n, double x, double y,
                                  PairKind which) {
    check_density(m);
    check_n(n);
    if (x > y) throw parameter_error("joint_extreme_pair_density: requires x <= y");

    const double nn = static_cast<double>(n) * (n - 1);
    if (which == PairKind::MinPair)
        return nn * std::pow(1.0 - abs_cdf(m, y), n - 2) * abs_pdf(m, x) * abs_pdf(m, y);
    return nn * std::pow(abs_cdf(m, x), n - 2) * abs_pdf(m, x) * abs_pdf(m, y);
}

} // namespace tailscope
