#include "tailscope/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tailscope {

namespace {

// QUADPACK QK15 abscissae (positive half) and weights.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

// One Kronrod-15 / Gauss-7 pass over [a,b] with the QUADPACK error heuristic.
Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }

    double result_k = kWgk[7] * fv[7];
    double result_g = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::abs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        result_k += kWgk[i] * (fv[i] + fv[14 - i]);
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    }
    for (int i = 0; i < 3; ++i) {
        const int j = 2 * i + 1;
        result_g += kWg[i] * (fv[j] + fv[14 - j]);
    }

    const double mean = 0.5 * result_k;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

    result_k *= half;
    result_g *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs(result_k - result_g);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double min_err = 50.0 * eps * resabs;
    if (min_err > err) err = min_err;

    return Segment{a, b, result_k, err};
}

// Breakpoints clustered geometrically toward both ends of [0,1] (scaled to
// [a,b] by the caller), plus a coarse uniform middle.
std::vector<double> initial_mesh() {
    std::vector<double> pts;
    pts.push_back(0.0);
    for (int j = 46; j >= 3; --j) pts.push_back(std::ldexp(1.0, -j));
    for (double t = 0.25; t < 0.76; t += 0.125) pts.push_back(t);
    for (int j = 3; j <= 46; ++j) pts.push_back(1.0 - std::ldexp(1.0, -j));
    pts.push_back(1.0);
    return pts;
}

QuadratureResult adapt_finite(const std::function<double(double)>& f, double lo, double hi,
                              double abs_tol, int max_subdivisions) {
    static const std::vector<double> mesh = initial_mesh();

    std::priority_queue<Segment> active;
    double converged_value = 0.0; // segments too small to split further
    double converged_error = 0.0;
    double total_value = 0.0;
    double total_error = 0.0;
    int subdivisions = 0;

    const double width = hi - lo;
    for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
        Segment s = gk15(f, lo + width * mesh[i], lo + width * mesh[i + 1]);
        total_value += s.value;
        total_error += s.error;
        active.push(s);
        ++subdivisions;
    }

    while (total_error + converged_error > abs_tol) {
        if (active.empty() || subdivisions >= max_subdivisions)
            throw quadrature_error(
                "quadrature: tolerance not reached after " + std::to_string(subdivisions) +
                    " subdivisions (err=" + std::to_string(total_error + converged_error) + ")",
                total_value + converged_value, total_error + converged_error, subdivisions);

        Segment worst = active.top();
        active.pop();
        total_value -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // Interval at floating point resolution; accept its estimate.
            converged_value += worst.value;
            converged_error += worst.error;
            continue;
        }
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        total_value += left.value + right.value;
        total_error += left.error + right.error;
        active.push(left);
        active.push(right);
        ++subdivisions;
    }

    return QuadratureResult{total_value + converged_value, total_error + converged_error,
                            subdivisions};
}

} // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            double abs_tol, int max_subdivisions) {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi))
        throw parameter_error("quadrature: requires lo < hi");
    if (!(abs_tol > 0.0)) throw parameter_error("quadrature: abs_tol must be > 0");

    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);

    if (lo_inf && hi_inf) {
        QuadratureResult neg = quadrature(f, lo, 0.0, 0.5 * abs_tol, max_subdivisions);
        QuadratureResult pos = quadrature(f, 0.0, hi, 0.5 * abs_tol, max_subdivisions);
        return QuadratureResult{neg.value + pos.value,
                                neg.abs_error_estimate + pos.abs_error_estimate,
                                neg.subdivisions + pos.subdivisions};
    }
    if (hi_inf) {
        auto g = [&f, lo](double t) {
            const double om = 1.0 - t;
            if (om <= 0.0) return 0.0;
            const double x = lo + t / om;
            if (std::isinf(x)) return 0.0;
            return f(x) / (om * om);
        };
        return adapt_finite(g, 0.0, 1.0, abs_tol, max_subdivisions);
    }
    if (lo_inf) {
        auto g = [&f, hi](double t) {
            const double om = 1.0 - t;
            if (om <= 0.0) return 0.0;
            const double x = hi - t / om;
            if (std::isinf(x)) return 0.0;
            return f(x) / (om * om);
        };
        return adapt_finite(g, 0.0, 1.0, abs_tol, max_subdivisions);
    }
    return adapt_finite(f, lo, hi, abs_tol, max_subdivisions);
}

} // namespace tailscope
