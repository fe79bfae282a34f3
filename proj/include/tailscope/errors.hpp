#pragma once

#include <stdexcept>
#include <string>

namespace tailscope {

// Invalid model/estimator parameter (alpha <= 0, p outside (0,1), bad spec, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested quantity has no implemented evaluation (e.g. stable cdf for
// alpha outside {1,2}).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Density requested at an atom of a mixed/discrete law.
struct atomic_point_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Empty or zero-variance sample where a spread statistic is required.
struct degenerate_sample_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Adaptive integration failed to reach the requested tolerance.
struct quadrature_error : std::runtime_error {
    quadrature_error(const std::string& msg, double value, double err, int subdivisions)
        : std::runtime_error(msg), value(value), abs_error_estimate(err), subdivisions(subdivisions) {}
    double value;
    double abs_error_estimate;
    int subdivisions;
};

} // namespace tailscope
