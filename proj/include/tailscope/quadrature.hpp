#pragma once

#include <functional>

#include "tailscope/errors.hpp"

namespace tailscope {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over [lo, hi] to absolute
// tolerance abs_tol. Either bound may be infinite; an infinite range is
// mapped onto [0,1) with x = a + t/(1-t) and a doubly infinite range is
// split at 0. The initial mesh is refined geometrically toward both
// endpoints so that integrands concentrated in a narrow spike (widths down
// to ~1e-14 of the range) are not stepped over before adaptation starts.
//
// Throws quadrature_error if the subdivision limit is exhausted before the
// error estimate reaches abs_tol.
QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            double abs_tol, int max_subdivisions = 20000);

} // namespace tailscope
