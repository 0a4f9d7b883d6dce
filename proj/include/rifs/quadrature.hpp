#pragma once

#include <functional>

namespace rifs {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    int max_subdivisions = 10000;
};

struct QuadratureResult {
    double value;
    double error;
    int subdivisions;
};

// Globally adaptive Gauss-Kronrod (7/15) integration on a finite interval.
// Exceeding max_subdivisions raises ErrorCode::quadrature_cap.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

// integral_a^infinity f via t = a + s/(1-s).
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opts = {});

} // namespace rifs
