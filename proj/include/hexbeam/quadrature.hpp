#pragma once

#include <functional>

namespace hexbeam {

struct QuadratureConfig {
    double abs_tol = 1e-8;
    double rel_tol = 1e-6;
    int max_intervals = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7-15 on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

// Same, after the substitution x = a + (b - a) sin^2 t, which removes
// inverse-square-root singularities at either endpoint.
QuadResult integrate_sqrt_endpoints(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureConfig& cfg = {});

}  // namespace hexbeam
