#pragma once

namespace hexbeam {

struct HurwitzConfig {
    int leading_terms = 25;     // directly summed terms
    int correction_order = 8;   // Euler-Maclaurin order, even, <= 12
};

// Euler Gamma, Lanczos approximation with reflection below 0.5.
// Relative error well under 1e-12 on [0.1, 50]; poles rejected.
double gamma_fn(double x);

// ln |Gamma(x)|, same approximation in log space (safe for large x).
double log_gamma(double x);

// Hurwitz zeta sum_{k>=0} (k + a)^(-z) for z > 1, a in (0, 1].
double hurwitz_zeta(double z, double a, const HurwitzConfig& cfg = {});

// Riemann zeta for z > 1.
double riemann_zeta(double z, const HurwitzConfig& cfg = {});

// omega(z) = 3^(-z) zeta(z) (zeta(z, 1/3) - zeta(z, 2/3)).
double omega(double z, const HurwitzConfig& cfg = {});

}  // namespace hexbeam
