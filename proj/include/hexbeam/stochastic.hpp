#pragma once

#include <utility>

#include "hexbeam/antenna.hpp"
#include "hexbeam/geometry.hpp"
#include "hexbeam/quadrature.hpp"
#include "hexbeam/random.hpp"

namespace hexbeam {

// Bernoulli(eta) occupancy, steering angle uniform on [azimuth(c) - pi/3,
// azimuth(c) + pi/3], beam-target radius uniform on the sector-pattern-scaled
// interval, downtilt derived. All draws are consumed even when unoccupied so
// the stream layout does not depend on eta.
BeamState sample_beam(int sector, double delta_km, double lb_km, double eta,
                      RandomStream& rng);

// Density of alpha = psi(m, s) - theta_{s,c} on the real line:
// 3/(2 pi) on [psi - 2 pi c / 3, psi + 2 pi (1 - c) / 3].
double pdf_alpha(double alpha, PlanePoint m, PlanePoint s, int sector);

// Support [atan(-|m-s|/lb), atan(lb/|m-s|) - atan(lb/R)] of the vertical
// offset phi given the steering angle, with R = (2 delta / 3) U65(...).
struct PhiSupport {
    double lo = 0.0;
    double hi = 0.0;
    double r_max_km = 0.0;  // R
    double u_sector = 0.0;  // U65(target_theta - azimuth)
};
PhiSupport phi_support(PlanePoint m, PlanePoint s, int sector, double target_theta,
                       double delta_km, double lb_km);

// Conditional density of phi given the steering angle (the image of the
// uniform beam-target radius under r -> atan(lb/|m-s|) - atan(lb/r)).
double pdf_phi_given_alpha(double phi, PlanePoint m, PlanePoint s, int sector,
                           double target_theta, double delta_km, double lb_km);

// Density of the horizontal pattern value H(alpha) on its continuous branch.
// Counts both preimages +-acos(h^(-1/(2w))) when the steering interval
// straddles boresight; zero on the back-lobe atom.
double pdf_h(double h, PlanePoint m, PlanePoint s, int sector,
             const PatternParams& params);

// Probability mass of the continuous branch of H (the steering interval's
// overlap with the nonzero half-lobe); the complement sits in the atom at 0.
double h_continuous_mass(PlanePoint m, PlanePoint s, int sector);

// Clamped pattern values at the steering-interval endpoints (the support
// bounds of pdf_h when the interval lies in one monotone branch).
std::pair<double, double> h_support_endpoints(PlanePoint m, PlanePoint s, int sector,
                                              const PatternParams& params);

// Conditional density of V(phi) given the steering angle; sums the phi
// branches +-acos(v^(-1/(2w_v))) inside the phi support.
double pdf_v_given_steering(double v, PlanePoint m, PlanePoint s, int sector,
                            double target_theta, const PatternParams& params,
                            double delta_km, double lb_km);

// Conditional density of V given H = h: equal-weight mixture of
// pdf_v_given_steering over the steering preimages of h.
double pdf_v_given_h(double v, double h, PlanePoint m, PlanePoint s, int sector,
                     const PatternParams& params, double delta_km, double lb_km);

struct MomentResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

// E[(H V)^(s_order - 1)] by nested quadrature of the joint density
// f_{V|H} f_H over the continuous branch; s_order = 2 gives E[H V] and
// s_order = 1 the continuous-branch mass.
MomentResult mellin_moment(double s_order, PlanePoint m, PlanePoint s, int sector,
                           const PatternParams& params, double delta_km, double lb_km,
                           const QuadratureConfig& cfg = {});

// Mean of H(alpha) for alpha uniform on a width-2pi/3 interval centred at
// interval_center (clamped pattern), by quadrature.
double expected_h_uniform(double interval_center, double w_h);

// Closed-form three-sector expected gain under a fixed vertical factor:
// 3 eta v_fixed Gamma(1/2 - w_h) / (2 sqrt(pi) Gamma(1 - w_h)).
// The 1/2 keeps the value consistent with the back-lobe clamp (it is the
// closed form of (3 eta v / pi) Int_0^pi H(theta) dtheta with H zero beyond
// pi/2).
double expected_gain_closed_form(double eta, double v_fixed, double w_h);

// 10^(Y/10) with Y ~ Normal(0, sigma_dB^2).
double sample_shadowing(double sigma_dB, RandomStream& rng);

// E[10^(Y/10)] = exp((sigma ln 10 / 10)^2 / 2).
double log_normal_mean(double sigma_dB);

}  // namespace hexbeam
