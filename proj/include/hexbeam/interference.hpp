#pragma once

#include <span>
#include <vector>

#include "hexbeam/antenna.hpp"
#include "hexbeam/propagation.hpp"
#include "hexbeam/special_functions.hpp"

namespace hexbeam {

struct MimoConfig {
    int tx = 4;
    int rx = 2;
    double bandwidth_hz = 20e6;
};

// One Monte Carlo realization.
struct IsrSample {
    double isr = 0.0;             // cumulative interference-to-signal ratio
    double sinr = 0.0;            // 1 / (isr + noise_term)
    double noise_term = 0.0;      // y0
    double throughput_bps = 0.0;  // Shannon bound with the layer cap
};

// One site of a realization: position, the three sector beams and the
// shadowing ratio (1 for the serving site).
struct SiteRealization {
    PlanePoint pos;
    std::array<BeamState, 3> beams;
    double shadow_ratio = 1.0;
};

// (r / |s - m|)^(2b) * gain * shadow_ratio with r = |m|.
double isr_individual(PlanePoint m, PlanePoint s, double gain, double shadow_ratio,
                      double two_b);

// Cumulative ISR over all sites. sites[0] must be the serving site at the
// origin with shadow_ratio 1; its sector-1 beam is the serving beam, whose
// gain towards m normalizes the sum, so subtracting 1 removes exactly the
// useful term. With the serving beam steered at m the normalizer is 1 and
// this is the textbook -1 + sum form.
double isr_cumulative(PlanePoint m, std::span<const SiteRealization> sites,
                      const PatternParams& params, double lb_km, double two_b,
                      VerticalMode vmode = VerticalMode::pattern);

// Direct partial sum of sum_s (r/|s-m|)^(2b) at fixed mobile bearing, lattice
// in units of the inter-site distance.
double lattice_sum_at_bearing(double x, double theta, double two_b, int n_rings);

// Same, averaged over bearings (the sum is pi/3-periodic in the bearing, so a
// midpoint rule over one period is exact to spectral accuracy).
double lattice_sum_oracle(double x, double two_b, int n_rings);

struct SeriesConfig {
    int max_terms = 60;
    double rel_tol = 1e-12;
};

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    bool converged = false;
};

// 6 x^(2b) / Gamma(b)^2 * sum_h Gamma(b+h)^2 / Gamma(h+1)^2 omega(b+h) x^(2h),
// truncated when the relative term drops below rel_tol.
SeriesResult isr_series_approx(double x, double b, const SeriesConfig& cfg = {});

// Inputs of the analytical expected ISR under a fixed downtilt.
struct ExpectedIsrModel {
    double delta_km = 0.75;
    double two_b = 3.5;
    double sigma_ratio_dB = 0.0;
    double eta = 1.0;
    double gain_expectation = 0.0;  // E[G_s(m)] applied to all interfering sites
    PatternParams params;
    double lb_km = 0.03;
    double fixed_tilt = 0.0;  // radians
    SeriesConfig series;
};

// E[chi_ratio] * gain_expectation * series(x) plus the serving site's two
// co-sector expected contributions.
double expected_isr(PlanePoint m, const ExpectedIsrModel& model);

// Interference-weighted vertical factor of the interfering lattice under a
// fixed downtilt: sum_s w_s V_s / sum_s w_s over rings 1..n_rings,
// bearing-averaged, with w_s = |s - m|^(-2b). Useful as the v_fixed constant
// of the closed-form gain when building gain_expectation.
double effective_interferer_vertical(double x, double delta_km, double two_b,
                                     double w_v, double fixed_tilt, double lb_km,
                                     int n_rings = 30);

// y0 = a N r^(2b) / (A P chi0).
double noise_term_y0(PlanePoint m, double chi0, const ChannelParams& ch);

// 1 / (isr + y0).
double sinr(double isr, PlanePoint m, double chi0, const ChannelParams& ch);

// (Tx ^ Rx) B_w log2(1 + sinr), transmission layers capped at 2.
double throughput(double sinr_value, const MimoConfig& mimo);

}  // namespace hexbeam
