#include "hexbeam/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hexbeam/special_functions.hpp"

namespace hexbeam {

namespace {

double sector_exponent() {
    static const double w = beam_exponent(65.0 * kPi / 180.0);
    return w;
}

constexpr double kHalfPi = kPi / 2.0;
constexpr double kThird = 2.0 * kPi / 3.0;  // steering interval width

// Circular membership of angle x in the width-2pi/3 interval centred at mu.
bool in_steering_interval(double x, double mu) {
    return std::abs(wrap_angle(x - mu)) <= kPi / 3.0 + 1e-15;
}

// |d alpha / d h| of the pattern map h = cos(alpha)^(-2w) on one branch.
double pattern_jacobian(double h, double w) {
    double inner = std::pow(h, -1.0 / w);  // cos^2(alpha) in (0, 1)
    double denom = std::sqrt(std::max(1.0 - inner, 0.0));
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return (-1.0 / (2.0 * w)) * std::pow(h, -1.0 / (2.0 * w) - 1.0) / denom;
}

}  // namespace

BeamState sample_beam(int sector, double delta_km, double lb_km, double eta,
                      RandomStream& rng) {
    if (!(delta_km > 0.0) || !(lb_km > 0.0))
        throw std::invalid_argument("sample_beam: delta and height must be positive");
    BeamState b;
    b.occupied = rng.bernoulli(eta);
    double az = sector_azimuth(sector);
    b.target_theta = az + rng.uniform(-kPi / 3.0, kPi / 3.0);
    double r_max = (2.0 * delta_km / 3.0) * pattern_value(b.target_theta - az, sector_exponent());
    b.target_r_km = rng.uniform() * r_max;
    b.tilt = tilt_for_target(b.target_r_km, lb_km);
    return b;
}

double pdf_alpha(double alpha, PlanePoint m, PlanePoint s, int sector) {
    double psi = bearing(m, s);
    double lo = psi - kThird * sector;
    double hi = psi + kThird * (1 - sector);
    if (alpha < lo || alpha > hi) return 0.0;
    return 3.0 / (2.0 * kPi);
}

PhiSupport phi_support(PlanePoint m, PlanePoint s, int sector, double target_theta,
                       double delta_km, double lb_km) {
    double d = distance(m, s);
    if (d == 0.0) throw std::invalid_argument("phi_support: coincident mobile and site");
    PhiSupport sup;
    sup.u_sector = pattern_value(target_theta - sector_azimuth(sector), sector_exponent());
    if (sup.u_sector <= 0.0)
        throw std::domain_error("phi_support: steering angle outside the sector pattern support");
    sup.r_max_km = (2.0 * delta_km / 3.0) * sup.u_sector;
    double a = std::atan(lb_km / d);
    sup.lo = a - kHalfPi;  // = atan(-d / lb)
    sup.hi = a - std::atan(lb_km / sup.r_max_km);
    return sup;
}

double pdf_phi_given_alpha(double phi, PlanePoint m, PlanePoint s, int sector,
                           double target_theta, double delta_km, double lb_km) {
    PhiSupport sup = phi_support(m, s, sector, target_theta, delta_km, lb_km);
    if (phi < sup.lo || phi > sup.hi) return 0.0;
    double d = distance(m, s);
    double a = std::atan(lb_km / d);
    double t = std::tan(phi - a);
    // r -> phi Jacobian is lb csc^2(a - phi); the lb factor keeps the density
    // normalized (dimensions: f_r is 1/km, dr/dphi is km).
    return 3.0 * lb_km / (2.0 * delta_km * sup.u_sector) * (1.0 + 1.0 / (t * t));
}

double h_continuous_mass(PlanePoint m, PlanePoint s, int sector) {
    double mu = wrap_angle(bearing(m, s) - sector_azimuth(sector));
    double lo = mu - kPi / 3.0;
    double hi = mu + kPi / 3.0;
    // Overlap of [lo, hi] with the nonzero lobe (-pi/2, pi/2) on the circle;
    // lo/hi stay within (-4pi/3, 4pi/3), so three shifted copies suffice.
    double len = 0.0;
    for (int k = -1; k <= 1; ++k) {
        double a = std::max(lo, -kHalfPi + kTwoPi * k);
        double b = std::min(hi, kHalfPi + kTwoPi * k);
        if (b > a) len += b - a;
    }
    return len * 3.0 / (2.0 * kPi);
}

std::pair<double, double> h_support_endpoints(PlanePoint m, PlanePoint s, int sector,
                                              const PatternParams& params) {
    double psi = bearing(m, s);
    double h1 = pattern_value(psi - kThird * sector, params.w_h);
    double h2 = pattern_value(psi + kThird * (1 - sector), params.w_h);
    return {std::min(h1, h2), std::max(h1, h2)};
}

double pdf_h(double h, PlanePoint m, PlanePoint s, int sector,
             const PatternParams& params) {
    if (h <= 0.0 || h >= 1.0) return 0.0;
    double w = params.w_h;
    double mu = wrap_angle(bearing(m, s) - sector_azimuth(sector));
    double alpha_h = std::acos(std::pow(h, -1.0 / (2.0 * w)));
    int n = 0;
    if (in_steering_interval(alpha_h, mu)) ++n;
    if (in_steering_interval(-alpha_h, mu)) ++n;
    if (n == 0) return 0.0;
    return n * (3.0 / (2.0 * kPi)) * pattern_jacobian(h, w);
}

double pdf_v_given_steering(double v, PlanePoint m, PlanePoint s, int sector,
                            double target_theta, const PatternParams& params,
                            double delta_km, double lb_km) {
    if (v <= 0.0 || v >= 1.0) return 0.0;
    PhiSupport sup = phi_support(m, s, sector, target_theta, delta_km, lb_km);
    double w = params.w_v;
    double phi_abs = std::acos(std::min(std::pow(v, -1.0 / (2.0 * w)), 1.0));
    double jac = pattern_jacobian(v, w);
    double density = 0.0;
    for (double phi : {phi_abs, -phi_abs}) {
        if (phi < sup.lo || phi > sup.hi) continue;
        density += pdf_phi_given_alpha(phi, m, s, sector, target_theta, delta_km, lb_km) * jac;
        if (phi_abs == 0.0) break;  // single preimage at the peak
    }
    return density;
}

double pdf_v_given_h(double v, double h, PlanePoint m, PlanePoint s, int sector,
                     const PatternParams& params, double delta_km, double lb_km) {
    if (h <= 0.0 || h > 1.0) throw std::domain_error("pdf_v_given_h: h outside (0, 1]");
    double w = params.w_h;
    double mu = wrap_angle(bearing(m, s) - sector_azimuth(sector));
    double alpha_h = std::acos(std::min(std::pow(h, -1.0 / (2.0 * w)), 1.0));
    double az = sector_azimuth(sector);
    // Equal-weight mixture over the steering preimages of h (alpha uniform).
    std::vector<double> thetas;
    for (double alpha : {alpha_h, -alpha_h}) {
        if (!in_steering_interval(alpha, mu)) continue;
        thetas.push_back(az + wrap_angle(mu - alpha));
        if (alpha_h == 0.0) break;
    }
    if (thetas.empty()) return 0.0;
    double density = 0.0;
    for (double th : thetas)
        density += pdf_v_given_steering(v, m, s, sector, th, params, delta_km, lb_km);
    return density / static_cast<double>(thetas.size());
}

namespace {

// Monotone arc of the steering interval inside one half of the pattern lobe:
// |alpha| runs over [a_lo, a_hi] with fixed sign.
struct PatternArc {
    double a_lo, a_hi;  // magnitudes, 0 <= a_lo < a_hi <= pi/2
    double sign;        // sign of alpha on the arc
};

std::vector<PatternArc> monotone_arcs(double mu) {
    std::vector<PatternArc> arcs;
    double lo = mu - kPi / 3.0;
    double hi = mu + kPi / 3.0;
    for (int k = -1; k <= 1; ++k) {
        double shift = kTwoPi * k;
        // negative half [-pi/2, 0] and positive half [0, pi/2] of the lobe copy
        double a = std::max(lo, -kHalfPi + shift);
        double b = std::min(hi, 0.0 + shift);
        if (b > a) arcs.push_back({shift - b, shift - a, -1.0});
        a = std::max(lo, 0.0 + shift);
        b = std::min(hi, kHalfPi + shift);
        if (b > a) arcs.push_back({a - shift, b - shift, +1.0});
    }
    return arcs;
}

// Integral of v^(s-1) against the conditional vertical density, split at the
// branch point v = 1 when the phi support straddles zero.
double vertical_moment(double s_order, PlanePoint m, PlanePoint s, int sector,
                       double target_theta, const PatternParams& params,
                       double delta_km, double lb_km, const QuadratureConfig& cfg,
                       double* err_acc) {
    PhiSupport sup = phi_support(m, s, sector, target_theta, delta_km, lb_km);
    auto branch = [&](double phi_a, double phi_b) {
        double va = pattern_value(phi_a, params.w_v);
        double vb = pattern_value(phi_b, params.w_v);
        double v_lo = std::min(va, vb);
        double v_hi = std::max(va, vb);
        if (v_hi <= v_lo) return 0.0;
        auto f = [&](double v) {
            return std::pow(v, s_order - 1.0) *
                   pdf_v_given_steering(v, m, s, sector, target_theta, params, delta_km, lb_km);
        };
        QuadResult q = integrate_sqrt_endpoints(f, v_lo, v_hi, cfg);
        if (err_acc) *err_acc += q.error;
        return q.value;
    };
    if (sup.hi <= 0.0) return branch(sup.lo, sup.hi);
    // straddling support: the two phi branches map onto overlapping v ranges,
    // and pdf_v_given_steering already sums them, so integrate each phi branch
    // against only its own density share. Split instead in phi-monotone pieces
    // by clipping v ranges: [V(lo), 1] from phi < 0 and [V(hi), 1] from phi > 0.
    double total = 0.0;
    double v_neg = pattern_value(sup.lo, params.w_v);
    double v_pos = pattern_value(sup.hi, params.w_v);
    double v_split = std::max(v_neg, v_pos);
    auto f = [&](double v) {
        return std::pow(v, s_order - 1.0) *
               pdf_v_given_steering(v, m, s, sector, target_theta, params, delta_km, lb_km);
    };
    // below the split only one branch is alive; above it both are, still
    // handled by the summed density. Integrate the two smooth pieces.
    double v_min = std::min(v_neg, v_pos);
    QuadResult q1 = integrate_sqrt_endpoints(f, v_min, v_split, cfg);
    QuadResult q2 = integrate_sqrt_endpoints(f, v_split, 1.0, cfg);
    if (err_acc) *err_acc += q1.error + q2.error;
    total = q1.value + q2.value;
    return total;
}

}  // namespace

MomentResult mellin_moment(double s_order, PlanePoint m, PlanePoint s, int sector,
                           const PatternParams& params, double delta_km, double lb_km,
                           const QuadratureConfig& cfg) {
    if (!(s_order >= 1.0)) throw std::invalid_argument("mellin_moment: requires s_order >= 1");
    double mu = wrap_angle(bearing(m, s) - sector_azimuth(sector));
    double az = sector_azimuth(sector);
    double w = params.w_h;

    MomentResult out;
    QuadratureConfig inner_cfg = cfg;
    inner_cfg.abs_tol = std::max(cfg.abs_tol * 0.1, 1e-12);

    for (const PatternArc& arc : monotone_arcs(mu)) {
        double h_lo = pattern_value(arc.a_hi, w);
        double h_hi = pattern_value(arc.a_lo, w);
        if (h_hi <= h_lo) continue;
        auto f = [&](double h) {
            double alpha_mag = std::acos(std::min(std::pow(h, -1.0 / (2.0 * w)), 1.0));
            double alpha = arc.sign * alpha_mag;
            double theta = az + wrap_angle(mu - alpha);
            double inner = vertical_moment(s_order, m, s, sector, theta, params,
                                           delta_km, lb_km, inner_cfg, nullptr);
            return std::pow(h, s_order - 1.0) * (3.0 / (2.0 * kPi)) *
                   pattern_jacobian(h, w) * inner;
        };
        QuadResult q = integrate_sqrt_endpoints(f, h_lo, h_hi, cfg);
        out.value += q.value;
        out.error += q.error;
    }
    out.converged = out.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

double expected_h_uniform(double interval_center, double w_h) {
    double mu = wrap_angle(interval_center);
    double lo = mu - kPi / 3.0;
    double hi = mu + kPi / 3.0;
    double total = 0.0;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-10;
    for (int k = -1; k <= 1; ++k) {
        double a = std::max(lo, -kHalfPi + kTwoPi * k);
        double b = std::min(hi, kHalfPi + kTwoPi * k);
        if (b <= a) continue;
        auto f = [&](double x) { return pattern_value(x, w_h); };
        total += integrate(f, a, b, cfg).value;
    }
    return total * 3.0 / (2.0 * kPi);
}

double expected_gain_closed_form(double eta, double v_fixed, double w_h) {
    if (!(w_h < 0.0)) throw std::invalid_argument("expected_gain_closed_form: exponent must be negative");
    double ratio = std::exp(log_gamma(0.5 - w_h) - log_gamma(1.0 - w_h));
    return 3.0 * eta * v_fixed * ratio / (2.0 * std::sqrt(kPi));
}

double sample_shadowing(double sigma_dB, RandomStream& rng) {
    if (sigma_dB < 0.0) throw std::invalid_argument("sample_shadowing: sigma must be >= 0");
    double y = sigma_dB * rng.normal();
    return std::pow(10.0, y / 10.0);
}

double log_normal_mean(double sigma_dB) {
    double s = sigma_dB * std::log(10.0) / 10.0;
    return std::exp(0.5 * s * s);
}

}  // namespace hexbeam
