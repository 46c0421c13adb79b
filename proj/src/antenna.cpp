#include "hexbeam/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace hexbeam {

PatternParams PatternParams::from_beam_widths(double theta_h3dB, double theta_v3dB) {
    PatternParams p;
    p.theta_h3dB = theta_h3dB;
    p.theta_v3dB = theta_v3dB;
    p.w_h = beam_exponent(theta_h3dB);
    p.w_v = beam_exponent(theta_v3dB);
    return p;
}

double beam_exponent(double theta_3dB) {
    if (!(theta_3dB > 0.0) || !(theta_3dB < kPi))
        throw std::invalid_argument("beam_exponent: width must be in (0, pi)");
    double c = std::cos(theta_3dB / 2.0);
    return std::log(2.0) / std::log(c * c);
}

double pattern_value(double angle, double w) {
    if (!(w < 0.0)) throw std::invalid_argument("pattern_value: exponent must be negative");
    double a = wrap_angle(angle);
    if (std::abs(a) >= kPi / 2.0) return 0.0;
    return std::pow(std::cos(a), -2.0 * w);
}

double tilt_for_target(double target_r_km, double lb_km) {
    if (!(lb_km > 0.0)) throw std::invalid_argument("tilt_for_target: height must be positive");
    if (target_r_km <= 0.0) return kPi / 2.0;
    return std::atan(lb_km / target_r_km);
}

BeamGeometry beam_offsets(PlanePoint m, PlanePoint s, double target_theta,
                          double target_r_km, double lb_km) {
    BeamGeometry g;
    double d = distance(m, s);
    if (d == 0.0) throw std::invalid_argument("beam_offsets: coincident mobile and site");
    g.alpha = wrap_angle(bearing(m, s) - target_theta);
    g.tilt = tilt_for_target(target_r_km, lb_km);
    g.phi = std::atan(lb_km / d) - g.tilt;
    return g;
}

double beam_gain(PlanePoint m, PlanePoint s, const BeamState& beam,
                 const PatternParams& params, double lb_km, VerticalMode vmode) {
    double alpha = wrap_angle(bearing(m, s) - beam.target_theta);
    double h = pattern_value(alpha, params.w_h);
    if (h == 0.0) return 0.0;
    if (vmode == VerticalMode::unity) return h;
    double phi = std::atan(lb_km / distance(m, s)) - beam.tilt;
    return h * pattern_value(phi, params.w_v);
}

double site_gain(PlanePoint m, PlanePoint s, const std::array<BeamState, 3>& beams,
                 const PatternParams& params, double lb_km, VerticalMode vmode) {
    double total = 0.0;
    for (const BeamState& b : beams) {
        if (!b.occupied) continue;
        total += beam_gain(m, s, b, params, lb_km, vmode);
    }
    return total;
}

}  // namespace hexbeam
