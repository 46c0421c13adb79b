#pragma once

#include <array>

#include "hexbeam/geometry.hpp"

namespace hexbeam {

// Cosine-power pattern parameters for the horizontal and vertical planes.
// w = ln 2 / ln(cos^2(theta_3dB / 2)) is negative for theta_3dB in (0, pi),
// which makes the exponent -2w positive and U(theta_3dB / 2) = 1/2.
struct PatternParams {
    double theta_h3dB = 0.0;  // radians
    double theta_v3dB = 0.0;  // radians
    double w_h = 0.0;
    double w_v = 0.0;

    static PatternParams from_beam_widths(double theta_h3dB, double theta_v3dB);
};

// Per-sector beam draw: occupancy, horizontal steering angle, beam-target
// radius and the resulting downtilt.
struct BeamState {
    bool occupied = false;
    double target_theta = 0.0;  // radians, in the sector's natural range
    double target_r_km = 0.0;
    double tilt = 0.0;  // radians, in (0, pi/2]
};

// Offsets of a mobile relative to a beam: horizontal alpha, vertical phi and
// the beam downtilt.
struct BeamGeometry {
    double alpha = 0.0;
    double phi = 0.0;
    double tilt = 0.0;
};

enum class VerticalMode {
    pattern,  // V evaluated from the vertical pattern
    unity,    // V held at 1 (azimuth-only beamforming)
};

// ln 2 / ln(cos^2(theta_3dB / 2)); throws on degenerate widths.
double beam_exponent(double theta_3dB);

// cos(angle)^(-2w) for |angle| < pi/2 after wrapping, 0 on the back lobe.
double pattern_value(double angle, double w);

// Downtilt atan(lb / target_r); pi/2 when target_r = 0.
double tilt_for_target(double target_r_km, double lb_km);

// alpha = bearing(m, s) - target_theta, tilt = atan(lb / target_r),
// phi = atan(lb / |m - s|) - tilt.
BeamGeometry beam_offsets(PlanePoint m, PlanePoint s, double target_theta,
                          double target_r_km, double lb_km);

// Gain of a single beam towards m: H(alpha) * V(phi).
double beam_gain(PlanePoint m, PlanePoint s, const BeamState& beam,
                 const PatternParams& params, double lb_km,
                 VerticalMode vmode = VerticalMode::pattern);

// Sum over occupied sectors of H(alpha) * V(phi); in [0, 3].
double site_gain(PlanePoint m, PlanePoint s, const std::array<BeamState, 3>& beams,
                 const PatternParams& params, double lb_km,
                 VerticalMode vmode = VerticalMode::pattern);

}  // namespace hexbeam
