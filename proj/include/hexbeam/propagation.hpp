#pragma once

#include "hexbeam/geometry.hpp"

namespace hexbeam {

// Channel and radio constants. dB/dBm fields are converted to linear exactly
// once by finalize(); formulas only touch the derived linear values.
struct ChannelParams {
    double a_dB = 130.0;             // propagation constant at 1 km
    double two_b = 3.5;              // path loss exponent
    double sigma_dB = 5.5;           // shadowing std dev
    double sigma_ratio_dB = -1.0;    // shadowing-ratio std dev; < 0 -> sqrt(2) sigma
    double power_dBm = 40.0;         // transmit power
    double antenna_gain_dBi = 17.0;  // antenna gain
    double noise_dBm = -93.0;        // thermal noise over the system bandwidth
    double bs_height_m = 30.0;       // base-station height

    // derived
    double a_lin = 0.0;
    double power_mW = 0.0;
    double gain_lin = 0.0;
    double noise_mW = 0.0;
    double lb_km = 0.0;

    // Converts to linear units and validates; throws on two_b <= 2 (the
    // interference series needs b > 1) and nonpositive height.
    void finalize();

    static ChannelParams defaults();
};

// a |s - m|^(2b), distance in km.
double path_loss(PlanePoint s, PlanePoint m, double a_lin, double two_b);

// P A G chi / L(s, m), linear mW.
double received_power(PlanePoint m, PlanePoint s, double gain, double shadow,
                      const ChannelParams& ch);

}  // namespace hexbeam
