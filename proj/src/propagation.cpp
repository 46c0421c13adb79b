#include "hexbeam/propagation.hpp"

#include <cmath>
#include <stdexcept>

namespace hexbeam {

void ChannelParams::finalize() {
    if (!(two_b > 2.0))
        throw std::invalid_argument("ChannelParams: path loss exponent 2b must exceed 2");
    if (!(bs_height_m > 0.0))
        throw std::invalid_argument("ChannelParams: base-station height must be positive");
    if (sigma_dB < 0.0)
        throw std::invalid_argument("ChannelParams: shadowing sigma must be >= 0");
    if (sigma_ratio_dB < 0.0) sigma_ratio_dB = std::sqrt(2.0) * sigma_dB;
    a_lin = std::pow(10.0, a_dB / 10.0);
    power_mW = std::pow(10.0, power_dBm / 10.0);
    gain_lin = std::pow(10.0, antenna_gain_dBi / 10.0);
    noise_mW = std::pow(10.0, noise_dBm / 10.0);
    lb_km = bs_height_m / 1000.0;
}

ChannelParams ChannelParams::defaults() {
    ChannelParams ch;
    ch.finalize();
    return ch;
}

double path_loss(PlanePoint s, PlanePoint m, double a_lin, double two_b) {
    double d = distance(s, m);
    if (d == 0.0) throw std::invalid_argument("path_loss: coincident points");
    return a_lin * std::pow(d, two_b);
}

double received_power(PlanePoint m, PlanePoint s, double gain, double shadow,
                      const ChannelParams& ch) {
    return ch.power_mW * ch.gain_lin * gain * shadow / path_loss(s, m, ch.a_lin, ch.two_b);
}

}  // namespace hexbeam
