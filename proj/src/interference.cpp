#include "hexbeam/interference.hpp"

#include <cmath>
#include <stdexcept>

#include "hexbeam/stochastic.hpp"

namespace hexbeam {

double isr_individual(PlanePoint m, PlanePoint s, double gain, double shadow_ratio,
                      double two_b) {
    double r = magnitude(m);
    if (r == 0.0) throw std::invalid_argument("isr_individual: mobile at the origin");
    double d = distance(s, m);
    if (d == 0.0) throw std::invalid_argument("isr_individual: coincident mobile and site");
    return std::pow(r / d, two_b) * gain * shadow_ratio;
}

double isr_cumulative(PlanePoint m, std::span<const SiteRealization> sites,
                      const PatternParams& params, double lb_km, double two_b,
                      VerticalMode vmode) {
    if (sites.empty()) throw std::invalid_argument("isr_cumulative: no sites");
    const SiteRealization& serving = sites.front();
    if (magnitude(serving.pos) != 0.0)
        throw std::invalid_argument("isr_cumulative: sites[0] must be the serving site at the origin");
    if (!serving.beams[0].occupied)
        throw std::invalid_argument("isr_cumulative: serving beam must be occupied");

    double g0 = beam_gain(m, serving.pos, serving.beams[0], params, lb_km, vmode);
    if (!(g0 > 0.0)) throw std::domain_error("isr_cumulative: serving beam gain is zero");

    double r = magnitude(m);
    if (r == 0.0) throw std::invalid_argument("isr_cumulative: mobile at the origin");
    double total = 0.0;
    for (const SiteRealization& site : sites) {
        double g = site_gain(m, site.pos, site.beams, params, lb_km, vmode);
        if (g == 0.0) continue;
        double d = distance(site.pos, m);
        total += std::pow(r / d, two_b) * g * site.shadow_ratio;
    }
    return total / g0 - 1.0;
}

double lattice_sum_at_bearing(double x, double theta, double two_b, int n_rings) {
    if (!(x >= 0.0) || !(x < 1.0))
        throw std::invalid_argument("lattice_sum: requires 0 <= x < 1");
    if (x == 0.0) return 0.0;
    double mx = x * std::cos(theta);
    double my = x * std::sin(theta);
    double b = 0.5 * two_b;
    double sum = 0.0;
    for (const auto& [coord, pos] : ring_sites(n_rings, 1.0)) {
        double dx = pos.x - mx;
        double dy = pos.y - my;
        sum += std::pow(dx * dx + dy * dy, -b);
    }
    return sum * std::pow(x, two_b);
}

double lattice_sum_oracle(double x, double two_b, int n_rings) {
    if (!(x >= 0.0) || !(x < 1.0))
        throw std::invalid_argument("lattice_sum_oracle: requires 0 <= x < 1");
    if (x == 0.0) return 0.0;
    constexpr int kBearings = 32;
    double period = kPi / 3.0;
    double mx = x, my = 0.0;
    double b = 0.5 * two_b;
    double acc = 0.0;
    auto sites = ring_sites(n_rings, 1.0);
    for (int j = 0; j < kBearings; ++j) {
        double theta = (j + 0.5) * period / kBearings;
        mx = x * std::cos(theta);
        my = x * std::sin(theta);
        double sum = 0.0;
        for (const auto& [coord, pos] : sites) {
            double dx = pos.x - mx;
            double dy = pos.y - my;
            sum += std::pow(dx * dx + dy * dy, -b);
        }
        acc += sum;
    }
    return acc / kBearings * std::pow(x, two_b);
}

SeriesResult isr_series_approx(double x, double b, const SeriesConfig& cfg) {
    if (!(x >= 0.0) || !(x < 1.0))
        throw std::invalid_argument("isr_series_approx: requires 0 <= x < 1");
    if (!(b > 1.0)) throw std::invalid_argument("isr_series_approx: requires b > 1");
    if (cfg.max_terms < 1) throw std::invalid_argument("isr_series_approx: max_terms must be >= 1");
    SeriesResult out;
    if (x == 0.0) {
        out.converged = true;
        return out;
    }
    double coef = 1.0;  // Gamma(b+h)^2 / (Gamma(b)^2 Gamma(h+1)^2)
    double xpow = 1.0;  // x^(2h)
    double x2 = x * x;
    double sum = 0.0;
    for (int h = 0; h < cfg.max_terms; ++h) {
        double term = coef * omega(b + h) * xpow;
        sum += term;
        ++out.terms_used;
        if (h > 0 && term <= cfg.rel_tol * sum) {
            out.converged = true;
            break;
        }
        double ratio = (b + h) / (h + 1.0);
        coef *= ratio * ratio;
        xpow *= x2;
    }
    out.value = 6.0 * std::pow(x, 2.0 * b) * sum;
    return out;
}

double expected_isr(PlanePoint m, const ExpectedIsrModel& model) {
    double r = magnitude(m);
    if (r == 0.0) throw std::invalid_argument("expected_isr: mobile at the origin");
    double x = r / model.delta_km;
    if (!(x < 1.0)) throw std::invalid_argument("expected_isr: mobile beyond the first ring");

    double series = isr_series_approx(x, 0.5 * model.two_b, model.series).value;
    double lattice_part = log_normal_mean(model.sigma_ratio_dB) * model.gain_expectation * series;

    // Serving-site co-sectors: distance r, shadow ratio 1, expected horizontal
    // gain of sectors 2 and 3 given the mobile bearing, fixed vertical factor.
    double theta_m = bearing(m, {0.0, 0.0});
    double v_r = pattern_value(std::atan(model.lb_km / r) - model.fixed_tilt, model.params.w_v);
    double three_sector_mean = expected_gain_closed_form(1.0, 1.0, model.params.w_h);
    double sector1_mean = expected_h_uniform(theta_m - sector_azimuth(1), model.params.w_h);
    double co = model.eta * v_r * (three_sector_mean - sector1_mean);
    return lattice_part + co;
}

double effective_interferer_vertical(double x, double delta_km, double two_b,
                                     double w_v, double fixed_tilt, double lb_km,
                                     int n_rings) {
    constexpr int kBearings = 16;
    double b = 0.5 * two_b;
    double num = 0.0, den = 0.0;
    auto sites = ring_sites(n_rings, delta_km);
    for (int j = 0; j < kBearings; ++j) {
        double theta = (j + 0.5) * (kPi / 3.0) / kBearings;
        PlanePoint m = from_polar(x * delta_km, theta);
        for (const auto& [coord, pos] : sites) {
            double d = distance(pos, m);
            double w = std::pow(d * d, -b);
            double v = pattern_value(std::atan(lb_km / d) - fixed_tilt, w_v);
            num += w * v;
            den += w;
        }
    }
    return num / den;
}

double noise_term_y0(PlanePoint m, double chi0, const ChannelParams& ch) {
    double r = magnitude(m);
    if (r == 0.0) throw std::invalid_argument("noise_term_y0: mobile at the origin");
    return ch.a_lin * ch.noise_mW * std::pow(r, ch.two_b) /
           (ch.gain_lin * ch.power_mW * chi0);
}

double sinr(double isr, PlanePoint m, double chi0, const ChannelParams& ch) {
    if (isr < 0.0) throw std::invalid_argument("sinr: negative isr");
    return 1.0 / (isr + noise_term_y0(m, chi0, ch));
}

double throughput(double sinr_value, const MimoConfig& mimo) {
    if (sinr_value < 0.0) throw std::invalid_argument("throughput: negative sinr");
    if (mimo.tx < 1 || mimo.rx < 1) throw std::invalid_argument("throughput: need at least one antenna");
    int layers = std::min({mimo.tx, mimo.rx, 2});
    return layers * mimo.bandwidth_hz * std::log2(1.0 + sinr_value);
}

}  // namespace hexbeam
