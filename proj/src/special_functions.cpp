#include "hexbeam/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace hexbeam {

namespace {

constexpr double kPi = 3.141592653589793238462643;

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_core(double z) {
    // z >= 0.5; returns Gamma(z)
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + i);
    double t = z + 6.5;  // g + 0.5
    return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * x;
}

double lanczos_core_log(double z) {
    double x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + i);
    double t = z + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_core(1.0 - x));
    return lanczos_core(x);
}

double log_gamma(double x) {
    if (is_nonpositive_integer(x)) throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (x < 0.5)
        return std::log(kPi / std::abs(std::sin(kPi * x))) - lanczos_core_log(1.0 - x);
    return lanczos_core_log(x);
}

double hurwitz_zeta(double z, double a, const HurwitzConfig& cfg) {
    if (!(z > 1.0)) throw std::domain_error("hurwitz_zeta: requires z > 1");
    if (!(a > 0.0) || !(a <= 1.0)) throw std::domain_error("hurwitz_zeta: requires a in (0, 1]");
    if (cfg.leading_terms < 1) throw std::invalid_argument("hurwitz_zeta: leading_terms must be >= 1");

    int n = cfg.leading_terms;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += std::pow(k + a, -z);

    double t = n + a;
    sum += std::pow(t, 1.0 - z) / (z - 1.0);
    sum += 0.5 * std::pow(t, -z);

    // Euler-Maclaurin corrections: B_{2j}/(2j)! * z(z+1)...(z+2j-2) * t^{-z-2j+1}
    static const double kB2jOverFact[6] = {
        1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
        2.0876756987868099e-8, -5.2841901386874932e-10};
    int max_j = std::min(cfg.correction_order / 2, 6);
    double rising = z;            // z (z+1) ... (z+2j-2), starts with one factor
    double tpow = std::pow(t, -z - 1.0);
    double t2 = 1.0 / (t * t);
    for (int j = 1; j <= max_j; ++j) {
        sum += kB2jOverFact[j - 1] * rising * tpow;
        rising *= (z + 2.0 * j - 1.0) * (z + 2.0 * j);
        tpow *= t2;
    }
    return sum;
}

double riemann_zeta(double z, const HurwitzConfig& cfg) {
    if (!(z > 1.0)) throw std::domain_error("riemann_zeta: requires z > 1");
    return hurwitz_zeta(z, 1.0, cfg);
}

double omega(double z, const HurwitzConfig& cfg) {
    double diff = hurwitz_zeta(z, 1.0 / 3.0, cfg) - hurwitz_zeta(z, 2.0 / 3.0, cfg);
    return std::pow(3.0, -z) * riemann_zeta(z, cfg) * diff;
}

}  // namespace hexbeam
