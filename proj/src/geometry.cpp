#include "hexbeam/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "hexbeam/antenna.hpp"

namespace hexbeam {

PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }

double magnitude(PlanePoint p) { return std::hypot(p.x, p.y); }

double distance(PlanePoint a, PlanePoint b) { return magnitude(a - b); }

PlanePoint from_polar(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

double wrap_angle(double a) {
    double t = std::remainder(a, kTwoPi);  // [-pi, pi]
    return t <= -kPi ? kPi : t;
}

int hex_ring(SiteCoord c) {
    int au = std::abs(c.u);
    int av = std::abs(c.v);
    int as = std::abs(c.u + c.v);
    return std::max(au, std::max(av, as));
}

PlanePoint site_position(SiteCoord c, double delta_km) {
    if (!(delta_km > 0.0)) throw std::invalid_argument("site_position: delta must be positive");
    // e^{i pi/3} = (1/2, sqrt(3)/2)
    static const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    return {delta_km * (c.u + 0.5 * c.v), delta_km * (half_sqrt3 * c.v)};
}

std::vector<std::pair<SiteCoord, PlanePoint>> ring_sites(int n_rings, double delta_km) {
    if (n_rings < 1) throw std::invalid_argument("ring_sites: n_rings must be >= 1");
    std::vector<std::pair<SiteCoord, PlanePoint>> out;
    out.reserve(static_cast<std::size_t>(3) * n_rings * (n_rings + 1));
    for (int u = -n_rings; u <= n_rings; ++u) {
        for (int v = -n_rings; v <= n_rings; ++v) {
            SiteCoord c{u, v};
            int k = hex_ring(c);
            if (k >= 1 && k <= n_rings) out.emplace_back(c, site_position(c, delta_km));
        }
    }
    return out;
}

double sector_azimuth(int c) {
    if (c < 1 || c > 3) throw std::invalid_argument("sector_azimuth: sector id must be 1, 2 or 3");
    return kPi / 3.0 * (2 * c - 1);
}

double bearing(PlanePoint m, PlanePoint s) {
    PlanePoint d = m - s;
    if (d.x == 0.0 && d.y == 0.0) throw std::invalid_argument("bearing: coincident points");
    return wrap_angle(std::atan2(d.y, d.x));
}

namespace {
// 65-degree half-power sector exponent, shared by the radial supports.
double sector_exponent() {
    static const double w = beam_exponent(65.0 * kPi / 180.0);
    return w;
}
}  // namespace

double serving_mobile_r_support(double theta, double delta_km) {
    if (!(delta_km > 0.0)) throw std::invalid_argument("serving_mobile_r_support: delta must be positive");
    return (2.0 * delta_km / 3.0) * pattern_value(theta - sector_azimuth(1), sector_exponent());
}

PlanePoint sample_serving_mobile(double delta_km, RandomStream& rng) {
    double theta = rng.uniform(0.0, 2.0 * kPi / 3.0);
    double r = 0.0;
    do {
        r = rng.uniform() * serving_mobile_r_support(theta, delta_km);
    } while (r == 0.0);
    return from_polar(r, theta);
}

}  // namespace hexbeam
