#pragma once

#include <utility>
#include <vector>

#include "hexbeam/random.hpp"

namespace hexbeam {

inline constexpr double kPi = 3.141592653589793238462643;
inline constexpr double kTwoPi = 2.0 * kPi;

// Lattice indices (u, v) of a base-station site; (0, 0) is the serving site
// at the plane origin.
struct SiteCoord {
    int u = 0;
    int v = 0;
};

struct PlanePoint {
    double x = 0.0;  // km
    double y = 0.0;  // km
};

PlanePoint operator+(PlanePoint a, PlanePoint b);
PlanePoint operator-(PlanePoint a, PlanePoint b);
double magnitude(PlanePoint p);
double distance(PlanePoint a, PlanePoint b);
PlanePoint from_polar(double r, double theta);

// Normalize an angle to (-pi, pi].
double wrap_angle(double a);

// Hexagonal ring index max(|u|, |v|, |u+v|).
int hex_ring(SiteCoord c);

// delta * (u + v * e^{i pi/3})
PlanePoint site_position(SiteCoord c, double delta_km);

// All sites with ring index 1..n_rings, serving site excluded.
std::vector<std::pair<SiteCoord, PlanePoint>> ring_sites(int n_rings, double delta_km);

// Sector azimuths pi/3, pi, 5pi/3 for c = 1, 2, 3.
double sector_azimuth(int c);

// arg(m - s) in (-pi, pi]; throws on coincident points.
double bearing(PlanePoint m, PlanePoint s);

// Radial support (2 delta / 3) * U65(theta - pi/3) of the serving mobile at
// polar angle theta, where U65 is the 65-degree sector pattern.
double serving_mobile_r_support(double theta, double delta_km);

// theta uniform on [0, 2pi/3], r | theta uniform on [0, r_support(theta)].
PlanePoint sample_serving_mobile(double delta_km, RandomStream& rng);

}  // namespace hexbeam
