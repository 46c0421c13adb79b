#include "hexbeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hexbeam {

namespace {

// QUADPACK 7-15 Gauss-Kronrod pair.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(c);
    double result_k = kWgk[7] * fc;
    double result_g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = h * kXgk[j];
        double f1 = f(c - dx);
        double f2 = f(c + dx);
        result_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
    }
    double value = result_k * h;
    double err = std::abs((result_k - result_g) * h);
    // QUADPACK-style error sharpening
    err = std::pow(200.0 * err, 1.5) > 1.0 ? err : std::pow(200.0 * err, 1.5) / 200.0;
    return {a, b, value, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Panel> panels;
    Panel p0 = gk15(f, a, b);
    double total = p0.value;
    double total_err = p0.error;
    panels.push(p0);
    int used = 1;
    while (used < cfg.max_intervals) {
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_err <= tol) break;
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            panels.push(worst);  // cannot split further
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++used;
    }
    out.value = total;
    out.error = total_err;
    out.converged = total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    return out;
}

QuadResult integrate_sqrt_endpoints(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureConfig& cfg) {
    if (a == b) return {0.0, 0.0, true};
    double span = b - a;
    auto g = [&](double t) {
        double s = std::sin(t);
        double x = a + span * s * s;
        if (x <= a) x = std::nextafter(a, b);
        if (x >= b) x = std::nextafter(b, a);
        return f(x) * span * std::sin(2.0 * t);
    };
    return integrate(g, 0.0, 1.5707963267948966, cfg);
}

}  // namespace hexbeam
