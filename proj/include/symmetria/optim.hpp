#pragma once

#include <cmath>
#include <utility>

namespace symmetria {

// Golden-section maximization of a unimodal f over [lo, hi]. Returns the best
// evaluated (x, f(x)); tol_x is the absolute bracket width at which to stop.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol_x,
                                     int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    double best_x = fc >= fd ? c : d;
    double best_f = fc >= fd ? fc : fd;
    for (int i = 0; i < max_iter && (b - a) > tol_x; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            if (fc > best_f) {
                best_f = fc;
                best_x = c;
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            if (fd > best_f) {
                best_f = fd;
                best_x = d;
            }
        }
    }
    return {best_x, best_f};
}

}  // namespace symmetria
