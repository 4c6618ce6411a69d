// support.hpp — shared test helpers. The adaptive quadrature here is the
// independent oracle for every closed-form radial integral; it must stay
// independent of the library's own quadrature paths.
#pragma once

#include <cmath>
#include <functional>

namespace testsupport {

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

/// Adaptive Simpson on [a,b]; integrands may be mildly singular at a
/// (the first panel is split geometrically by the recursion).
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Radial integral 4 pi int_lo^hi g(r) r^2 dr with a geometric split toward 0
/// so integrable singularities of g converge.
inline double radial_integral(const std::function<double(double)>& g, double lo, double hi,
                              double tol = 1e-12) {
    auto f = [&](double r) { return 4.0 * M_PI * r * r * g(r); };
    if (lo > 0.0) return adaptive_simpson(f, lo, hi, tol);
    double total = 0.0;
    double b = hi;
    for (int j = 0; j < 60 && b > 1e-14 * hi; ++j) {
        total += adaptive_simpson(f, b / 2, b, tol / 60.0);
        b /= 2;
    }
    return total;
}

inline bool close_rel(double a, double b, double rel) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 || std::abs(a - b) <= rel * scale;
}

inline bool within_sigma(double value, double reference, double sigma, double k = 3.0) {
    return std::abs(value - reference) <= k * sigma + 1e-13 * std::max(std::abs(reference), 1.0);
}

}  // namespace testsupport
