// Adaptive Simpson quadrature with a hard refinement-depth cap (pathologies
// become a typed error instead of a hang), plus Gauss-Legendre panels for
// path-length integrals.
#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, int max_depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double h6 = (b - a) / 12.0;
    double left = h6 * (fa + 4 * flm + fm);
    double right = h6 * (fm + 4 * frm + fb);
    double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol || (b - a) < 1e-15 * (std::abs(a) + std::abs(b)))
        return left + right + err / 15.0;
    if (depth >= max_depth) throw QuadratureNonConvergent();
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Integrate f over [a, b] to relative tolerance rel_tol.  The interval is
// first split into `panels` equal panels; each panel refines adaptively up to
// max_depth extra levels.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double rel_tol, int max_depth = 24,
                        int panels = 8) {
    if (!(b > a)) return 0.0;
    // coarse magnitude estimate to convert the relative tolerance
    double coarse = 0.0;
    double h = (b - a) / panels;
    std::vector<std::array<double, 3>> pv(panels);
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * h, x2 = x0 + h, x1 = 0.5 * (x0 + x2);
        pv[i] = {f(x0), f(x1), f(x2)};
        coarse += h / 6.0 * (pv[i][0] + 4 * pv[i][1] + pv[i][2]);
    }
    double abs_tol = rel_tol * std::max(std::abs(coarse), 1e-300);
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * h, x2 = x0 + h, x1 = 0.5 * (x0 + x2);
        double whole = h / 6.0 * (pv[i][0] + 4 * pv[i][1] + pv[i][2]);
        total += detail::simpson_rec(f, x0, x1, x2, pv[i][0], pv[i][1], pv[i][2], whole,
                                     abs_tol / panels, 0, max_depth);
    }
    return total;
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
inline const std::array<double, 8>& gl16_nodes() {
    static const std::array<double, 8> x = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
    return x;
}
inline const std::array<double, 8>& gl16_weights() {
    static const std::array<double, 8> w = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
    return w;
}

template <class F>
double gauss_legendre_16(const F& f, double a, double b) {
    double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0;
    const auto& xs = gl16_nodes();
    const auto& ws = gl16_weights();
    for (int i = 0; i < 8; ++i) s += ws[i] * (f(c - hw * xs[i]) + f(c + hw * xs[i]));
    return s * hw;
}

namespace detail {

template <class F>
double gl_adapt_rec(const F& f, double a, double b, double whole, double tol, int depth,
                    int max_depth) {
    double m = 0.5 * (a + b);
    double left = gauss_legendre_16(f, a, m);
    double right = gauss_legendre_16(f, m, b);
    if (std::abs(left + right - whole) <= tol || depth >= max_depth) return left + right;
    return gl_adapt_rec(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
           gl_adapt_rec(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Gauss-Legendre used for Finsler path lengths along segments.
template <class F>
double adaptive_gauss_legendre(const F& f, double a, double b, double rel_tol,
                               int max_depth = 18) {
    if (!(b > a)) return 0.0;
    double whole = gauss_legendre_16(f, a, b);
    double tol = rel_tol * std::max(std::abs(whole), 1e-300);
    return detail::gl_adapt_rec(f, a, b, whole, tol, 0, max_depth);
}

}  // namespace hilbert
