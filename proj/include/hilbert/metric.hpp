// Hilbert distance, Finsler norm, Busemann density, centro-projective area,
// boundary blow-up ratio and Finsler path lengths.
//
// For polygonal domains the Finsler unit ball is itself a polygon (the polar
// of the Minkowski symmetrization of the dual points n_e / dist_e), so its
// area -- and hence the Busemann density -- is computed exactly.  Smooth
// variants use adaptive Simpson over directions.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hilbert/geometry.hpp"
#include "hilbert/quadrature.hpp"

namespace hilbert {

struct FinslerSample {
    Point2 x;
    Vec2 direction;          // unit direction (zero for v = 0)
    double t_plus = 0.0;     // exit distance along +direction
    double t_minus = 0.0;    // exit distance along -direction
    double norm_value = 0.0; // norm of the unit vector: (1/2)(1/t+ + 1/t-)

    // radial radius of the Finsler unit ball in this direction
    double unit_ball_radius() const { return 2.0 * t_plus * t_minus / (t_plus + t_minus); }
};

inline FinslerSample finsler_sample(const ConvexBoundary2D& domain, Point2 x, Vec2 unit_dir) {
    double tp = domain.ray_exit_unchecked(x, unit_dir).t;
    double tm = domain.ray_exit_unchecked(x, -unit_dir).t;
    return {x, unit_dir, tp, tm, 0.5 * (1.0 / tp + 1.0 / tm)};
}

// ||v||_x = (1/2)(1/t1 + 1/t2) for unit v, positively homogeneous in v.
inline double finsler_norm(const ConvexBoundary2D& domain, Point2 x, Vec2 v,
                           FinslerSample* sample = nullptr, double tol = kTolGeo) {
    domain.require_interior(x, tol);
    double n = v.norm();
    if (n == 0.0) {
        if (sample) *sample = {x, {0, 0}, std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity(), 0.0};
        return 0.0;
    }
    FinslerSample s = finsler_sample(domain, x, v / n);
    if (sample) *sample = s;
    return n * s.norm_value;
}

// d(p,q) = (1/2) |log( |q-a||p-b| / (|p-a||q-b|) )| on the chord a,p,q,b.
inline double hilbert_distance(const ConvexBoundary2D& domain, Point2 p, Point2 q,
                               double tol = kTolGeo) {
    domain.require_interior(p, tol);
    domain.require_interior(q, tol);
    if (distance(p, q) <= tol) return 0.0;
    Chord ch = domain.chord_through(p, q, tol);
    double ratio = (distance(q, ch.a) * distance(p, ch.b)) /
                   (distance(p, ch.a) * distance(q, ch.b));
    return 0.5 * std::abs(std::log(ratio));
}

// ---------------------------------------------------------------------------
// exact Finsler ball area for polygonal domains
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;  // counterclockwise
}

// Minkowski average (Q + (-Q))/2 of a ccw convex polygon, by edge merge.
inline std::vector<Point2> minkowski_symmetrize(const std::vector<Point2>& q) {
    std::size_t n = q.size();
    if (n == 1) return {Point2{0, 0}};
    if (n == 2) {
        Vec2 h = (q[1] - q[0]) * 0.5;
        return {-h, h};
    }
    auto lowest = [&](bool negated) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            Point2 a = negated ? -q[i] : q[i];
            Point2 b = negated ? -q[best] : q[best];
            if (a.y < b.y || (a.y == b.y && a.x < b.x)) best = i;
        }
        return best;
    };
    std::size_t ia = lowest(false), ib = lowest(true);
    std::vector<Point2> out;
    out.reserve(2 * n + 1);
    Point2 cur = (q[ia] + -q[ib]) * 0.5;
    std::size_t ca = 0, cb = 0;
    while (ca < n || cb < n) {
        out.push_back(cur);
        Vec2 ea = q[(ia + 1) % n] - q[ia];
        Vec2 eb = -q[(ib + 1) % n] + q[ib];
        Vec2 step;
        if (ca >= n)
            step = eb, ib = (ib + 1) % n, ++cb;
        else if (cb >= n)
            step = ea, ia = (ia + 1) % n, ++ca;
        else {
            double cr = cross(ea, eb);
            if (cr > 0)
                step = ea, ia = (ia + 1) % n, ++ca;
            else if (cr < 0)
                step = eb, ib = (ib + 1) % n, ++cb;
            else {
                step = ea + eb;
                ia = (ia + 1) % n;
                ib = (ib + 1) % n;
                ++ca, ++cb;
            }
        }
        cur = cur + step * 0.5;
    }
    return out;
}

// area of the polar body of a ccw convex polygon containing 0
inline double polar_area(const std::vector<Point2>& m) {
    std::size_t n = m.size();
    std::vector<Point2> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 d = m[(i + 1) % n] - m[i];
        double len = d.norm();
        if (len < 1e-300) continue;
        Vec2 u = -(d / len).perp();       // outward normal
        double c = dot(u, m[i]);          // support value, > 0 when 0 interior
        b.push_back(u / c);
    }
    double s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += cross(b[i], b[(i + 1) % b.size()]);
    return 0.5 * std::abs(s);
}

// Finsler unit-ball area from the per-edge distances num_e > 0 of a point to
// the edge lines of a polygonal domain.
inline double ball_area_from_edge_distances(const ConvexBoundary2D& dom,
                                            const std::vector<double>& num) {
    std::size_t n = dom.edge_count();
    std::vector<Point2> dual(n);
    for (std::size_t e = 0; e < n; ++e) dual[e] = dom.edge_normal(e) / num[e];
    std::vector<Point2> q = convex_hull(std::move(dual));
    std::vector<Point2> m = minkowski_symmetrize(q);
    return polar_area(m);
}

}  // namespace detail

// Exact Finsler unit-ball area at an interior point of a polygonal domain.
inline double polygon_ball_area(const ConvexBoundary2D& dom, Point2 x) {
    std::size_t n = dom.edge_count();
    std::vector<double> num(n);
    for (std::size_t e = 0; e < n; ++e) {
        num[e] = dom.edge_support(e) - dot(dom.edge_normal(e), x - dom.basepoint());
        if (!(num[e] > 0)) throw NotInterior();
    }
    return detail::ball_area_from_edge_distances(dom, num);
}

// Cancellation-free edge-line distances for the scaled point
//   x = c + (1 - delta) * (V_anchor + u * dir - c),
// where V_anchor is a polygon vertex and dir a unit vector along an incident
// edge.  Distances stay exact even for delta near 1e-18.
struct ScaledCornerFrame {
    const ConvexBoundary2D* dom = nullptr;
    std::size_t anchor = 0;
    Vec2 dir;
    std::vector<double> G;  // h_e - <n_e, V_anchor - c>, forced 0 on incident edges
    std::vector<double> S;  // <n_e, V_anchor - c>, forced to h_e on incident edges
    std::vector<double> B;  // <n_e, dir>, forced 0 on the traveled edge

    ScaledCornerFrame(const ConvexBoundary2D& d, std::size_t anchor_vertex, Vec2 direction,
                      std::size_t traveled_edge)
        : dom(&d), anchor(anchor_vertex), dir(direction) {
        std::size_t n = d.edge_count();
        G.resize(n);
        S.resize(n);
        B.resize(n);
        Vec2 w = d.edge_start(anchor) - d.basepoint();
        std::size_t prev = (anchor + n - 1) % n;
        for (std::size_t e = 0; e < n; ++e) {
            S[e] = dot(d.edge_normal(e), w);
            G[e] = d.edge_support(e) - S[e];
            B[e] = dot(d.edge_normal(e), dir);
            if (e == anchor || e == prev) {
                G[e] = 0.0;  // V_anchor lies on these edge lines exactly
                S[e] = d.edge_support(e);
            }
            if (e == traveled_edge) B[e] = 0.0;
        }
    }

    // edge-line distances of the scaled point at arclength u, scale 1 - delta
    void edge_distances(double u, double delta, std::vector<double>& num) const {
        std::size_t n = G.size();
        num.resize(n);
        for (std::size_t e = 0; e < n; ++e)
            num[e] = (G[e] - u * B[e]) + delta * (S[e] + u * B[e]);
    }

    double ball_area(double u, double delta, std::vector<double>& scratch) const {
        edge_distances(u, delta, scratch);
        return detail::ball_area_from_edge_distances(*dom, scratch);
    }
};

// ---------------------------------------------------------------------------
// Busemann density
// ---------------------------------------------------------------------------

// sigma(x) = pi / Vol(B_x), Vol(B_x) = (1/2) int r(v)^2 dv.  Polygonal
// domains with few edges use the exact polar-body area; everything else uses
// adaptive Simpson over directions (cap 24 levels -> QuadratureNonConvergent).
inline double busemann_density(const ConvexBoundary2D& domain, Point2 x, double quad_tol = 1e-8,
                               double tol = kTolGeo) {
    domain.require_interior(x, tol);
    if (domain.polygonal() && domain.edge_count() <= 4096) return kPi / polygon_ball_area(domain, x);
    auto r2 = [&](double phi) {
        FinslerSample s = finsler_sample(domain, x, unit_from_angle(phi));
        double r = s.unit_ball_radius();
        return r * r;
    };
    double vol = 0.5 * adaptive_simpson(r2, 0.0, kTwoPi, quad_tol, 24);
    return kPi / vol;
}

// Quadrature-only route, kept as an independent cross-check of the exact
// polygonal path.
inline double busemann_density_quadrature(const ConvexBoundary2D& domain, Point2 x,
                                          double quad_tol = 1e-8) {
    auto r2 = [&](double phi) {
        FinslerSample s = finsler_sample(domain, x, unit_from_angle(phi));
        double r = s.unit_ball_radius();
        return r * r;
    };
    double vol = 0.5 * adaptive_simpson(r2, 0.0, kTwoPi, quad_tol, 24);
    return kPi / vol;
}

// sigma(lambda p) (1 - lambda)^{3/2} for p = point(s), scaling about the
// basepoint.  As lambda -> 1 at a twice-differentiable boundary point this
// approaches sqrt(k(p)) / (2^{3/2} <p - c, n(p)>).
inline double blowup_ratio(const ConvexBoundary2D& domain, double s, double lambda,
                           double quad_tol = 1e-8) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw InvalidParameter("lambda must lie in (0,1)");
    Point2 c = domain.basepoint();
    Point2 x = c + lambda * (domain.point(s) - c);
    return busemann_density(domain, x, quad_tol) * std::pow(1.0 - lambda, 1.5);
}

// ---------------------------------------------------------------------------
// curvature profiles and the centro-projective area
// ---------------------------------------------------------------------------

struct CurvatureProfile {
    bool identically_zero = false;
    std::function<double(double)> k;  // Euclidean curvature at boundary parameter theta
};

inline CurvatureProfile curvature_profile(const ConvexBoundary2D& domain) {
    switch (domain.kind()) {
        case BoundaryKind::polygon:
        case BoundaryKind::cantor:
            // k = 0 a.e.; vertex atoms are not represented pointwise
            return {true, [](double) { return 0.0; }};
        case BoundaryKind::ellipse: {
            double a = domain.ellipse_a(), b = domain.ellipse_b();
            Point2 c = domain.ellipse_center();
            return {false, [a, b, c, &domain](double theta) {
                        // g^2 = a^2 sin^2 phi + b^2 cos^2 phi with cos phi = (x-cx)/a
                        Point2 p = domain.point(theta);
                        double cphi = (p.x - c.x) / a;
                        double g2 = a * a * (1 - cphi * cphi) + b * b * cphi * cphi;
                        return a * b / (g2 * std::sqrt(g2));
                    }};
        }
        case BoundaryKind::radial: {
            return {false, [&domain](double theta) {
                        // polar curvature from the interpolated profile
                        double h = 1e-4;
                        auto r = [&](double t) {
                            return (domain.point(t) - domain.basepoint()).norm();
                        };
                        double r0 = r(theta);
                        double rp = (r(theta + h) - r(theta - h)) / (2 * h);
                        double rpp = (r(theta + h) - 2 * r0 + r(theta - h)) / (h * h);
                        double denom = std::pow(r0 * r0 + rp * rp, 1.5);
                        return (r0 * r0 + 2 * rp * rp - r0 * rpp) / denom;
                    }};
        }
    }
    return {true, [](double) { return 0.0; }};
}

// A(Omega) = int_{boundary} 2 a sqrt(k) / ((1+a) <n(x), x - origin>)^{1/2} dL
inline double centro_projective_area(const ConvexBoundary2D& domain,
                                     const CurvatureProfile& profile, Point2 origin,
                                     double quad_tol = 1e-8) {
    domain.require_interior(origin);
    if (profile.identically_zero) return 0.0;
    auto integrand = [&](double theta) {
        double k = std::max(profile.k(theta), 0.0);
        if (k == 0.0) return 0.0;
        Point2 p = domain.point(theta);
        Vec2 n = domain.tangents(theta).normal();
        double a = domain.antipodal_ratio(theta, origin);
        double speed = domain.point_derivative(theta).norm();
        double support = dot(n, p - origin);
        return 2.0 * a * std::sqrt(k) / std::sqrt((1.0 + a) * support) * speed;
    };
    return adaptive_simpson(integrand, 0.0, kTwoPi, quad_tol, 24);
}

// ---------------------------------------------------------------------------
// Finsler path length
// ---------------------------------------------------------------------------

// Sum of adaptive Gauss-Legendre integrals of the Finsler norm along each
// polyline segment; additive under concatenation, and equal to the Hilbert
// distance on straight segments (geodesic property).
inline double finsler_path_length(const ConvexBoundary2D& domain,
                                  const std::vector<Point2>& polyline, double quad_tol = 1e-8) {
    if (polyline.size() < 2) return 0.0;
    for (const Point2& p : polyline) domain.require_interior(p);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        Point2 p = polyline[i], q = polyline[i + 1];
        Vec2 d = q - p;
        double len = d.norm();
        if (len <= 0) continue;
        Vec2 u = d / len;
        auto f = [&](double t) {
            FinslerSample s = finsler_sample(domain, p + t * d, u);
            return len * s.norm_value;
        };
        total += adaptive_gauss_legendre(f, 0.0, 1.0, quad_tol);
    }
    return total;
}

}  // namespace hilbert
