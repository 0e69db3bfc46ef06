// Bounded convex 2D domains with an interior basepoint, and the geometric
// queries every other module consumes: boundary lookup by polar angle, ray
// exits, chords, one-sided tangents and the antipodal function.
//
// Boundary parametrization is by the polar angle theta in [0, 2pi) around the
// basepoint for every variant.  Lookups are exact for the ellipse and for
// polygonal variants (polygon, cantor), and piecewise-interpolated for the
// radial variant.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/errors.hpp"

namespace hilbert {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Default absolute coordinate tolerance for geometric predicates.
inline constexpr double kTolGeo = 1e-10;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double xx, double yy) : x(xx), y(yy) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }

    double norm() const { return std::hypot(x, y); }
    constexpr double sq_norm() const { return x * x + y * y; }
    Vec2 normalized() const {
        double n = norm();
        return n > 0 ? Vec2{x / n, y / n} : Vec2{0, 0};
    }
    // counterclockwise quarter turn
    constexpr Vec2 perp() const { return {-y, x}; }
};

using Point2 = Vec2;

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }
inline Vec2 unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0 ? a + kTwoPi : a;
}

enum class BoundaryKind { polygon, ellipse, radial, cantor };

inline const char* to_string(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::polygon: return "polygon";
        case BoundaryKind::ellipse: return "ellipse";
        case BoundaryKind::radial: return "radial";
        case BoundaryKind::cantor: return "cantor";
    }
    return "?";
}

// a, p, q, b collinear and in this order; a and b on the boundary.
struct Chord {
    Point2 a, p, q, b;
};

struct RayHit {
    Point2 point;
    double t = 0.0;   // distance from the ray origin
    int edge = -1;    // polygonal variants: index of the hit edge
};

// One-sided tangents and the outward normal set at a boundary point.  At
// smooth points forward == backward and the normal arc is degenerate; at a
// polygon vertex the normal set is the arc [normal_lo, normal_hi] between the
// two edge normals.
struct TangentFrame {
    Vec2 forward;
    Vec2 backward;
    double normal_lo = 0.0;
    double normal_hi = 0.0;
    bool vertex = false;

    Vec2 normal() const { return unit_from_angle(0.5 * (normal_lo + normal_hi)); }
};

// Extra payload kept by the cantor variant (see cantor.hpp for construction).
struct CantorBoundaryInfo {
    double p = 0.0;
    int depth = 0;
    double half_length_exact = 0.0;    // total length of the exact gap segments
    double half_length_residual = 0.0; // total length of the residual chords
    Point2 symmetry_center;            // before recentering
};

class ConvexBoundary2D {
  public:
    // ---- constructors ----

    // Vertices in counterclockwise order (clockwise input is reversed).
    // Throws SpecError naming the violating vertex triple when not strictly
    // convex.  The basepoint defaults to the area centroid.
    static ConvexBoundary2D polygon(std::vector<Point2> vertices,
                                    std::optional<Point2> basepoint = std::nullopt) {
        ConvexBoundary2D d;
        d.kind_ = BoundaryKind::polygon;
        d.init_polygonal(std::move(vertices), basepoint);
        return d;
    }

    static ConvexBoundary2D ellipse(double a, double b, Point2 center = {0, 0},
                                    std::optional<Point2> basepoint = std::nullopt) {
        if (!(a > 0) || !(b > 0)) throw SpecError("ellipse semi-axes must be positive");
        ConvexBoundary2D d;
        d.kind_ = BoundaryKind::ellipse;
        d.ea_ = a;
        d.eb_ = b;
        d.center_ = center;
        d.basepoint_ = basepoint.value_or(center);
        if (basepoint && !d.is_interior(*basepoint))
            throw NotInterior("ellipse basepoint is not interior");
        return d;
    }

    static ConvexBoundary2D disk(double r = 1.0, Point2 center = {0, 0}) {
        return ellipse(r, r, center);
    }

    // rho sampled on the uniform grid theta_i = 2*pi*i/n around `center`.
    // Samples must pass a support-line convexity audit.
    static ConvexBoundary2D radial(std::vector<double> rho, Point2 center = {0, 0}) {
        if (rho.size() < 8) throw SpecError("radial variant needs at least 8 samples");
        for (std::size_t i = 0; i < rho.size(); ++i)
            if (!(rho[i] > 0) || !std::isfinite(rho[i]))
                throw SpecError("radial sample " + std::to_string(i) + " is not positive");
        ConvexBoundary2D d;
        d.kind_ = BoundaryKind::radial;
        d.center_ = center;
        d.basepoint_ = center;
        d.rho_ = std::move(rho);
        d.audit_radial_convexity();
        return d;
    }

    // Used by cantor.hpp: a polygonal boundary tagged as the cantor variant.
    static ConvexBoundary2D cantor_polygon(std::vector<Point2> vertices, Point2 basepoint,
                                           CantorBoundaryInfo info) {
        ConvexBoundary2D d;
        d.kind_ = BoundaryKind::cantor;
        d.init_polygonal(std::move(vertices), basepoint);
        d.cantor_info_ = info;
        return d;
    }

    // ---- basic accessors ----

    BoundaryKind kind() const { return kind_; }
    Point2 basepoint() const { return basepoint_; }
    bool polygonal() const {
        return kind_ == BoundaryKind::polygon || kind_ == BoundaryKind::cantor;
    }
    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t edge_count() const { return verts_.size(); }
    const CantorBoundaryInfo& cantor_info() const { return cantor_info_; }
    double ellipse_a() const { return ea_; }
    double ellipse_b() const { return eb_; }
    Point2 ellipse_center() const { return center_; }
    const std::vector<double>& radial_samples() const { return rho_; }

    // Edge helpers (polygonal variants). Edge e runs vertex e -> e+1.
    Point2 edge_start(std::size_t e) const { return verts_[e]; }
    Point2 edge_end(std::size_t e) const { return verts_[(e + 1) % verts_.size()]; }
    Vec2 edge_tangent(std::size_t e) const { return etan_[e]; }
    Vec2 edge_normal(std::size_t e) const { return enorm_[e]; }
    double edge_length(std::size_t e) const { return elen_[e]; }
    // support offset of edge e's line from the basepoint
    double edge_support(std::size_t e) const { return esupp_[e]; }

    // ---- area / symmetry ----

    double area() const {
        switch (kind_) {
            case BoundaryKind::ellipse:
                return kPi * ea_ * eb_;
            case BoundaryKind::radial: {
                // (1/2) integral rho^2 dtheta, trapezoid on the sample grid
                double s = 0;
                std::size_t n = rho_.size();
                for (std::size_t i = 0; i < n; ++i) s += rho_[i] * rho_[i];
                return 0.5 * s * (kTwoPi / double(n));
            }
            default: {
                double s = 0;
                for (std::size_t i = 0; i < verts_.size(); ++i)
                    s += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
                return 0.5 * std::abs(s);
            }
        }
    }

    // True when the boundary is centrally symmetric about the basepoint.
    bool centrally_symmetric(double tol = 1e-9) const {
        switch (kind_) {
            case BoundaryKind::ellipse:
                return distance(basepoint_, center_) <= tol;
            case BoundaryKind::cantor:
                return true;  // symmetric by construction
            case BoundaryKind::radial: {
                std::size_t n = rho_.size();
                if (n % 2 != 0) return false;
                for (std::size_t i = 0; i < n / 2; ++i)
                    if (std::abs(rho_[i] - rho_[i + n / 2]) > tol) return false;
                return true;
            }
            case BoundaryKind::polygon: {
                // every vertex must have its reflection among the vertices
                for (const Point2& v : verts_) {
                    Point2 r = basepoint_ * 2.0 - v;
                    bool found = false;
                    for (const Point2& w : verts_)
                        if (distance(w, r) <= tol) {
                            found = true;
                            break;
                        }
                    if (!found) return false;
                }
                return true;
            }
        }
        return false;
    }

    // ---- interior test ----

    bool is_interior(Point2 x, double tol = kTolGeo) const {
        switch (kind_) {
            case BoundaryKind::ellipse: {
                double u = (x.x - center_.x) / ea_;
                double v = (x.y - center_.y) / eb_;
                return u * u + v * v < 1.0 - tol / std::min(ea_, eb_);
            }
            case BoundaryKind::radial: {
                Vec2 w = x - basepoint_;
                double r = w.norm();
                if (r <= tol) return true;
                return r < rho_interp(std::atan2(w.y, w.x)) - tol;
            }
            default: {
                Vec2 w = x - basepoint_;
                double r = w.norm();
                if (r <= tol) return true;
                double theta = std::atan2(w.y, w.x);
                std::size_t e = edge_at_angle(theta);
                double denom = dot(enorm_[e], w / r);
                if (denom <= 0) return false;  // cannot happen for convex data
                return r < esupp_[e] / denom - tol;
            }
        }
    }

    void require_interior(Point2 x, double tol = kTolGeo) const {
        if (!is_interior(x, tol)) throw NotInterior();
    }

    // ---- boundary point by polar angle around the basepoint ----

    Point2 point(double theta) const { return basepoint_ + radius(theta) * unit_from_angle(theta); }

    double radius(double theta) const {
        switch (kind_) {
            case BoundaryKind::ellipse: {
                if (distance(basepoint_, center_) <= 1e-15 * (ea_ + eb_)) {
                    double c = std::cos(theta), s = std::sin(theta);
                    return ea_ * eb_ / std::hypot(eb_ * c, ea_ * s);
                }
                return ellipse_ray(basepoint_, unit_from_angle(theta));
            }
            case BoundaryKind::radial:
                return rho_interp(theta);
            default: {
                std::size_t e = edge_at_angle(theta);
                return esupp_[e] / dot(enorm_[e], unit_from_angle(theta));
            }
        }
    }

    // d(point)/d(theta) for the smooth variants (ellipse with basepoint at the
    // center, radial).  Polygonal variants integrate per edge instead.
    Vec2 point_derivative(double theta) const {
        switch (kind_) {
            case BoundaryKind::ellipse: {
                double c = std::cos(theta), s = std::sin(theta);
                double g2 = eb_ * eb_ * c * c + ea_ * ea_ * s * s;
                double r = ea_ * eb_ / std::sqrt(g2);
                double dr = ea_ * eb_ * (eb_ * eb_ - ea_ * ea_) * s * c / (g2 * std::sqrt(g2));
                return dr * unit_from_angle(theta) + r * unit_from_angle(theta).perp();
            }
            case BoundaryKind::radial: {
                double r = rho_interp(theta);
                double dr = rho_interp_derivative(theta);
                return dr * unit_from_angle(theta) + r * unit_from_angle(theta).perp();
            }
            default:
                throw InvalidParameter("point_derivative is defined for smooth variants only");
        }
    }

    // ---- ray exit ----

    // Unique boundary hit of the ray x + t v, t > 0.  |v| must be 1 within
    // 1e-12; x must be strictly interior.
    RayHit ray_exit(Point2 x, Vec2 v, double tol = kTolGeo) const {
        if (std::abs(v.norm() - 1.0) > 1e-12) throw NonUnitDirection();
        require_interior(x, tol);
        return ray_exit_unchecked(x, v);
    }

    // Same, without the precondition checks (hot paths construct interior
    // points by scaling and directions by normalization).
    RayHit ray_exit_unchecked(Point2 x, Vec2 v) const {
        switch (kind_) {
            case BoundaryKind::ellipse: {
                double t = ellipse_ray(x, v);
                return {x + t * v, t, -1};
            }
            case BoundaryKind::radial:
                return radial_ray(x, v);
            default:
                return polygon_ray(x, v);
        }
    }

    Chord chord_through(Point2 p, Point2 q, double tol = kTolGeo) const {
        if (distance(p, q) <= tol) throw CoincidentPoints();
        require_interior(p, tol);
        require_interior(q, tol);
        Vec2 dir = (q - p).normalized();
        RayHit hb = ray_exit_unchecked(q, dir);
        RayHit ha = ray_exit_unchecked(p, -dir);
        return Chord{ha.point, p, q, hb.point};
    }

    // ---- tangents / normals ----

    TangentFrame tangents(double theta) const {
        switch (kind_) {
            case BoundaryKind::ellipse: {
                Point2 pt = point(theta);
                Vec2 g{(pt.x - center_.x) / (ea_ * ea_), (pt.y - center_.y) / (eb_ * eb_)};
                Vec2 n = g.normalized();
                Vec2 t = n.perp();  // ccw forward
                double na = std::atan2(n.y, n.x);
                return {t, t, na, na, false};
            }
            case BoundaryKind::radial: {
                Vec2 d = point_derivative(theta).normalized();
                Vec2 n = -d.perp();  // outward for ccw parametrization
                double na = std::atan2(n.y, n.x);
                return {d, d, na, na, false};
            }
            default: {
                std::size_t e = edge_at_angle(wrap_angle(theta));
                Point2 pt = basepoint_ +
                            (esupp_[e] / dot(enorm_[e], unit_from_angle(theta))) *
                                unit_from_angle(theta);
                std::size_t n = verts_.size();
                // vertex cases: pt within tol of either endpoint of edge e
                if (distance(pt, verts_[e]) <= kTolGeo) {
                    std::size_t prev = (e + n - 1) % n;
                    double lo = std::atan2(enorm_[prev].y, enorm_[prev].x);
                    double hi = std::atan2(enorm_[e].y, enorm_[e].x);
                    if (hi < lo) hi += kTwoPi;
                    return {etan_[e], etan_[prev], lo, hi, true};
                }
                if (distance(pt, edge_end(e)) <= kTolGeo) {
                    std::size_t next = (e + 1) % n;
                    double lo = std::atan2(enorm_[e].y, enorm_[e].x);
                    double hi = std::atan2(enorm_[next].y, enorm_[next].x);
                    if (hi < lo) hi += kTwoPi;
                    return {etan_[next], etan_[e], lo, hi, true};
                }
                double na = std::atan2(enorm_[e].y, enorm_[e].x);
                return {etan_[e], etan_[e], na, na, false};
            }
        }
    }

    // The antipodal function a(p) at p = point(theta), with the paper's origin
    // translated to `origin`: -a(p) (p - origin) + origin is on the boundary.
    double antipodal_ratio(double theta, Point2 origin, double tol = kTolGeo) const {
        require_interior(origin, tol);
        Point2 p = point(theta);
        Vec2 w = p - origin;
        double r = w.norm();
        RayHit h = ray_exit_unchecked(origin, -(w / r));
        return h.t / r;
    }

    // ---- convexity audit (support-line test on sampled boundary points) ----

    // max signed violation of "all samples on the inner side of every sampled
    // support line"; <= tol means the audit passes.
    double convexity_violation(std::size_t n_samples = 512) const {
        double worst = 0.0;
        std::vector<Point2> pts(n_samples);
        for (std::size_t i = 0; i < n_samples; ++i)
            pts[i] = point(kTwoPi * double(i) / double(n_samples));
        for (std::size_t i = 0; i < n_samples; ++i) {
            Point2 a = pts[i], b = pts[(i + 1) % n_samples];
            Vec2 nrm = (b - a).perp();  // inward for ccw
            double nn = nrm.norm();
            if (nn == 0) continue;
            nrm = nrm / nn;
            for (std::size_t j = 0; j < n_samples; ++j)
                worst = std::max(worst, -dot(nrm, pts[j] - a));
        }
        return worst;
    }

  private:
    BoundaryKind kind_ = BoundaryKind::polygon;
    Point2 basepoint_;

    // polygonal storage
    std::vector<Point2> verts_;
    std::vector<Vec2> etan_, enorm_;
    std::vector<double> elen_, esupp_;
    std::vector<double> vang_;  // angle of vertex i around basepoint, lifted increasing
    CantorBoundaryInfo cantor_info_;

    // ellipse storage
    double ea_ = 0.0, eb_ = 0.0;
    Point2 center_;

    // radial storage
    std::vector<double> rho_;

    void init_polygonal(std::vector<Point2> vertices, std::optional<Point2> basepoint) {
        if (vertices.size() < 3) throw SpecError("polygon needs at least 3 vertices");
        double s2 = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            s2 += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
        if (s2 < 0) std::reverse(vertices.begin(), vertices.end());

        std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 a = vertices[(i + 1) % n] - vertices[i];
            Vec2 b = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            if (cross(a, b) <= 0)
                throw SpecError("polygon is not strictly convex at vertex triple (" +
                                std::to_string(i) + ", " + std::to_string((i + 1) % n) + ", " +
                                std::to_string((i + 2) % n) + ")");
        }
        verts_ = std::move(vertices);

        if (basepoint) {
            basepoint_ = *basepoint;
        } else {
            // area centroid
            double a6 = 0;
            Vec2 c{0, 0};
            for (std::size_t i = 0; i < n; ++i) {
                Point2 p = verts_[i], q = verts_[(i + 1) % n];
                double w = cross(p, q);
                a6 += w;
                c = c + (p + q) * w;
            }
            basepoint_ = c / (3.0 * a6);
        }

        etan_.resize(n);
        enorm_.resize(n);
        elen_.resize(n);
        esupp_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 d = edge_end(i) - verts_[i];
            elen_[i] = d.norm();
            etan_[i] = d / elen_[i];
            enorm_[i] = -etan_[i].perp();  // outward for ccw
            esupp_[i] = dot(enorm_[i], verts_[i] - basepoint_);
            if (esupp_[i] <= kTolGeo)
                throw NotInterior("basepoint is not strictly interior to the polygon");
        }

        // lifted (monotone increasing) vertex angles around the basepoint
        vang_.resize(n + 1);
        double prev = std::atan2(verts_[0].y - basepoint_.y, verts_[0].x - basepoint_.x);
        vang_[0] = prev;
        for (std::size_t i = 1; i < n; ++i) {
            double a = std::atan2(verts_[i].y - basepoint_.y, verts_[i].x - basepoint_.x);
            while (a < prev) a += kTwoPi;
            vang_[i] = a;
            prev = a;
        }
        vang_[n] = vang_[0] + kTwoPi;
        if (vang_[n] < prev) throw SpecError("polygon winds more than once around the basepoint");
    }

    // index of the edge whose angular sector (seen from the basepoint)
    // contains theta
    std::size_t edge_at_angle(double theta) const {
        double t = vang_[0] + wrap_angle(theta - vang_[0]);
        auto it = std::upper_bound(vang_.begin(), vang_.end(), t);
        std::size_t i = std::size_t(it - vang_.begin());
        return (i == 0 ? verts_.size() : i) - 1;
    }

    double ellipse_ray(Point2 x, Vec2 v) const {
        // |M (x + t v - center)|^2 = 1 with M = diag(1/a, 1/b)
        Vec2 w{(x.x - center_.x) / ea_, (x.y - center_.y) / eb_};
        Vec2 u{v.x / ea_, v.y / eb_};
        double A = u.sq_norm(), B = dot(w, u), C = w.sq_norm() - 1.0;
        double disc = B * B - A * C;
        if (disc < 0) throw NoIntersection("ellipse ray discriminant negative");
        return (-B + std::sqrt(disc)) / A;
    }

    RayHit polygon_ray(Point2 x, Vec2 v) const {
        std::size_t n = verts_.size();
        // delta(k): signed angle of (V_k - x) relative to v, in (-pi, pi].
        // Around the polygon it increases with exactly one wrap; the forward
        // exit edge is the zero crossing on the monotone stretch.
        auto delta = [&](std::size_t k) {
            Vec2 u = verts_[k] - x;
            return std::atan2(cross(v, u), dot(v, u));
        };
        // find the wrap (the unique k with delta(k) > delta(k+1)) by rotated-
        // array bisection
        std::size_t lo = 0, hi = n;  // wrap lies in [lo, hi)
        double d0 = delta(0);
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (delta(mid % n) >= d0)
                lo = mid;
            else
                hi = mid;
        }
        std::size_t wrap = lo;  // delta drops between wrap and wrap+1
        // on the cycle starting at wrap+1 delta is increasing from near -pi;
        // find the last k with delta(k) <= 0: the exit edge is (k, k+1)
        auto lifted = [&](std::size_t j) { return delta((wrap + 1 + j) % n); };
        std::size_t a = 0, b = n - 1;  // indices into the lifted order
        if (lifted(0) > 0) {
            // exit lies on edge (wrap, wrap+1) itself
            a = n - 1;
        } else {
            while (b - a > 1) {
                std::size_t mid = (a + b) / 2;
                if (lifted(mid) <= 0)
                    a = mid;
                else
                    b = mid;
            }
            double la = lifted(a);
            if (la == 0.0) {
                // ray passes exactly through a vertex
                std::size_t k = (wrap + 1 + a) % n;
                Vec2 u = verts_[k] - x;
                if (dot(u, v) > 0) return {verts_[k], u.norm(), int(k)};
            }
        }
        std::size_t e = (wrap + 1 + a) % n;
        double denom = dot(enorm_[e], v);
        if (denom > 0) {
            double t = dot(enorm_[e], verts_[e] - x) / denom;
            if (t >= 0) return {x + t * v, t, int(e)};
        }
        return polygon_ray_scan(x, v);
    }

    // O(n) fallback for degenerate configurations (ray through a vertex or
    // collinear with an edge)
    RayHit polygon_ray_scan(Point2 x, Vec2 v) const {
        std::size_t n = verts_.size();
        double best_t = std::numeric_limits<double>::infinity();
        int best_e = -1;
        for (std::size_t e = 0; e < n; ++e) {
            double denom = dot(enorm_[e], v);
            if (denom <= 0) continue;
            double t = dot(enorm_[e], verts_[e] - x) / denom;
            if (t < 0) continue;
            Point2 h = x + t * v;
            double s = dot(h - verts_[e], etan_[e]);
            if (s < -kTolGeo || s > elen_[e] + kTolGeo) continue;
            if (t < best_t) {
                best_t = t;
                best_e = int(e);
            }
        }
        if (best_e < 0) throw NoIntersection("polygon ray: no exit edge found");
        return {x + best_t * v, best_t, best_e};
    }

    RayHit radial_ray(Point2 x, Vec2 v) const {
        // monotone bracketing bisection on the boundary parameter
        std::size_t n = rho_.size();
        auto delta = [&](double theta) {
            Vec2 u = point(theta) - x;
            return std::atan2(cross(v, u), dot(v, u));
        };
        double step = kTwoPi / double(n);
        double lo = 0, hi = 0;
        bool found = false;
        double prev_theta = 0, prev_d = delta(0.0);
        for (std::size_t i = 1; i <= n; ++i) {
            double th = step * double(i);
            double d = delta(th);
            if (prev_d <= 0 && d > 0 && d - prev_d < kPi) {
                lo = prev_theta;
                hi = th;
                found = true;
                break;
            }
            prev_theta = th;
            prev_d = d;
        }
        if (!found) {
            // zero crossing hidden inside one sector: fall back to fine scan
            std::size_t m = 16 * n;
            step = kTwoPi / double(m);
            prev_theta = 0;
            prev_d = delta(0.0);
            for (std::size_t i = 1; i <= m; ++i) {
                double th = step * double(i);
                double d = delta(th);
                if (prev_d <= 0 && d > 0 && d - prev_d < kPi) {
                    lo = prev_theta;
                    hi = th;
                    found = true;
                    break;
                }
                prev_theta = th;
                prev_d = d;
            }
        }
        if (!found) throw NoIntersection("radial ray: no bracket");
        while (hi - lo > 1e-12) {
            double mid = 0.5 * (lo + hi);
            (delta(mid) <= 0 ? lo : hi) = mid;
        }
        Point2 hit = point(0.5 * (lo + hi));
        Vec2 u = hit - x;
        double t = u.norm();
        // project the hit onto the exact ray: collinearity is limited by the
        // bisection tolerance
        return {x + t * v, t, -1};
    }

    void audit_radial_convexity() {
        std::size_t n = rho_.size();
        double scale = *std::max_element(rho_.begin(), rho_.end());
        for (std::size_t i = 0; i < n; ++i) {
            Point2 a = sample_point(i), b = sample_point((i + 1) % n);
            Vec2 nrm = (b - a).perp().normalized();
            for (std::size_t j = 0; j < n; ++j)
                if (dot(nrm, sample_point(j) - a) < -1e-8 * scale)
                    throw SpecError("radial samples fail the support-line convexity test at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    }

    Point2 sample_point(std::size_t i) const {
        double th = kTwoPi * double(i) / double(rho_.size());
        return basepoint_ + rho_[i] * unit_from_angle(th);
    }

    // periodic Catmull-Rom interpolation of the rho samples
    double rho_interp(double theta) const {
        std::size_t n = rho_.size();
        double u = wrap_angle(theta) / kTwoPi * double(n);
        std::size_t i = std::size_t(u) % n;
        double f = u - std::floor(u);
        double pm1 = rho_[(i + n - 1) % n], p0 = rho_[i], p1 = rho_[(i + 1) % n],
               p2 = rho_[(i + 2) % n];
        double a = -0.5 * pm1 + 1.5 * p0 - 1.5 * p1 + 0.5 * p2;
        double b = pm1 - 2.5 * p0 + 2.0 * p1 - 0.5 * p2;
        double c = 0.5 * (p1 - pm1);
        return ((a * f + b) * f + c) * f + p0;
    }

    double rho_interp_derivative(double theta) const {
        std::size_t n = rho_.size();
        double u = wrap_angle(theta) / kTwoPi * double(n);
        std::size_t i = std::size_t(u) % n;
        double f = u - std::floor(u);
        double pm1 = rho_[(i + n - 1) % n], p0 = rho_[i], p1 = rho_[(i + 1) % n],
               p2 = rho_[(i + 2) % n];
        double a = -0.5 * pm1 + 1.5 * p0 - 1.5 * p1 + 0.5 * p2;
        double b = pm1 - 2.5 * p0 + 2.0 * p1 - 0.5 * p2;
        double c = 0.5 * (p1 - pm1);
        return ((3 * a * f + 2 * b) * f + c) * double(n) / kTwoPi;
    }
};

// chord_through wrapper matching the operation vocabulary
inline Chord chord_through(const ConvexBoundary2D& domain, Point2 p, Point2 q,
                           double tol = kTolGeo) {
    return domain.chord_through(p, q, tol);
}

}  // namespace hilbert
