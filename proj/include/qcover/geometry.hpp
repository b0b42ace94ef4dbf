#pragma once

// Planar primitives: points, polygons, hulls, affine maps, and the
// largest-inscribed-homothet LP used by the capacity computation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcover {

struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
    friend Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
    Point2& operator+=(Point2 b) { x += b.x; y += b.y; return *this; }
    Point2& operator-=(Point2 b) { x -= b.x; y -= b.y; return *this; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

using Dir2 = Point2;

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

// Oriented area of the parallelogram spanned by s and t.
inline double wedge(Point2 s, Point2 t) { return s.x * t.y - s.y * t.x; }

inline double norm2(Point2 a) { return std::hypot(a.x, a.y); }

inline Point2 normalized(Point2 a) {
    double n = norm2(a);
    if (n == 0.0) throw geometry_error("cannot normalize zero vector");
    return {a.x / n, a.y / n};
}

// Counterclockwise rotation by pi/2.
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Default relative tolerance for geometric predicates; absolute tolerances
// are this value times a characteristic length of the input.
inline constexpr double kRelTol = 1e-9;

inline double diameter(std::span<const Point2> pts) {
    double d = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, norm2(pts[i] - pts[j]));
    return d;
}

namespace detail {

inline std::vector<Point2> hull_of(std::span<const Point2> points, double tol) {
    std::vector<Point2> pts(points.begin(), points.end());
    for (const auto& p : pts)
        if (!is_finite(p)) throw geometry_error("non-finite point in hull input");
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [tol](Point2 a, Point2 b) { return norm2(a - b) <= tol; }),
              pts.end());
    if (pts.size() < 3) throw geometry_error("hull input degenerate: fewer than 3 distinct points");

    // Andrew's monotone chain; strictly convex turns only, so collinear
    // interior points are dropped.
    auto build = [tol](const std::vector<Point2>& ps) {
        std::vector<Point2> chain;
        for (const auto& p : ps) {
            while (chain.size() >= 2 &&
                   wedge(chain.back() - chain[chain.size() - 2], p - chain[chain.size() - 2]) <=
                       tol * norm2(p - chain[chain.size() - 2]))
                chain.pop_back();
            chain.push_back(p);
        }
        return chain;
    };
    std::vector<Point2> lower = build(pts);
    std::vector<Point2> rev(pts.rbegin(), pts.rend());
    std::vector<Point2> upper = build(rev);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw geometry_error("hull input degenerate: all points collinear");
    return lower;
}

}  // namespace detail

// Strictly convex polygon, counterclockwise, canonicalized so the
// lowest-then-leftmost vertex comes first.
class ConvexPolygon {
  public:
    explicit ConvexPolygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
        if (verts_.size() < 3) throw geometry_error("polygon needs at least 3 vertices");
        for (const auto& v : verts_)
            if (!is_finite(v)) throw geometry_error("non-finite polygon vertex");
        double scale = diameter(verts_);
        double tol = kRelTol * scale;
        double twice_area = 0.0;
        for (size_t i = 0; i < verts_.size(); ++i)
            twice_area += wedge(verts_[i], verts_[(i + 1) % verts_.size()]);
        if (twice_area < 0.0) std::reverse(verts_.begin(), verts_.end());
        size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) {
            Point2 a = verts_[i], b = verts_[(i + 1) % n], c = verts_[(i + 2) % n];
            if (norm2(b - a) <= tol) throw geometry_error("repeated polygon vertex");
            if (wedge(b - a, c - b) <= tol * scale)
                throw geometry_error("polygon not strictly convex");
        }
        auto lowest = std::min_element(verts_.begin(), verts_.end(), [](Point2 a, Point2 b) {
            return a.y < b.y || (a.y == b.y && a.x < b.x);
        });
        std::rotate(verts_.begin(), lowest, verts_.end());
    }

    const std::vector<Point2>& vertices() const { return verts_; }
    size_t size() const { return verts_.size(); }
    const Point2& operator[](size_t i) const { return verts_[i]; }

    double scale() const { return diameter(verts_); }

    Point2 centroid() const {
        double a2 = 0.0;
        Point2 c{0, 0};
        size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) {
            double w = wedge(verts_[i], verts_[(i + 1) % n]);
            a2 += w;
            c += w * (verts_[i] + verts_[(i + 1) % n]);
        }
        return (1.0 / (3.0 * a2)) * c;
    }

    // Signed distance of p inside: >= 0 means p is in the polygon
    // (distance to the nearest edge line, negative outside).
    double inner_distance(Point2 p) const {
        double d = std::numeric_limits<double>::infinity();
        size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) {
            Point2 e = verts_[(i + 1) % n] - verts_[i];
            d = std::min(d, wedge(e, p - verts_[i]) / norm2(e));
        }
        return d;
    }

    bool contains(Point2 p, double tol) const { return inner_distance(p) >= -tol; }

  private:
    std::vector<Point2> verts_;
};

inline ConvexPolygon convex_hull(std::span<const Point2> points) {
    double tol = kRelTol * std::max(1.0, diameter(points));
    return ConvexPolygon(detail::hull_of(points, tol));
}

inline ConvexPolygon convex_hull(const std::vector<Point2>& points) {
    return convex_hull(std::span<const Point2>(points));
}

inline double polygon_area(const ConvexPolygon& p) {
    double a2 = 0.0;
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i) a2 += wedge(p[i], p[(i + 1) % n]);
    return 0.5 * a2;
}

struct AffineMap {
    // Row-major 2x2 linear part.
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Point2 shift{0, 0};

    double det() const { return m00 * m11 - m01 * m10; }

    Point2 operator()(Point2 p) const {
        return {m00 * p.x + m01 * p.y + shift.x, m10 * p.x + m11 * p.y + shift.y};
    }

    AffineMap inverse() const {
        double d = det();
        if (d == 0.0) throw geometry_error("singular affine map");
        AffineMap inv;
        inv.m00 = m11 / d;
        inv.m01 = -m01 / d;
        inv.m10 = -m10 / d;
        inv.m11 = m00 / d;
        inv.shift = {-(inv.m00 * shift.x + inv.m01 * shift.y),
                     -(inv.m10 * shift.x + inv.m11 * shift.y)};
        return inv;
    }

    // Inverse transpose of the linear part, zero shift.
    AffineMap inverse_transpose() const {
        double d = det();
        if (d == 0.0) throw geometry_error("singular affine map");
        AffineMap it;
        it.m00 = m11 / d;
        it.m01 = -m10 / d;
        it.m10 = -m01 / d;
        it.m11 = m00 / d;
        return it;
    }
};

inline ConvexPolygon apply_affine(const AffineMap& m, const ConvexPolygon& p) {
    if (m.det() == 0.0) throw geometry_error("singular affine map");
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back(m(v));
    return ConvexPolygon(std::move(out));  // ctor re-normalizes to ccw
}

struct FitResult {
    double scale = 0.0;
    Point2 shift{0, 0};
    // Largest constraint residual at the optimum (certification; <= 0 means
    // every facet constraint holds exactly or with slack).
    double residual = 0.0;
};

namespace detail {

struct Facet {
    Point2 normal;  // unit outward
    double offset;  // <normal, x> <= offset on K
};

inline std::vector<Facet> facets_of(const ConvexPolygon& k) {
    std::vector<Facet> fs;
    size_t n = k.size();
    fs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Point2 e = k[(i + 1) % n] - k[i];
        Point2 nrm = normalized(Point2{e.y, -e.x});
        fs.push_back({nrm, dot(nrm, k[i])});
    }
    return fs;
}

// Solve a 3x3 linear system by Gaussian elimination with partial pivoting.
// Returns false if the matrix is (near-)singular.
inline bool solve3(double a[3][4], double out[3]) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) return false;
        if (piv != col)
            for (int c = 0; c < 4; ++c) std::swap(a[piv][c], a[col][c]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (int i = 0; i < 3; ++i) out[i] = a[i][3] / a[i][i];
    return true;
}

}  // namespace detail

// Maximal lambda >= 0 and witness t with lambda*T + t inside K.
// T may have 2 or 3 vertices (segments are first-class here).
//
// The LP in (t_x, t_y, lambda) — maximize lambda subject to
// <n_j, t> + lambda * max_i <n_j, v_i> <= h_j over all facets of K —
// is solved by enumerating all triples of constraints; with at most a few
// dozen facets this is robust and fast enough.
inline FitResult max_inscribed_homothet(std::span<const Point2> t_verts, const ConvexPolygon& k) {
    if (t_verts.size() < 2 || t_verts.size() > 3)
        throw geometry_error("homothet target must have 2 or 3 vertices");
    auto facets = detail::facets_of(k);
    size_t m = facets.size();
    double kscale = k.scale();
    double tol = kRelTol * kscale;

    // Row j: coefficients (n_x, n_y, s_j) with s_j = max_i <n_j, v_i>.
    std::vector<double> sup(m);
    for (size_t j = 0; j < m; ++j) {
        double s = -std::numeric_limits<double>::infinity();
        for (const auto& v : t_verts) s = std::max(s, dot(facets[j].normal, v));
        sup[j] = s;
    }

    auto feasible = [&](double lam, Point2 t, double* worst) {
        double w = -std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < m; ++j)
            w = std::max(w, dot(facets[j].normal, t) + lam * sup[j] - facets[j].offset);
        if (worst) *worst = w;
        return w <= tol;
    };

    FitResult best;
    best.scale = -1.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t l = j + 1; l < m; ++l) {
                double a[3][4] = {
                    {facets[i].normal.x, facets[i].normal.y, sup[i], facets[i].offset},
                    {facets[j].normal.x, facets[j].normal.y, sup[j], facets[j].offset},
                    {facets[l].normal.x, facets[l].normal.y, sup[l], facets[l].offset},
                };
                double sol[3];
                if (!detail::solve3(a, sol)) continue;
                double lam = sol[2];
                if (lam < 0.0 || lam <= best.scale) continue;
                Point2 t{sol[0], sol[1]};
                double worst;
                if (feasible(lam, t, &worst)) {
                    best.scale = lam;
                    best.shift = t;
                    best.residual = worst;
                }
            }
    if (best.scale < 0.0) {
        // lambda = 0 with t anywhere in K is always feasible.
        Point2 c = k.centroid();
        double worst;
        if (!feasible(0.0, c, &worst)) throw geometry_error("invalid polygon K in homothet fit");
        return {0.0, c, worst};
    }
    return best;
}

inline FitResult max_inscribed_homothet(const ConvexPolygon& t, const ConvexPolygon& k) {
    return max_inscribed_homothet(std::span<const Point2>(t.vertices()), k);
}

// Affine map sending Q's diagonals to the coordinate axes, both with unit
// length: diagonal AC maps onto the x-axis, BD onto the y-axis, and the
// diagonal intersection goes to the origin.
inline std::pair<AffineMap, ConvexPolygon> normalize_quadrilateral(const ConvexPolygon& q) {
    if (q.size() != 4) throw geometry_error("normalize_quadrilateral expects 4 vertices");
    Point2 a = q[0], b = q[1], c = q[2], d = q[3];
    Point2 d1 = c - a, d2 = d - b;
    double det = wedge(d1, d2);
    if (det == 0.0) throw geometry_error("degenerate quadrilateral diagonals");
    // M * d1 = (1,0), M * d2 = (0,1)  =>  M = [e1 e2] [d1 d2]^{-1}.
    AffineMap mp;
    mp.m00 = d2.y / det;
    mp.m01 = -d2.x / det;
    mp.m10 = -d1.y / det;
    mp.m11 = d1.x / det;
    // Diagonal intersection a + s*d1 with wedge(b - a + r*d2... solve directly.
    double s = wedge(b - a, d2) / det;
    Point2 x = a + s * d1;
    mp.shift = -Point2{mp.m00 * x.x + mp.m01 * x.y, mp.m10 * x.x + mp.m11 * x.y};
    return {mp, apply_affine(mp, q)};
}

// Area of the intersection of two convex polygons (Sutherland-Hodgman).
inline double convex_intersection_area(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Point2> poly = p.vertices();
    size_t nq = q.size();
    for (size_t i = 0; i < nq && !poly.empty(); ++i) {
        Point2 a = q[i], b = q[(i + 1) % nq];
        Point2 e = b - a;
        std::vector<Point2> next;
        size_t n = poly.size();
        for (size_t j = 0; j < n; ++j) {
            Point2 u = poly[j], v = poly[(j + 1) % n];
            double du = wedge(e, u - a), dv = wedge(e, v - a);
            if (du >= 0) next.push_back(u);
            if ((du > 0 && dv < 0) || (du < 0 && dv > 0))
                next.push_back(u + (du / (du - dv)) * (v - u));
        }
        poly = std::move(next);
    }
    if (poly.size() < 3) return 0.0;
    double a2 = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) a2 += wedge(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * std::abs(a2);
}

}  // namespace qcover
