#pragma once

// Q-normed geometry: support functions, Q-lengths of closed curves,
// outward normal fans, and the support-line perimeter formula.

#include <cmath>
#include <numbers>
#include <vector>

#include "qcover/geometry.hpp"

namespace qcover {

// Closed polygonal curve; the last vertex connects back to the first.
// Back-and-forth 2-gons are allowed.
struct ClosedPolyline {
    std::vector<Point2> vertices;

    ClosedPolyline() = default;  // empty placeholder, fill before use

    explicit ClosedPolyline(std::vector<Point2> vs) : vertices(std::move(vs)) {
        if (vertices.size() < 2) throw geometry_error("closed polyline needs at least 2 vertices");
        for (const auto& v : vertices)
            if (!is_finite(v)) throw geometry_error("non-finite polyline vertex");
    }

    size_t size() const { return vertices.size(); }
    Point2 edge(size_t i) const { return vertices[(i + 1) % vertices.size()] - vertices[i]; }
};

// ||x||_Q = max_{y in Q} <x, y>. May be negative when Q avoids the origin.
inline double support(const ConvexPolygon& q, Point2 x) {
    double s = -std::numeric_limits<double>::infinity();
    for (const auto& v : q.vertices()) s = std::max(s, dot(x, v));
    return s;
}

// Q-length of a closed curve. Q is centered on its centroid first; for
// closed curves this does not change the value but keeps the summands
// well-conditioned gauges.
inline double q_length(const ConvexPolygon& q, const ClosedPolyline& curve) {
    Point2 c = q.centroid();
    double len = 0.0;
    size_t n = curve.size();
    for (size_t i = 0; i < n; ++i) {
        Point2 e = curve.edge(i);
        len += support(q, e) - dot(e, c);
    }
    return len;
}

inline double q_norm_centered(const ConvexPolygon& q, Point2 x) {
    return support(q, x) - dot(x, q.centroid());
}

// Outward unit normals of Q's sides, one per side, counterclockwise,
// starting from the smallest angle in [0, 2pi).
struct NormalFan {
    std::vector<Dir2> directions;
    // side_index[k] = index i such that directions[k] is the outward normal
    // of the side from vertex i to vertex i+1.
    std::vector<size_t> side_index;

    size_t size() const { return directions.size(); }
};

inline double angle_of(Point2 d) {
    double a = std::atan2(d.y, d.x);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
}

inline NormalFan normal_fan(const ConvexPolygon& q) {
    size_t n = q.size();
    std::vector<std::pair<double, size_t>> order;
    std::vector<Dir2> normals(n);
    for (size_t i = 0; i < n; ++i) {
        Point2 e = q[(i + 1) % n] - q[i];
        normals[i] = normalized(Point2{e.y, -e.x});
        order.emplace_back(angle_of(normals[i]), i);
    }
    std::sort(order.begin(), order.end());
    NormalFan fan;
    for (auto [ang, i] : order) {
        fan.directions.push_back(normals[i]);
        fan.side_index.push_back(i);
    }
    return fan;
}

// Q-perimeter of the triangle u -> v -> w -> u from euclidean distances
// between support lines. The support line for direction d is
// { y : <d, y> = ||d||_Q }.
inline double q_perimeter_via_support_lines(Point2 u, Point2 v, Point2 w,
                                            const ConvexPolygon& q) {
    Point2 duv = v - u, dvw = w - v, dwu = u - w;
    double scale = std::max({norm2(duv), norm2(dvw), norm2(dwu)});
    if (std::abs(wedge(duv, dvw)) <= kRelTol * scale * scale)
        throw geometry_error("degenerate triangle in support-line perimeter");
    // Intersection P of the support lines for v->w and w->u.
    double a[3][4] = {
        {dvw.x, dvw.y, 0.0, support(q, dvw)},
        {dwu.x, dwu.y, 0.0, support(q, dwu)},
        {0.0, 0.0, 1.0, 0.0},
    };
    double sol[3];
    if (!detail::solve3(a, sol)) throw geometry_error("parallel support lines");
    Point2 p{sol[0], sol[1]};
    // Shifting Q by -P zeroes the other two summands; the remaining one is
    // the point-line distance times |v - u|.
    return support(q, duv) - dot(duv, p);
}

// Segment variant: back-and-forth Q-length of u -> v -> u, as the distance
// between the two opposite support lines times |v - u|.
inline double q_perimeter_via_support_lines(Point2 u, Point2 v, const ConvexPolygon& q) {
    Point2 d = v - u;
    if (norm2(d) == 0.0) throw geometry_error("degenerate segment");
    return support(q, d) + support(q, -d);
}

}  // namespace qcover
