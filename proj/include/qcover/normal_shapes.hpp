#pragma once

// Enumeration of the translation classes of Q-normal triangles and
// Q-normal segments of a convex polygon Q.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcover/norm.hpp"

namespace qcover {

enum class ShapeKind { segment, triangle };

// One translation class: unit-Q-perimeter representative anchored with its
// first vertex at the origin, plus the fan indices and euclidean edge
// lengths that generate it.
struct NormalShape {
    ShapeKind kind = ShapeKind::triangle;
    std::vector<size_t> direction_indices;  // into NormalFan, traversal order
    std::vector<double> edge_lengths;       // euclidean, same order
    ClosedPolyline representative;          // first vertex at origin
    int class_id = -1;

    double euclidean_area() const {
        if (kind == ShapeKind::segment) return 0.0;
        const auto& v = representative.vertices;
        return 0.5 * std::abs(wedge(v[1] - v[0], v[2] - v[0]));
    }

    Point2 centroid() const {
        Point2 c{0, 0};
        for (const auto& v : representative.vertices) c += v;
        return (1.0 / double(representative.size())) * c;
    }
};

inline double normal_shape_area(const NormalShape& s) { return s.euclidean_area(); }

namespace detail {

// Two fan directions are treated as opposite when they are within this
// angular tolerance of being so (degenerate trapezoid/parallelogram limits).
inline constexpr double kAngularTol = 1e-8;

inline bool opposite_dirs(Dir2 a, Dir2 b) {
    return norm2(a + b) <= kAngularTol;
}

// Positive dependency a0*d0 + a1*d1 + a2*d2 = 0, normalized to a0 = 1.
// Empty when the triple does not strictly enclose the origin.
inline std::optional<std::array<double, 3>> positive_dependency(Dir2 d0, Dir2 d1, Dir2 d2) {
    // Solve a1*d1 + a2*d2 = -d0.
    double det = wedge(d1, d2);
    if (std::abs(det) <= kAngularTol) return std::nullopt;
    double a1 = wedge(-d0, d2) / det;
    double a2 = wedge(d1, -d0) / det;
    if (a1 <= kAngularTol || a2 <= kAngularTol) return std::nullopt;
    return std::array<double, 3>{1.0, a1, a2};
}

// Canonical key of a translation class: vertices shifted so the
// lowest-then-leftmost one sits at the origin, sorted, rounded at 1e-9.
inline std::vector<int64_t> class_key(const std::vector<Point2>& verts) {
    Point2 anchor = verts[0];
    for (const auto& v : verts)
        if (v.y < anchor.y - 1e-12 || (std::abs(v.y - anchor.y) <= 1e-12 && v.x < anchor.x))
            anchor = v;
    std::vector<std::pair<int64_t, int64_t>> rounded;
    for (const auto& v : verts)
        rounded.emplace_back(llround((v.x - anchor.x) * 1e9), llround((v.y - anchor.y) * 1e9));
    std::sort(rounded.begin(), rounded.end());
    std::vector<int64_t> key;
    for (auto [x, y] : rounded) {
        key.push_back(x);
        key.push_back(y);
    }
    return key;
}

}  // namespace detail

// All translation classes of Q-normal shapes, with deterministic class ids:
// segments first (by smaller fan index), then triangles in lexicographic
// triple order, the counterclockwise orientation before its point
// reflection. Distinct triples generating coincident classes are merged.
inline std::vector<NormalShape> enumerate_normal_shapes(const ConvexPolygon& q) {
    NormalFan fan = normal_fan(q);
    size_t n = fan.size();
    Point2 qc = q.centroid();
    auto gauge = [&](Point2 x) { return support(q, x) - dot(x, qc); };

    std::vector<NormalShape> out;
    std::map<std::vector<int64_t>, int> seen;

    auto add = [&](NormalShape s) {
        auto key = detail::class_key(s.representative.vertices);
        if (seen.count(key)) return;
        s.class_id = int(out.size());
        seen[key] = s.class_id;
        out.push_back(std::move(s));
    };

    // Segments: one per unordered pair of opposite fan directions.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (!detail::opposite_dirs(fan.directions[i], fan.directions[j])) continue;
            Dir2 d = fan.directions[i];
            double width = gauge(d) + gauge(-d);
            double len = 1.0 / width;
            NormalShape s;
            s.kind = ShapeKind::segment;
            s.direction_indices = {i, j};
            s.edge_lengths = {len, len};
            s.representative = ClosedPolyline({{0, 0}, len * d});
            add(std::move(s));
        }

    // Triangles: one pair (ccw orientation and its point reflection) per
    // triple of fan directions strictly enclosing the origin; triples
    // containing an opposite pair would force a zero coefficient and are
    // rejected by the dependency test.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (detail::opposite_dirs(fan.directions[i], fan.directions[j])) continue;
            for (size_t k = j + 1; k < n; ++k) {
                if (detail::opposite_dirs(fan.directions[i], fan.directions[k]) ||
                    detail::opposite_dirs(fan.directions[j], fan.directions[k]))
                    continue;
                auto dep = detail::positive_dependency(fan.directions[i], fan.directions[j],
                                                       fan.directions[k]);
                if (!dep) continue;
                std::array<size_t, 3> idx{i, j, k};
                double perim = 0.0;
                for (int e = 0; e < 3; ++e) perim += (*dep)[e] * gauge(fan.directions[idx[e]]);
                std::array<double, 3> len;
                for (int e = 0; e < 3; ++e) len[e] = (*dep)[e] / perim;

                // Fan indices are already in ccw angular order, so traversing
                // (i, j, k) gives the ccw triangle and (i, k, j) its point
                // reflection.
                for (auto order : {std::array<size_t, 3>{0, 1, 2}, std::array<size_t, 3>{0, 2, 1}}) {
                    std::vector<Point2> verts{{0, 0}};
                    for (int e = 0; e < 2; ++e)
                        verts.push_back(verts.back() +
                                        len[order[e]] * fan.directions[idx[order[e]]]);
                    NormalShape s;
                    s.kind = ShapeKind::triangle;
                    s.direction_indices = {idx[order[0]], idx[order[1]], idx[order[2]]};
                    s.edge_lengths = {len[order[0]], len[order[1]], len[order[2]]};
                    s.representative = ClosedPolyline(std::move(verts));
                    add(std::move(s));
                }
            }
        }
    return out;
}

}  // namespace qcover
