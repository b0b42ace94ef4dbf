#pragma once

// Named problem instances: the constructions behind every headline number,
// with their expected ratios and minimal cover areas.

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qcover/capacity.hpp"

namespace qcover {

struct CaseInstance {
    std::string name;
    // Placeholder polygons; every constructor overwrites both.
    ConvexPolygon q{std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}};
    ConvexPolygon k{std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}};  // claimed cover
    std::optional<double> expected_ratio;
    std::optional<double> expected_min_area;
    // Parameters of an equality family sampled by `alternates`, when known.
    std::vector<double> equality_family_params;
    // Further covers expected to achieve the same ratio (family samples,
    // reflections, additional equality shapes).
    std::vector<std::pair<std::string, ConvexPolygon>> alternates;
};

inline ConvexPolygon point_reflection(const ConvexPolygon& p) {
    std::vector<Point2> w;
    for (const auto& v : p.vertices()) w.push_back(Point2{-v.x, -v.y});
    return ConvexPolygon(w);
}

namespace detail {

// Hull of a normal triangle and its point reflection through c + shift/2,
// i.e. conv(T, 2c - T + shift): the tight hexagons of the triangle case.
inline ConvexPolygon tight_hexagon(const NormalShape& s, Point2 shift) {
    Point2 c = s.centroid();
    std::vector<Point2> pts(s.representative.vertices);
    for (const auto& v : s.representative.vertices)
        pts.push_back(Point2{2.0 * c.x - v.x + shift.x, 2.0 * c.y - v.y + shift.y});
    return convex_hull(pts);
}

}  // namespace detail

// Q = regular triangle of unit width (height 1); K0 = the regular hexagon
// obtained as the tight hull of a normal triangle and its point reflection.
inline CaseInstance case_triangle() {
    double r = 1.0 / std::sqrt(3.0);
    CaseInstance inst;
    inst.name = "triangle";
    inst.q = ConvexPolygon({{-r, 0.0}, {r, 0.0}, {0.0, 1.0}});
    auto shapes = enumerate_normal_shapes(inst.q);
    inst.k = detail::tight_hexagon(shapes[0], {0.0, 0.0});
    inst.expected_ratio = 1.0;
    inst.expected_min_area = std::sqrt(3.0) / 2.0;  // = 1/(2 area Q)
    inst.alternates.emplace_back("family-sample-1",
                                 detail::tight_hexagon(shapes[0], {0.05, 0.02}));
    inst.alternates.emplace_back("family-sample-2",
                                 detail::tight_hexagon(shapes[0], {-0.04, 0.06}));
    return inst;
}

// The normalized quadrilateral with parameters (a, b): vertices on the axes
// at (-p, 0), (0, -q), (1-p, 0), (0, 1-q) so that the unit square [0,1]^2
// is the distinguished cover K0.
struct QuadrilateralParams {
    double a = 0.0, b = 0.0;
    double p = 0.0, q = 0.0;
};

inline QuadrilateralParams quadrilateral_params(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 1.0 || b <= 1.0)
        throw geometry_error("quadrilateral parameters must be finite and > 1");
    // Near-degenerate parameters collapse two vertices; nudge them inward.
    const double floor_gap = 1e-6;
    a = std::max(a, 1.0 + floor_gap);
    b = std::max(b, 1.0 + floor_gap);
    QuadrilateralParams pp;
    pp.a = a;
    pp.b = b;
    pp.p = (a * b - 1.0) / (2.0 * a * b - a - b);
    pp.q = b * (1.0 - pp.p) / (b - 1.0);
    return pp;
}

// Alignment witness for the quadrilateral case: E and F are opposite corners of the
// bounding box of Q, G divides the segment from A = (-p, 0) towards
// B = (0, -q) in ratio a; the three are collinear.
struct PappusPoints {
    Point2 e, f, g;
};

inline PappusPoints pappus_points(double a, double b) {
    auto pp = quadrilateral_params(a, b);
    PappusPoints out;
    out.e = {-pp.p, 1.0 - pp.q};
    out.f = {1.0 - pp.p, -pp.q};
    out.g = {-pp.p + pp.a * pp.p, -pp.a * pp.q};
    return out;
}

inline CaseInstance case_quadrilateral(double a, double b) {
    auto pp = quadrilateral_params(a, b);
    CaseInstance inst;
    inst.name = "quadrilateral";
    inst.q = ConvexPolygon(
        {{-pp.p, 0.0}, {0.0, -pp.q}, {1.0 - pp.p, 0.0}, {0.0, 1.0 - pp.q}});
    inst.k = ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    inst.expected_ratio = 1.0;
    inst.expected_min_area = 1.0;
    // On the curve (a-1)(b-1) = 1 the minimizer is not unique; for the
    // symmetric member a = b = 2 the family consists of the hexagons below
    // (all of area 1), parametrized by the shear s in (0, 1/3).
    if (std::abs(pp.a - 2.0) < 1e-12 && std::abs(pp.b - 2.0) < 1e-12) {
        inst.equality_family_params = {0.1, 0.2};
        for (double s : inst.equality_family_params) {
            ConvexPolygon hexagon({{0.0, 0.0},
                                   {1.0 - s, 0.0},
                                   {1.0, 0.5},
                                   {1.0 - s, 1.0},
                                   {0.0, 1.0},
                                   {-s, 0.5}});
            inst.alternates.emplace_back("hexagon-s" + std::to_string(s),
                                         std::move(hexagon));
        }
    }
    return inst;
}

// The Haim-Kislev--Ostrover pair: Q a regular pentagon, K a copy of Q
// rotated by pi/2 and rescaled so that the capacity is exactly 1.
inline CaseInstance case_pentagon_hko() {
    std::vector<Point2> qv;
    for (int i = 0; i < 5; ++i) {
        double ang = std::numbers::pi / 2 + 2.0 * std::numbers::pi * i / 5.0;
        qv.push_back({std::cos(ang), std::sin(ang)});
    }
    CaseInstance inst;
    inst.name = "pentagon-hko";
    inst.q = ConvexPolygon(qv);
    std::vector<Point2> kv;
    for (const auto& v : qv) kv.push_back({-v.y, v.x});
    double c = capacity(ConvexPolygon(kv), inst.q).capacity;
    for (auto& v : kv) v = Point2{v.x / c, v.y / c};
    inst.k = ConvexPolygon(kv);
    inst.expected_ratio = (std::sqrt(5.0) + 3.0) / 5.0;
    // Whether K is the smallest pentagon cover is open; it is recorded as an
    // upper bound only.
    inst.expected_min_area = std::nullopt;
    return inst;
}

// Ratio achieved by the trapezoid cover of the truncated square, in the
// corner-cut parameters alpha, beta, gamma = 1 - alpha - beta.
inline double truncated_square_ratio(double alpha, double beta) {
    double gamma = 1.0 - alpha - beta;
    return 1.0 / (1.0 + (alpha * alpha + beta * beta) * gamma * gamma /
                            (1.0 - alpha * alpha - beta * beta - gamma * gamma));
}

namespace detail {

// The trapezoid cover of the truncated square is the unique placement (up
// to translation) of the four normal shapes -- the horizontal unit segment
// a0 b0 (pinned), the vertical unit segment a1 b1, and the two right
// triangles with legs (wx, wy) -- for which three quadruples of their
// vertices are collinear:
//   B3, b1, C2, a0   |   a0, A3, A2, a1   |   a1, C3, b0, B2.
// Solved by Newton iteration on the six wedge-product equations in the six
// translation unknowns.
struct TruncatedTrapezoidSystem {
    double wx = 0.0, wy = 0.0;

    void residual(const double* x, double* r) const {
        Point2 t1{x[0], x[1]}, t2{x[2], x[3]}, t3{x[4], x[5]};
        Point2 b0{1.0, 0.0};
        Point2 a1 = t1, b1 = t1 + Point2{0.0, 1.0};
        Point2 a2 = t2, bb2 = t2 + Point2{wx, wy}, c2 = t2 + Point2{0.0, wy};
        Point2 a3 = t3, b3 = t3 + Point2{wx, wy}, c3 = t3 + Point2{wx, 0.0};
        r[0] = wedge(b3, b1);
        r[1] = wedge(b3, c2);
        r[2] = wedge(a3, a2);
        r[3] = wedge(a3, a1);
        r[4] = wedge(b0 - a1, c3 - a1);
        r[5] = wedge(b0 - a1, bb2 - a1);
    }
};

inline bool newton_solve6(const TruncatedTrapezoidSystem& sys, double* x) {
    for (int it = 0; it < 80; ++it) {
        double r[6];
        sys.residual(x, r);
        double nrm = 0.0;
        for (double v : r) nrm = std::max(nrm, std::abs(v));
        if (nrm < 1e-15) return true;
        double m[6][7];
        for (int j = 0; j < 6; ++j) {
            double xp[6];
            std::copy(x, x + 6, xp);
            double h = 1e-7;
            xp[j] += h;
            double rp[6];
            sys.residual(xp, rp);
            for (int i = 0; i < 6; ++i) m[i][j] = (rp[i] - r[i]) / h;
        }
        for (int i = 0; i < 6; ++i) m[i][6] = -r[i];
        for (int col = 0; col < 6; ++col) {
            int piv = col;
            for (int row = col + 1; row < 6; ++row)
                if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
            for (int cc = 0; cc < 7; ++cc) std::swap(m[piv][cc], m[col][cc]);
            if (std::abs(m[col][col]) < 1e-14) return false;
            for (int row = 0; row < 6; ++row) {
                if (row == col) continue;
                double f = m[row][col] / m[col][col];
                for (int cc = col; cc < 7; ++cc) m[row][cc] -= f * m[col][cc];
            }
        }
        // Half steps first: the full Newton step from the generic start can
        // jump into the degenerate root with coincident triangles.
        double damp = (it < 5) ? 0.5 : 1.0;
        for (int i = 0; i < 6; ++i) x[i] += damp * m[i][6] / m[i][i];
    }
    return false;
}

}  // namespace detail

inline CaseInstance case_truncated_square(double alpha, double beta) {
    double gamma = 1.0 - alpha - beta;
    if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0 && gamma > 0.0 &&
          gamma < 1.0))
        throw geometry_error("truncated square needs 0 < alpha, beta, gamma < 1");
    double c = alpha / (alpha + gamma);
    double d = beta / (beta + gamma);
    CaseInstance inst;
    inst.name = "truncated-square";
    inst.q = ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, c}, {d, 1.0}, {0.0, 1.0}});

    // Leg lengths of the two right-triangle classes (equal by construction).
    auto shapes = enumerate_normal_shapes(inst.q);
    double wx = 0.0, wy = 0.0;
    for (const auto& s : shapes) {
        if (s.kind != ShapeKind::triangle) continue;
        for (const auto& v : s.representative.vertices) {
            wx = std::max(wx, v.x);
            wy = std::max(wy, v.y);
        }
        break;
    }

    detail::TruncatedTrapezoidSystem sys{wx, wy};
    double x[6] = {0.65, -0.58, 0.48, -0.44, 0.19, -0.18};
    if (!detail::newton_solve6(sys, x))
        throw geometry_error("trapezoid collinearity system did not converge");
    Point2 t1{x[0], x[1]}, t2{x[2], x[3]}, t3{x[4], x[5]};
    std::vector<Point2> pts{{0.0, 0.0},
                            {1.0, 0.0},
                            t1,
                            t1 + Point2{0.0, 1.0},
                            t2,
                            t2 + Point2{wx, wy},
                            t2 + Point2{0.0, wy},
                            t3,
                            t3 + Point2{wx, wy},
                            t3 + Point2{wx, 0.0}};
    inst.k = convex_hull(pts);
    inst.expected_ratio = truncated_square_ratio(alpha, beta);
    inst.expected_min_area = std::nullopt;  // conjectural minimality
    inst.alternates.emplace_back("reflected", point_reflection(inst.k));
    return inst;
}

// Q = regular hexagon of unit width; K0 = the regular triangle of unit
// height whose altitudes are normal segments.
inline CaseInstance case_hexagon_regular() {
    double r = 1.0 / std::sqrt(3.0);  // circumradius for unit width
    std::vector<Point2> qv;
    for (int i = 0; i < 6; ++i) {
        double ang = 2.0 * std::numbers::pi * i / 6.0;
        qv.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    CaseInstance inst;
    inst.name = "hexagon-regular";
    inst.q = ConvexPolygon(qv);
    inst.k = ConvexPolygon({{-r, 0.0}, {r, 0.0}, {0.0, 1.0}});
    inst.expected_ratio = 1.0;
    inst.expected_min_area = r;  // 1/sqrt(3) = 1/(2 area Q)
    // Equality family: a triangular frame plus one normal triangle whose
    // centroid may move in a small two-dimensional neighbourhood of the
    // frame's centroid without growing the hull.
    auto shapes = enumerate_normal_shapes(inst.q);
    const NormalShape* inner = nullptr;
    for (const auto& s : shapes)
        if (s.kind == ShapeKind::triangle) inner = &s;  // second (reflected) one
    Point2 ic = inner->centroid();
    inst.equality_family_params = {0.0, 0.0, 0.03, -0.02};
    for (size_t i = 0; i + 1 < inst.equality_family_params.size(); i += 2) {
        Point2 shift{inst.equality_family_params[i],
                     inst.equality_family_params[i + 1]};
        Point2 target{std::sqrt(3.0) / 6.0 + shift.x, 0.5 + shift.y};
        std::vector<Point2> pts{{0.0, 0.0}, {std::sqrt(3.0) / 2.0, 0.5}, {0.0, 1.0}};
        for (const auto& v : inner->representative.vertices)
            pts.push_back(Point2{v.x - ic.x + target.x, v.y - ic.y + target.y});
        inst.alternates.emplace_back("family-sample-" + std::to_string(i / 2 + 1),
                                     convex_hull(pts));
    }
    return inst;
}

// A centrally symmetric hexagon Q (an equality cover from the a = b = 2
// quadrilateral family, shear s = 0.2, reused as the norm body) with four
// distinct equality covers: a triangle K0, a quadrilateral K1, and their
// point reflections.
inline CaseInstance case_hexagon_nonregular_swapped() {
    double s = 0.2;
    CaseInstance inst;
    inst.name = "hexagon-nonregular-swapped";
    inst.q = ConvexPolygon(
        {{0.0, 0.0}, {1.0 - s, 0.0}, {1.0, 0.5}, {1.0 - s, 1.0}, {0.0, 1.0}, {-s, 0.5}});
    inst.k = ConvexPolygon({{0.0, -2.0 / 3.0}, {0.5, 1.0 / 3.0}, {-0.5, 1.0 / 3.0}});
    inst.expected_ratio = 1.0;
    inst.expected_min_area = std::nullopt;  // conjectural
    ConvexPolygon k1({{-0.75, 0.0}, {0.0, -0.5}, {0.25, 0.0}, {0.0, 0.5}});
    inst.alternates.emplace_back("k1", k1);
    inst.alternates.emplace_back("-k0", point_reflection(inst.k));
    inst.alternates.emplace_back("-k1", point_reflection(k1));
    return inst;
}

}  // namespace qcover
