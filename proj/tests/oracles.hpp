#pragma once

// Independent brute-force oracles used to validate the fast implementations:
// a grid + bisection check for the inscribed-homothet LP, a Riemann-sum
// winding-number area, and random instance generators.

#include <numbers>
#include <random>
#include <vector>

#include "qcover/geometry.hpp"
#include "qcover/norm.hpp"

namespace oracles {

using qcover::ClosedPolyline;
using qcover::ConvexPolygon;
using qcover::Point2;

// Largest scale so that scale*T + t fits in K for a fixed t (exact per-facet
// ratio formula, but derived directly from the containment inequalities
// rather than the LP).
inline double fit_scale_at(const std::vector<Point2>& t_verts, const ConvexPolygon& k,
                           Point2 t) {
    // Center T on its vertex mean so that every facet's support value is
    // nonnegative; the max over translations is unaffected.
    Point2 c{0, 0};
    for (const auto& v : t_verts) c += v;
    c = (1.0 / (double)t_verts.size()) * c;
    double best = std::numeric_limits<double>::infinity();
    size_t n = k.size();
    for (size_t i = 0; i < n; ++i) {
        Point2 a = k[i], b = k[(i + 1) % n];
        Point2 e = b - a;
        Point2 nrm{e.y, -e.x};  // outward normal of a ccw polygon side
        double len = std::sqrt(nrm.x * nrm.x + nrm.y * nrm.y);
        nrm = {nrm.x / len, nrm.y / len};
        double h = qcover::dot(nrm, a);  // <nrm, x> <= h on K
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& v : t_verts) m = std::max(m, qcover::dot(nrm, v - c));
        double room = h - qcover::dot(nrm, t);
        if (m <= 1e-15) {
            // Scale-independent facet: pure feasibility of the placement.
            if (room < 0.0) return 0.0;
            continue;
        }
        best = std::min(best, room / m);
    }
    return std::max(best, 0.0);
}

// Grid search over translations at resolution `step` inside K's bounding
// box, then local refinement by bisection-style step halving.
inline double max_inscribed_scale_oracle(const std::vector<Point2>& t_verts,
                                         const ConvexPolygon& k, double step = 1e-3) {
    Point2 lo = k[0], hi = k[0];
    for (const auto& v : k.vertices()) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    double span = std::max(hi.x - lo.x, hi.y - lo.y);
    double h = step * span;
    double best = -1.0;
    Point2 best_t = lo;
    for (double x = lo.x; x <= hi.x + 0.5 * h; x += h)
        for (double y = lo.y; y <= hi.y + 0.5 * h; y += h) {
            double s = fit_scale_at(t_verts, k, {x, y});
            if (s > best) {
                best = s;
                best_t = {x, y};
            }
        }
    // Pattern refinement down to ~1e-7 of the span.  The objective is
    // concave and piecewise linear, so ridges can defeat a coarse compass;
    // 32 directions keep the search from stalling on them.
    std::vector<Point2> dirs;
    for (int a = 0; a < 32; ++a) {
        double th = 2.0 * std::numbers::pi * a / 32.0;
        dirs.push_back({std::cos(th), std::sin(th)});
    }
    double r = h;
    for (int guard = 0; r > 1e-7 * span && guard < 200000; ++guard) {
        bool improved = false;
        for (const auto& d : dirs) {
            Point2 cand{best_t.x + r * d.x, best_t.y + r * d.y};
            double s = fit_scale_at(t_verts, k, cand);
            if (s > best) {
                best = s;
                best_t = cand;
                improved = true;
            }
        }
        if (!improved) r *= 0.5;
    }
    return best;
}

// Winding-number-weighted area by Riemann sum over the curve's bounding box.
inline double winding_area_oracle(const ClosedPolyline& curve, int resolution = 400) {
    Point2 lo = curve.vertices[0], hi = curve.vertices[0];
    for (const auto& v : curve.vertices) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    double dx = (hi.x - lo.x) / resolution, dy = (hi.y - lo.y) / resolution;
    if (dx <= 0.0 || dy <= 0.0) return 0.0;
    double total = 0.0;
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
            Point2 p{lo.x + (i + 0.5) * dx, lo.y + (j + 0.5) * dy};
            // Crossing-number style winding count via edge sweeps.
            double angle = 0.0;
            size_t n = curve.size();
            for (size_t e = 0; e < n; ++e) {
                Point2 u = curve.vertices[e] - p;
                Point2 v = curve.vertices[(e + 1) % n] - p;
                angle += std::atan2(qcover::wedge(u, v), qcover::dot(u, v));
            }
            total += angle / (2.0 * std::numbers::pi) * dx * dy;
        }
    return total;
}

inline ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int max_sides = 8,
                                           double radius = 1.0) {
    std::uniform_int_distribution<int> sides(3, max_sides);
    std::uniform_real_distribution<double> unit(0.15, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    int n = sides(rng);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> angles(n);
        for (auto& a : angles) a = angle(rng);
        std::sort(angles.begin(), angles.end());
        bool separated = true;
        for (int i = 0; i < n; ++i) {
            double next = (i + 1 < n) ? angles[i + 1] : angles[0] + 2 * std::numbers::pi;
            if (next - angles[i] < 0.05) separated = false;
        }
        if (!separated) continue;
        std::vector<Point2> pts;
        for (double a : angles) {
            double r = radius * unit(rng);
            pts.push_back({r * std::cos(a), r * std::sin(a)});
        }
        ConvexPolygon hull = qcover::convex_hull(pts);
        if ((int)hull.size() >= 3) return hull;
    }
    return ConvexPolygon({{0, 0}, {1, 0}, {0, 1}});
}

}  // namespace oracles
