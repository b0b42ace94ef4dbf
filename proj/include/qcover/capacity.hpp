#pragma once

// EHZ capacity of K x Q for polygons via the covering criterion: the
// capacity is the largest lambda such that every lambda-scaled Q-normal
// shape fits into K, i.e. the minimum over classes of the best fit scale.

#include <vector>

#include "qcover/normal_shapes.hpp"

namespace qcover {

struct CapacityReport {
    double capacity = 0.0;
    int binding_class = -1;
    // All classes whose fit scale ties the minimum (within relative 1e-9).
    std::vector<int> tight_classes;
    std::vector<std::pair<int, FitResult>> fits;
};

inline CapacityReport capacity(const ConvexPolygon& k, const ConvexPolygon& q) {
    auto shapes = enumerate_normal_shapes(q);
    CapacityReport rep;
    rep.capacity = std::numeric_limits<double>::infinity();
    for (const auto& s : shapes) {
        FitResult fit = max_inscribed_homothet(
            std::span<const Point2>(s.representative.vertices), k);
        rep.fits.emplace_back(s.class_id, fit);
        if (fit.scale < rep.capacity) {
            rep.capacity = fit.scale;
            rep.binding_class = s.class_id;
        }
    }
    for (const auto& [id, fit] : rep.fits)
        if (fit.scale <= rep.capacity * (1.0 + 1e-9)) rep.tight_classes.push_back(id);
    return rep;
}

inline double systolic_ratio(const ConvexPolygon& k, const ConvexPolygon& q) {
    double c = capacity(k, q).capacity;
    return c * c / (2.0 * polygon_area(k) * polygon_area(q));
}

struct CoverCheck {
    bool is_cover = false;
    int binding_class = -1;
    FitResult binding_fit;
};

inline CoverCheck is_q_cover(const ConvexPolygon& k, const ConvexPolygon& q,
                             double tol = 1e-8) {
    CapacityReport rep = capacity(k, q);
    CoverCheck chk;
    chk.is_cover = rep.capacity >= 1.0 - tol;
    chk.binding_class = rep.binding_class;
    for (const auto& [id, fit] : rep.fits)
        if (id == rep.binding_class) chk.binding_fit = fit;
    return chk;
}

// Asserts c(K x Q_inner) <= c(K x Q_outer) + tol; throws if the polygons
// are not nested.
inline bool monotonicity_check(const ConvexPolygon& k, const ConvexPolygon& q_inner,
                               const ConvexPolygon& q_outer, double tol = 1e-9) {
    double s = q_outer.scale();
    for (const auto& v : q_inner.vertices())
        if (!q_outer.contains(v, kRelTol * s))
            throw geometry_error("monotonicity_check: Q_inner not contained in Q_outer");
    return capacity(k, q_inner).capacity <= capacity(k, q_outer).capacity + tol;
}

}  // namespace qcover
