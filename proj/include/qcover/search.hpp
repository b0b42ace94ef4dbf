#pragma once

// Numerical search for smallest Q-covers: multistart derivative-free
// minimization of the hull area of translated normal-shape classes.

#include <functional>
#include <random>

#include "qcover/capacity.hpp"

namespace qcover {

// One translation per normal-shape class; class 0 is pinned to the origin.
struct Placement {
    std::vector<Point2> translations;
};

struct SearchConfig {
    int restarts = 64;
    uint64_t rng_seed = 0;
    double polish_tolerance = 1e-10;
    int max_iterations = 2000;
};

struct SearchResult {
    Placement best_placement;
    double best_area = std::numeric_limits<double>::infinity();
    ConvexPolygon hull{{{0, 0}, {1, 0}, {0, 1}}};
    bool is_cover_certified = false;
};

namespace detail {

// Decorrelated per-restart seed stream (splitmix64 finalizer).
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Hull area tolerant of degenerate (collinear) input; 0 when flat.
inline double hull_area(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return 0.0;
    auto build = [](const std::vector<Point2>& ps) {
        std::vector<Point2> chain;
        for (const auto& p : ps) {
            while (chain.size() >= 2 &&
                   wedge(chain.back() - chain[chain.size() - 2], p - chain[chain.size() - 2]) <= 0.0)
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
    double a2 = 0.0;
    for (size_t i = 0; i < lower.size(); ++i)
        a2 += wedge(lower[i], lower[(i + 1) % lower.size()]);
    return 0.5 * a2;
}

// Hull as a valid ConvexPolygon even when optimizer output leaves some hull
// points nearly collinear: prune vertices until strict convexity holds.
inline ConvexPolygon clean_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto build = [](const std::vector<Point2>& ps) {
        std::vector<Point2> chain;
        for (const auto& p : ps) {
            while (chain.size() >= 2 &&
                   wedge(chain.back() - chain[chain.size() - 2], p - chain[chain.size() - 2]) <= 0.0)
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

    std::vector<Point2>& v = lower;
    double scale = diameter(v);
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (size_t i = 0; i < v.size(); ++i) {
            Point2 a = v[(i + v.size() - 1) % v.size()], b = v[i], c = v[(i + 1) % v.size()];
            if (norm2(b - a) <= 10 * kRelTol * scale ||
                wedge(b - a, c - b) <= 10 * kRelTol * scale * scale) {
                v.erase(v.begin() + long(i));
                changed = true;
                break;
            }
        }
    }
    return ConvexPolygon(v);
}

using Objective = std::function<double(const std::vector<double>&)>;

// Nelder-Mead simplex descent (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2).
inline std::vector<double> nelder_mead(const Objective& f, std::vector<double> x0,
                                       double initial_step, int max_iterations,
                                       double tolerance) {
    size_t n = x0.size();
    if (n == 0) return x0;
    std::vector<std::vector<double>> simplex{x0};
    for (size_t i = 0; i < n; ++i) {
        auto x = x0;
        x[i] += initial_step;
        simplex.push_back(std::move(x));
    }
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    auto order = [&] {
        std::vector<size_t> idx(n + 1);
        for (size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (size_t i : idx) {
            s2.push_back(simplex[i]);
            f2.push_back(fv[i]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
    };

    for (int it = 0; it < max_iterations; ++it) {
        order();
        if (fv[n] - fv[0] <= tolerance * (1.0 + std::abs(fv[0]))) break;
        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / double(n);
        auto at = [&](double coef) {
            std::vector<double> x(n);
            for (size_t j = 0; j < n; ++j) x[j] = centroid[j] + coef * (centroid[j] - simplex[n][j]);
            return x;
        };
        auto xr = at(1.0);
        double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = at(2.0);
            double fe = f(xe);
            if (fe < fr) {
                simplex[n] = std::move(xe);
                fv[n] = fe;
            } else {
                simplex[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = std::move(xr);
            fv[n] = fr;
        } else {
            auto xc = at(fr < fv[n] ? 0.5 : -0.5);
            double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = std::move(xc);
                fv[n] = fc;
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j)
                        simplex[i][j] = 0.5 * (simplex[i][j] + simplex[0][j]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

// Cyclic coordinate descent with shrinking steps; objective never increases.
inline std::vector<double> coordinate_descent(const Objective& f, std::vector<double> x,
                                              double initial_step, double tolerance,
                                              int max_iterations) {
    double fx = f(x);
    double step = initial_step;
    for (int it = 0; it < max_iterations && step > tolerance; ++it) {
        bool improved = false;
        for (size_t j = 0; j < x.size(); ++j)
            for (double s : {step, -step}) {
                auto y = x;
                y[j] += s;
                double fy = f(y);
                if (fy < fx) {
                    x = std::move(y);
                    fx = fy;
                    improved = true;
                }
            }
        if (!improved) step *= 0.5;
    }
    return x;
}

inline std::vector<double> flatten(const Placement& p) {
    std::vector<double> x;
    for (size_t k = 1; k < p.translations.size(); ++k) {
        x.push_back(p.translations[k].x);
        x.push_back(p.translations[k].y);
    }
    return x;
}

inline Placement unflatten(const std::vector<double>& x) {
    Placement p;
    p.translations.push_back({0, 0});
    for (size_t i = 0; i + 1 < x.size() + 1; i += 2) p.translations.push_back({x[i], x[i + 1]});
    return p;
}

}  // namespace detail

inline double hull_area_objective(const std::vector<NormalShape>& shapes,
                                  const Placement& placement) {
    if (placement.translations.size() != shapes.size())
        throw geometry_error("placement size does not match class count");
    if (norm2(placement.translations[0]) != 0.0)
        throw geometry_error("class 0 translation must be pinned to the origin");
    std::vector<Point2> pts;
    for (size_t k = 0; k < shapes.size(); ++k)
        for (const auto& v : shapes[k].representative.vertices)
            pts.push_back(v + placement.translations[k]);
    return detail::hull_area(std::move(pts));
}

inline double hull_area_objective(const ConvexPolygon& q, const Placement& placement) {
    return hull_area_objective(enumerate_normal_shapes(q), placement);
}

inline Placement polish_placement(const ConvexPolygon& q, const Placement& placement,
                                  double tolerance = 1e-10) {
    auto shapes = enumerate_normal_shapes(q);
    auto f = [&](const std::vector<double>& x) {
        return hull_area_objective(shapes, detail::unflatten(x));
    };
    double scale = std::max(1.0, q.scale());
    auto x = detail::flatten(placement);
    x = detail::nelder_mead(f, std::move(x), 0.05 * scale, 2000, 1e-14);
    x = detail::coordinate_descent(f, std::move(x), 0.01 * scale, tolerance, 10000);
    return detail::unflatten(x);
}

inline SearchResult search_min_cover(const ConvexPolygon& q, const SearchConfig& config = {}) {
    auto shapes = enumerate_normal_shapes(q);
    size_t m = shapes.size();
    auto f = [&](const std::vector<double>& x) {
        return hull_area_objective(shapes, detail::unflatten(x));
    };
    double scale = 0.0;
    for (const auto& s : shapes)
        scale = std::max(scale, diameter(s.representative.vertices));

    SearchResult best;
    std::vector<double> best_x(2 * (m - 1), 0.0);
    for (int r = 0; r < config.restarts; ++r) {
        std::mt19937_64 rng(detail::mix_seed(config.rng_seed, uint64_t(r)));
        std::uniform_real_distribution<double> box(-scale, scale);
        std::vector<double> x(2 * (m - 1));
        for (auto& v : x) v = box(rng);
        x = detail::nelder_mead(f, std::move(x), 0.1 * scale, config.max_iterations, 1e-13);
        x = detail::coordinate_descent(f, std::move(x), 0.02 * scale, config.polish_tolerance,
                                       10000);
        double area = f(x);
        if (area < best.best_area) {
            best.best_area = area;
            best_x = std::move(x);
        }
    }
    // Basin hopping from the multistart incumbent: perturb with shrinking
    // noise and re-descend; escapes the shallow local minima the simplex
    // method settles into for larger class counts.
    std::mt19937_64 hop_rng(detail::mix_seed(config.rng_seed, 0xB451ULL));
    for (int h = 0; h < 100; ++h) {
        double sigma = 0.15 * scale * std::pow(0.97, h);
        std::normal_distribution<double> gauss(0.0, sigma);
        auto x = best_x;
        for (auto& v : x) v += gauss(hop_rng);
        x = detail::nelder_mead(f, std::move(x), 0.3 * sigma + 0.01 * scale,
                                config.max_iterations, 1e-13);
        x = detail::coordinate_descent(f, std::move(x), 0.01 * scale, config.polish_tolerance,
                                       10000);
        double area = f(x);
        if (area < best.best_area) {
            best.best_area = area;
            best_x = std::move(x);
        }
    }
    // Deep polish with progressively smaller simplices/steps.
    for (int round = 0; round < 6; ++round) {
        double step = 0.002 * scale / std::pow(4.0, round);
        best_x = detail::nelder_mead(f, std::move(best_x), step, 2 * config.max_iterations, 1e-15);
        best_x = detail::coordinate_descent(f, std::move(best_x), 0.5 * step,
                                            std::min(config.polish_tolerance, 1e-13), 20000);
    }
    best.best_area = f(best_x);
    best.best_placement = detail::unflatten(best_x);
    std::vector<Point2> pts;
    for (size_t k = 0; k < m; ++k)
        for (const auto& v : shapes[k].representative.vertices)
            pts.push_back(v + best.best_placement.translations[k]);
    best.hull = detail::clean_hull(std::move(pts));
    best.is_cover_certified = is_q_cover(best.hull, q).is_cover;
    return best;
}

}  // namespace qcover
