#include <catch2/catch_amalgamated.hpp>

#include "qcover/cases.hpp"

using namespace qcover;

TEST_CASE("triangle case: hexagon cover and equality family") {
    CaseInstance inst = case_triangle();
    CHECK(inst.k.size() == 6);
    CHECK_THAT(polygon_area(inst.k),
               Catch::Matchers::WithinAbs(*inst.expected_min_area, 1e-12));
    CHECK_THAT(*inst.expected_min_area,
               Catch::Matchers::WithinRel(1.0 / (2.0 * polygon_area(inst.q)), 1e-12));
    CHECK_THAT(systolic_ratio(inst.k, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    CHECK_THAT(capacity(inst.k, inst.q).capacity, Catch::Matchers::WithinAbs(1.0, 1e-9));
    REQUIRE(inst.alternates.size() == 2);
    for (const auto& [name, alt] : inst.alternates) {
        CHECK_THAT(polygon_area(alt),
                   Catch::Matchers::WithinAbs(*inst.expected_min_area, 1e-9));
        CHECK_THAT(systolic_ratio(alt, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("quadrilateral case: unit square cover for a parameter grid") {
    for (double a : {1.3, 2.0, 3.5, 5.0})
        for (double b : {1.2, 2.4, 4.8}) {
            CaseInstance inst = case_quadrilateral(a, b);
            CHECK_THAT(capacity(inst.k, inst.q).capacity,
                       Catch::Matchers::WithinAbs(1.0, 1e-9));
            CHECK_THAT(systolic_ratio(inst.k, inst.q),
                       Catch::Matchers::WithinAbs(1.0, 1e-9));
            CHECK_THAT(polygon_area(inst.k) * polygon_area(inst.q),
                       Catch::Matchers::WithinAbs(0.5, 1e-9));
        }
}

TEST_CASE("quadrilateral case: parameter validation and perturbation") {
    CHECK_THROWS_AS(case_quadrilateral(1.0, 2.0), geometry_error);
    CHECK_THROWS_AS(case_quadrilateral(2.0, 0.5), geometry_error);
    CHECK_THROWS_AS(case_quadrilateral(std::numeric_limits<double>::infinity(), 2.0),
                    geometry_error);
    // Barely-legal parameters are nudged into a constructible range.
    CaseInstance inst = case_quadrilateral(1.0 + 1e-12, 2.0);
    CHECK(inst.q.size() == 4);
    CHECK(is_q_cover(inst.k, inst.q).is_cover);
}

TEST_CASE("pappus alignment for the quadrilateral construction") {
    for (double a : {1.4, 2.0, 3.0, 4.5})
        for (double b : {1.6, 2.8, 4.1}) {
            PappusPoints pts = pappus_points(a, b);
            double col = wedge(pts.f - pts.e, pts.g - pts.e);
            CHECK_THAT(col, Catch::Matchers::WithinAbs(0.0, 1e-9));
        }
}

TEST_CASE("equality family hexagons exist exactly on (a-1)(b-1) = 1") {
    CaseInstance inst = case_quadrilateral(2.0, 2.0);
    REQUIRE(inst.alternates.size() == 2);
    for (const auto& [name, alt] : inst.alternates) {
        CHECK_THAT(polygon_area(alt), Catch::Matchers::WithinAbs(1.0, 1e-12));
        CHECK_THAT(systolic_ratio(alt, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    }
    // Off the curve there are no family alternates.
    CHECK(case_quadrilateral(2.0, 3.0).alternates.empty());
}

TEST_CASE("pentagon case reproduces the counterexample ratio") {
    CaseInstance inst = case_pentagon_hko();
    CHECK_THAT(capacity(inst.k, inst.q).capacity, Catch::Matchers::WithinAbs(1.0, 1e-9));
    double ratio = systolic_ratio(inst.k, inst.q);
    CHECK_THAT(ratio, Catch::Matchers::WithinAbs((std::sqrt(5.0) + 3.0) / 5.0, 1e-9));
    CHECK(ratio > 1.0);
}

TEST_CASE("truncated square: closed-form ratio on a grid, strictly below 1") {
    for (double alpha : {0.12, 0.28, 0.44})
        for (double beta : {0.15, 0.31, 0.47}) {
            if (alpha + beta >= 0.95) continue;
            CaseInstance inst = case_truncated_square(alpha, beta);
            double measured = systolic_ratio(inst.k, inst.q);
            CHECK_THAT(measured,
                       Catch::Matchers::WithinAbs(truncated_square_ratio(alpha, beta), 1e-9));
            CHECK(measured < 1.0);
            CHECK(is_q_cover(inst.k, inst.q).is_cover);
            CHECK(inst.k.size() == 4);  // the trapezoid
        }
    CHECK_THROWS_AS(case_truncated_square(0.6, 0.5), geometry_error);
    CHECK_THROWS_AS(case_truncated_square(-0.1, 0.5), geometry_error);
}

TEST_CASE("truncated square: symmetric parameters give equal ratio to the reflection") {
    CaseInstance inst = case_truncated_square(0.3, 0.3);
    REQUIRE(inst.alternates.size() == 1);
    double r1 = systolic_ratio(inst.k, inst.q);
    double r2 = systolic_ratio(inst.alternates[0].second, inst.q);
    CHECK_THAT(r1, Catch::Matchers::WithinAbs(r2, 1e-12));
}

TEST_CASE("regular hexagon case: triangle cover and equality family") {
    CaseInstance inst = case_hexagon_regular();
    CHECK_THAT(polygon_area(inst.k),
               Catch::Matchers::WithinAbs(1.0 / std::sqrt(3.0), 1e-12));
    CHECK_THAT(polygon_area(inst.q), Catch::Matchers::WithinAbs(std::sqrt(3.0) / 2.0, 1e-12));
    CHECK_THAT(polygon_area(inst.k) * polygon_area(inst.q),
               Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THAT(capacity(inst.k, inst.q).capacity, Catch::Matchers::WithinAbs(1.0, 1e-9));
    CHECK_THAT(systolic_ratio(inst.k, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    REQUIRE(inst.alternates.size() == 2);
    for (const auto& [name, alt] : inst.alternates) {
        CHECK_THAT(polygon_area(alt),
                   Catch::Matchers::WithinAbs(*inst.expected_min_area, 1e-9));
        CHECK_THAT(systolic_ratio(alt, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("swapped hexagon case: four equality covers") {
    CaseInstance inst = case_hexagon_nonregular_swapped();
    CHECK_THAT(systolic_ratio(inst.k, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    REQUIRE(inst.alternates.size() == 3);
    for (const auto& [name, alt] : inst.alternates)
        CHECK_THAT(systolic_ratio(alt, inst.q), Catch::Matchers::WithinAbs(1.0, 1e-9));
    // K0 (triangle) and K1 (quadrilateral) are genuinely different shapes.
    CHECK(inst.k.size() == 3);
    CHECK(inst.alternates[0].second.size() == 4);
}

TEST_CASE("every case K passes is_q_cover") {
    std::vector<CaseInstance> all{case_triangle(),
                                  case_quadrilateral(2.2, 3.1),
                                  case_pentagon_hko(),
                                  case_truncated_square(0.3, 0.25),
                                  case_hexagon_regular(),
                                  case_hexagon_nonregular_swapped()};
    for (const auto& inst : all) {
        CAPTURE(inst.name);
        CHECK(is_q_cover(inst.k, inst.q).is_cover);
    }
}
