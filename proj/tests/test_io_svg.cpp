#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "qcover/io.hpp"
#include "qcover/svg.hpp"

using namespace qcover;

TEST_CASE("parse one decimal pair per line") {
    PolygonDocument doc = parse_polygon_document(
        "# a unit square\n"
        "name: square\n"
        "0 0\n"
        "1 0\n"
        "1 1\n"
        "0 1\n");
    REQUIRE(doc.vertices.size() == 4);
    CHECK(doc.name == "square");
    ConvexPolygon p = doc.to_polygon();
    CHECK_THAT(polygon_area(p), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("parse bracketed list and comma pairs") {
    PolygonDocument doc = parse_polygon_document("[[0, 0], [1, 0], [0.5, 2.5]]\n");
    REQUIRE(doc.vertices.size() == 3);
    CHECK(doc.vertices[2].y == 2.5);
    PolygonDocument doc2 = parse_polygon_document("0, 0\n1, 0\n0.5, 2.5\n");
    CHECK(doc2.vertices.size() == 3);
}

TEST_CASE("clockwise input is reordered to counterclockwise") {
    PolygonDocument doc = parse_polygon_document("0 0\n0 1\n1 1\n1 0\n");
    ConvexPolygon p = doc.to_polygon();
    double twice = 0.0;
    for (size_t i = 0; i < p.size(); ++i) twice += wedge(p[i], p[(i + 1) % p.size()]);
    CHECK(twice > 0.0);
}

TEST_CASE("parse errors name the offending field") {
    CHECK_THROWS_WITH(parse_polygon_document("0 zero\n"),
                      Catch::Matchers::ContainsSubstring("not a number"));
    CHECK_THROWS_WITH(parse_polygon_document("1 2 3\n"),
                      Catch::Matchers::ContainsSubstring("odd number"));
    CHECK_THROWS_WITH(parse_polygon_document(""),
                      Catch::Matchers::ContainsSubstring("no vertices"));
    CHECK_THROWS_AS(parse_polygon_document("0 0\n1 0\n").to_polygon(), parse_error);
}

TEST_CASE("round-trip is bit-exact at 17 significant digits") {
    PolygonDocument doc;
    doc.vertices = {{0.1, -0.2},
                    {1.0 / 3.0, 2.0 / 7.0},
                    {std::sqrt(2.0), -std::numbers::pi},
                    {1e-17, 12345.678901234567}};
    std::string text = write_polygon_document(doc);
    PolygonDocument back = parse_polygon_document(text);
    REQUIRE(back.vertices.size() == doc.vertices.size());
    for (size_t i = 0; i < doc.vertices.size(); ++i) {
        CHECK(back.vertices[i].x == doc.vertices[i].x);
        CHECK(back.vertices[i].y == doc.vertices[i].y);
    }
}

TEST_CASE("svg scene renders polygons, labels, and a fitted viewport") {
    SvgScene scene;
    scene.add_polygon(ConvexPolygon({{0, 0}, {2, 0}, {1, 3}}), kSvgYellow);
    scene.add_polyline({{0, 0}, {2, 3}}, kSvgBlue);
    scene.add_label("area=3");
    std::string svg = scene.render();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("area=3") != std::string::npos);
    CHECK(svg.find(kSvgYellow) != std::string::npos);
}

TEST_CASE("empty svg scenes are rejected") {
    SvgScene scene;
    CHECK_THROWS_AS(scene.render(), geometry_error);
}
