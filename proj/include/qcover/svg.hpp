#pragma once

// Minimal SVG scenes for geometric figures: polygons and polylines in a
// fixed viewport fitted to the scene's bounding box with a 5% margin,
// plus text labels carrying the numeric results for cross-checking.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcover/geometry.hpp"

namespace qcover {

// Fill colors matching the figure conventions.
inline constexpr const char* kSvgYellow = "#f2c94c";
inline constexpr const char* kSvgOrange = "#f2994a";
inline constexpr const char* kSvgBlue = "#2f80ed";
inline constexpr const char* kSvgGreen = "#27ae60";

class SvgScene {
public:
    void add_polygon(const std::vector<Point2>& vertices, const std::string& fill,
                     double opacity = 0.45) {
        items_.push_back({vertices, fill, opacity, /*closed=*/true});
        extend_bounds(vertices);
    }

    void add_polygon(const ConvexPolygon& polygon, const std::string& fill,
                     double opacity = 0.45) {
        add_polygon(std::vector<Point2>(polygon.vertices().begin(),
                                        polygon.vertices().end()),
                    fill, opacity);
    }

    void add_polyline(const std::vector<Point2>& vertices, const std::string& stroke) {
        items_.push_back({vertices, stroke, 1.0, /*closed=*/false});
        extend_bounds(vertices);
    }

    // Labels are stacked under the drawing, one line each.
    void add_label(const std::string& text) { labels_.push_back(text); }

    std::string render(double viewport = 640.0) const {
        if (!has_bounds_) throw geometry_error("svg scene is empty");
        double w = max_.x - min_.x, h = max_.y - min_.y;
        double span = std::max({w, h, 1e-12});
        double margin = 0.05 * span;
        double scale = viewport / (span + 2.0 * margin);
        double ox = min_.x - margin + (span - w) / 2.0;
        double oy = min_.y - margin + (span - h) / 2.0;
        double label_band = 22.0 * (double)labels_.size() + 8.0;

        auto sx = [&](double x) { return (x - ox) * scale; };
        auto sy = [&](double y) { return viewport - (y - oy) * scale; };

        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << viewport
            << "\" height=\"" << viewport + label_band << "\" viewBox=\"0 0 "
            << viewport << " " << viewport + label_band << "\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        for (const auto& item : items_) {
            out << (item.closed ? "<polygon" : "<polyline") << " points=\"";
            for (size_t i = 0; i < item.vertices.size(); ++i) {
                if (i) out << ' ';
                out << sx(item.vertices[i].x) << ',' << sy(item.vertices[i].y);
            }
            if (item.closed) {
                out << "\" fill=\"" << item.color << "\" fill-opacity=\""
                    << item.opacity << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            } else {
                out << "\" fill=\"none\" stroke=\"" << item.color
                    << "\" stroke-width=\"1.5\"/>\n";
            }
        }
        double ty = viewport + 18.0;
        for (const auto& label : labels_) {
            out << "<text x=\"10\" y=\"" << ty
                << "\" font-family=\"monospace\" font-size=\"14\">" << escape(label)
                << "</text>\n";
            ty += 22.0;
        }
        out << "</svg>\n";
        return out.str();
    }

    void write(const std::string& path, double viewport = 640.0) const {
        std::ofstream out(path);
        if (!out) throw geometry_error("cannot write svg file: " + path);
        out << render(viewport);
    }

private:
    struct Item {
        std::vector<Point2> vertices;
        std::string color;
        double opacity;
        bool closed;
    };

    static std::string escape(const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '<') out += "&lt;";
            else if (ch == '>') out += "&gt;";
            else if (ch == '&') out += "&amp;";
            else out.push_back(ch);
        }
        return out;
    }

    void extend_bounds(const std::vector<Point2>& vs) {
        for (const auto& v : vs) {
            if (!has_bounds_) {
                min_ = max_ = v;
                has_bounds_ = true;
            } else {
                min_.x = std::min(min_.x, v.x);
                min_.y = std::min(min_.y, v.y);
                max_.x = std::max(max_.x, v.x);
                max_.y = std::max(max_.y, v.y);
            }
        }
    }

    std::vector<Item> items_;
    std::vector<std::string> labels_;
    Point2 min_{0, 0}, max_{0, 0};
    bool has_bounds_ = false;
};

}  // namespace qcover
