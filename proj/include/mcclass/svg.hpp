#pragma once

// SVG pictures of Newton polygons for Fl(3), drawn in the plane
// t1 + t2 + t3 = 0 with orthonormal axes u = (1,-1,0)/sqrt2 and
// v = (1,1,-2)/sqrt6.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "newton.hpp"

namespace mcc {

struct svg_layer {
    std::string css_class;  // ek, mc or cotangent
    std::vector<lattice_point> points;
    bool polygon;  // hull outline, or isolated dots
};

namespace detail {

// Integer coordinates proportional to (sqrt2 u, sqrt6 v); convexity is kept
// because the rescaling is linear.
inline std::pair<long, long> plane_coords(const lattice_point& x) {
    if (x.size() != 3) throw invalid_input("SVG pictures need three torus coordinates");
    return {static_cast<long>(x[0]) - x[1], static_cast<long>(x[0]) + x[1] - 2L * x[2]};
}

// Andrew's monotone chain, counterclockwise, collinear points dropped.
inline std::vector<std::pair<long, long>> hull_2d(std::vector<std::pair<long, long>> p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return p;
    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long, long>> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

inline std::string fixed3(double v) {
    if (std::fabs(v) < 5e-4) v = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::pair<std::string, std::string> screen(const std::pair<long, long>& q, double scale) {
    return {fixed3(scale * static_cast<double>(q.first) / std::sqrt(2.0)),
            fixed3(-scale * static_cast<double>(q.second) / std::sqrt(6.0))};
}

}  // namespace detail

inline std::string render_svg(const std::string& title, const std::vector<svg_layer>& layers, double scale = 40.0) {
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"320\" viewBox=\"-160 -160 320 320\">\n";
    s += "<title>" + title + "</title>\n";
    s += "<style>\n";
    s += ".axis{stroke:#bbbbbb;stroke-width:0.5}\n";
    s += ".ek{fill:#1f5fd1;fill-opacity:0.25;stroke:#1f5fd1;stroke-width:1.5}\n";
    s += ".mc{fill:#8e44ad;fill-opacity:0.35;stroke:#8e44ad;stroke-width:1.5}\n";
    s += ".cotangent{fill:#d62728}\n";
    s += "</style>\n";
    // Images of the coordinate axes t1, t2, t3.
    for (const lattice_point& e : {lattice_point{3, 0, 0}, lattice_point{0, 3, 0}, lattice_point{0, 0, 3}}) {
        auto [x, y] = detail::screen(detail::plane_coords(e), scale);
        s += "<line class=\"axis\" x1=\"0.000\" y1=\"0.000\" x2=\"" + x + "\" y2=\"" + y + "\"/>\n";
    }
    for (const auto& layer : layers) {
        std::vector<std::pair<long, long>> q;
        for (const auto& p : layer.points) q.push_back(detail::plane_coords(p));
        if (layer.polygon) {
            auto h = detail::hull_2d(q);
            std::string pts;
            for (const auto& v : h) {
                auto [x, y] = detail::screen(v, scale);
                pts += (pts.empty() ? "" : " ") + x + "," + y;
            }
            s += "<polygon class=\"" + layer.css_class + "\" points=\"" + pts + "\"/>\n";
            for (const auto& v : h) {
                auto [x, y] = detail::screen(v, scale);
                s += "<circle class=\"" + layer.css_class + "\" cx=\"" + x + "\" cy=\"" + y + "\" r=\"2\"/>\n";
            }
        } else {
            std::sort(q.begin(), q.end());
            q.erase(std::unique(q.begin(), q.end()), q.end());
            for (const auto& v : q) {
                auto [x, y] = detail::screen(v, scale);
                s += "<circle class=\"" + layer.css_class + "\" cx=\"" + x + "\" cy=\"" + y + "\" r=\"3\"/>\n";
            }
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace mcc
