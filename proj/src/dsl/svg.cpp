#include "pyrageo/dsl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pyrageo::dsl {

using geom::Circle;
using geom::Line;
using geom::Point;

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Liang-Barsky clip of an infinite line against the viewport.
std::optional<std::pair<Point, Point>> clip(const Line& l, const Viewport& vp) {
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    const Point a = l.anchor();
    const Point d = l.direction();
    auto slab = [&](double origin, double dir, double lo, double hi) {
        if (std::abs(dir) < 1e-15) return origin >= lo && origin <= hi;
        double ta = (lo - origin) / dir;
        double tb = (hi - origin) / dir;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        return t0 <= t1;
    };
    if (!slab(a.x, d.x, vp.min_x, vp.max_x) || !slab(a.y, d.y, vp.min_y, vp.max_y)) return std::nullopt;
    return std::make_pair(l.at(t0), l.at(t1));
}

}  // namespace

Viewport fit_viewport(const Env& env) {
    bool any = false;
    Viewport vp{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    auto grow = [&](double x0, double y0, double x1, double y1) {
        any = true;
        vp.min_x = std::min(vp.min_x, x0);
        vp.min_y = std::min(vp.min_y, y0);
        vp.max_x = std::max(vp.max_x, x1);
        vp.max_y = std::max(vp.max_y, y1);
    };
    for (const auto& e : env.entries()) {
        if (e.value.is<Point>()) {
            const Point p = e.value.as<Point>();
            grow(p.x, p.y, p.x, p.y);
        } else if (e.value.is<Circle>()) {
            const Circle& c = e.value.as<Circle>();
            grow(c.center().x - c.radius(), c.center().y - c.radius(), c.center().x + c.radius(),
                 c.center().y + c.radius());
        }
    }
    if (!any) return Viewport{};
    const double span = std::max({vp.max_x - vp.min_x, vp.max_y - vp.min_y, 1.0});
    const double pad = 0.1 * span;
    return Viewport{vp.min_x - pad, vp.min_y - pad, vp.max_x + pad, vp.max_y + pad};
}

std::string render_svg(const Env& env, const std::optional<Viewport>& viewport) {
    const Viewport vp = viewport ? *viewport : fit_viewport(env);
    const double w = vp.max_x - vp.min_x;
    const double h = vp.max_y - vp.min_y;
    const double scale = std::max(w, h);
    const double stroke = scale / 400.0;
    const double dot = scale / 150.0;
    const double font = scale / 40.0;
    const double px_width = 800.0;
    const double px_height = w > 0.0 ? px_width * h / w : px_width;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(px_width) << "\" height=\""
        << num(px_height) << "\" viewBox=\"" << num(vp.min_x) << " " << num(-vp.max_y) << " " << num(w) << " "
        << num(h) << "\">\n";
    out << "  <title>construction</title>\n";
    out << "  <rect x=\"" << num(vp.min_x) << "\" y=\"" << num(-vp.max_y) << "\" width=\"" << num(w)
        << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";

    const std::string text_style = "font-family=\"sans-serif\" font-size=\"" + num(font) + "\"";
    for (const auto& e : env.entries()) {
        const std::string id = escape(e.name);
        if (e.value.is<Point>()) {
            const Point p = e.value.as<Point>();
            out << "  <circle id=\"" << id << "\" class=\"point\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y)
                << "\" r=\"" << num(dot) << "\" fill=\"black\"/>\n";
            out << "  <text class=\"label\" x=\"" << num(p.x + dot) << "\" y=\"" << num(-p.y - dot) << "\" "
                << text_style << ">" << id << "</text>\n";
        } else if (e.value.is<Line>()) {
            auto seg = clip(e.value.as<Line>(), vp);
            if (!seg) {
                // Off-canvas lines keep their label so every binding is represented.
                out << "  <text class=\"label\" x=\"" << num(vp.min_x) << "\" y=\"" << num(-vp.min_y) << "\" "
                    << text_style << " fill=\"gray\">" << id << "</text>\n";
                continue;
            }
            const auto [a, b] = *seg;
            out << "  <line id=\"" << id << "\" class=\"line\" x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y)
                << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(-b.y) << "\" stroke=\"steelblue\" stroke-width=\""
                << num(stroke) << "\"/>\n";
            const Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
            out << "  <text class=\"label\" x=\"" << num(mid.x) << "\" y=\"" << num(-mid.y) << "\" " << text_style
                << " fill=\"steelblue\">" << id << "</text>\n";
        } else if (e.value.is<Circle>()) {
            const Circle& c = e.value.as<Circle>();
            out << "  <circle id=\"" << id << "\" class=\"circle\" cx=\"" << num(c.center().x) << "\" cy=\""
                << num(-c.center().y) << "\" r=\"" << num(c.radius()) << "\" fill=\"none\" stroke=\"darkred\""
                << " stroke-width=\"" << num(stroke) << "\"/>\n";
            out << "  <text class=\"label\" x=\"" << num(c.center().x) << "\" y=\""
                << num(-(c.center().y + c.radius()) - dot) << "\" " << text_style << " fill=\"darkred\">" << id
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pyrageo::dsl
