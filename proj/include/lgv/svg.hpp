#pragma once

// Deterministic SVG 1.1 output for path families and overlays: rounded
// corners, small per-path offsets so coincident runs stay readable, dots
// for lattice points and filled markers for endpoints.

#include "lgv/overlays.hpp"
#include "lgv/paths.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace lgv {

struct SvgOptions {
    double scale = 30.0;
    double margin = 24.0;
    double corner = 8.0;  // corner rounding radius
    std::string green = "#2f9e44";
    std::string red = "#d6404f";
    std::string single = "#315fa2";
    bool labels = true;
};

namespace detail {

inline std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

struct Canvas {
    double minx = 0, maxx = 0, maxy = 0;
    SvgOptions opt;

    double X(double x) const { return (x - minx) * opt.scale + opt.margin; }
    double Y(double y) const { return (maxy - y) * opt.scale + opt.margin; }

    std::string path_elem(const LatticePath& p, const std::string& color, double offset) const {
        const auto pts = p.points();
        std::string d;
        const double r = std::min(opt.corner, opt.scale / 2.5);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double px = X(pts[i].x) + offset, py = Y(pts[i].y) - offset;
            if (i == 0) {
                d += "M" + fmt1(px) + " " + fmt1(py);
                continue;
            }
            const bool corner = i + 1 < pts.size() &&
                                (pts[i + 1].x - pts[i - 1].x != 0) && (pts[i + 1].y - pts[i - 1].y != 0);
            if (!corner) {
                d += " L" + fmt1(px) + " " + fmt1(py);
                continue;
            }
            // Stop short of the corner, then turn with a quadratic curve.
            const double inx = px - (pts[i].x - pts[i - 1].x) * r;
            const double iny = py + (pts[i].y - pts[i - 1].y) * r;
            const double outx = px + (pts[i + 1].x - pts[i].x) * r;
            const double outy = py - (pts[i + 1].y - pts[i].y) * r;
            d += " L" + fmt1(inx) + " " + fmt1(iny);
            d += " Q" + fmt1(px) + " " + fmt1(py) + " " + fmt1(outx) + " " + fmt1(outy);
        }
        return "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2.4\" stroke-linecap=\"round\"/>\n";
    }

    std::string endpoint_marks(const LatticePath& p, const std::string& color) const {
        auto mark = [&](Point q) {
            return "  <circle cx=\"" + fmt1(X(q.x)) + "\" cy=\"" + fmt1(Y(q.y)) +
                   "\" r=\"4.0\" fill=\"" + color + "\"/>\n";
        };
        return mark(p.start()) + mark(p.points().back());
    }
};

inline Canvas canvas_for(const std::vector<const PathTuple*>& tuples, const SvgOptions& opt) {
    Canvas c;
    c.opt = opt;
    bool first = true;
    int miny = 1;
    for (const PathTuple* t : tuples)
        for (const auto& p : t->paths)
            for (const Point& q : p.points()) {
                if (first) {
                    c.minx = c.maxx = q.x;
                    c.maxy = q.y;
                    miny = q.y;
                    first = false;
                }
                c.minx = std::min(c.minx, static_cast<double>(q.x));
                c.maxx = std::max(c.maxx, static_cast<double>(q.x));
                c.maxy = std::max(c.maxy, static_cast<double>(q.y));
                miny = std::min(miny, q.y);
            }
    (void)miny;
    return c;
}

inline std::string svg_document(const Canvas& c, int levels, const std::string& body) {
    const double w = c.X(c.maxx) + c.opt.margin;
    const double h = c.Y(1) + c.opt.margin;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt1(w) +
           "\" height=\"" + fmt1(h) + "\" viewBox=\"0 0 " + fmt1(w) + " " + fmt1(h) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // lattice dots
    for (int y = 1; y <= levels; ++y)
        for (int x = static_cast<int>(c.minx); x <= static_cast<int>(c.maxx); ++x)
            out += "  <circle cx=\"" + fmt1(c.X(x)) + "\" cy=\"" + fmt1(c.Y(y)) +
                   "\" r=\"1.2\" fill=\"#c9c9c9\"/>\n";
    out += body;
    out += "</svg>\n";
    return out;
}

}  // namespace detail

// One path family; paths get tiny parallel offsets so intersecting tuples
// stay readable.
inline std::string svg_paths(const PathTuple& t, const SvgOptions& opt = {}) {
    detail::Canvas c = detail::canvas_for({&t}, opt);
    std::string body;
    const double spread = 2.2;
    for (std::size_t i = 0; i < t.paths.size(); ++i) {
        const double offset = (static_cast<double>(i) - (static_cast<double>(t.paths.size()) - 1) / 2.0) * spread;
        body += c.path_elem(t.paths[i], opt.single, offset);
        body += c.endpoint_marks(t.paths[i], opt.single);
    }
    if (opt.labels)
        for (const auto& p : t.paths) {
            const Point s = p.start();
            body += "  <text x=\"" + detail::fmt1(c.X(s.x) - 10) + "\" y=\"" + detail::fmt1(c.Y(s.y) + 16) +
                    "\" font-size=\"10\" fill=\"#555\">(" + std::to_string(s.x) + "," +
                    std::to_string(s.y) + ")</text>\n";
        }
    return detail::svg_document(c, t.n, body);
}

// Overlay rendering: green under red, optional trail highlighted.
inline std::string svg_overlay(const Overlay& o, const SvgOptions& opt = {},
                               const BicolouredTrail* highlight = nullptr) {
    detail::Canvas c = detail::canvas_for({&o.green, &o.red}, opt);
    std::string body;
    if (highlight) {
        for (const auto& [arc, colour] : highlight->arcs) {
            const Point a = arc.from, b = arc.to();
            body += "  <line x1=\"" + detail::fmt1(c.X(a.x)) + "\" y1=\"" + detail::fmt1(c.Y(a.y)) +
                    "\" x2=\"" + detail::fmt1(c.X(b.x)) + "\" y2=\"" + detail::fmt1(c.Y(b.y)) +
                    "\" stroke=\"#f1c40f\" stroke-width=\"7.0\" stroke-linecap=\"round\" opacity=\"0.55\"/>\n";
        }
    }
    for (const auto& p : o.green.paths) {
        body += c.path_elem(p, opt.green, -1.6);
        body += c.endpoint_marks(p, opt.green);
    }
    for (const auto& p : o.red.paths) {
        body += c.path_elem(p, opt.red, 1.6);
        body += c.endpoint_marks(p, opt.red);
    }
    return detail::svg_document(c, o.n, body);
}

}  // namespace lgv
