#pragma once

// Spadjor documents on disk and SVG rendering. A document is a JSON object
//   {"epsilon": number, "special": "zero"|"one" (optional),
//    "curves": [[[x, y], ...], ...]}
// holding one point array per polygon; orientation is encoded by vertex
// order and no inclusion relations are stored.

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "yinset/boolean.hpp"
#include "yinset/oracle.hpp"
#include "yinset/spadjor.hpp"

namespace yinset {

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpadjorDocument {
    double epsilon = 1e-9;
    std::optional<std::string> special;  // "zero" | "one"
    std::vector<std::vector<Point>> curves;
};

inline SpadjorDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(path + ": " + e.what());
    }
    if (!doc.is_object()) throw DocumentError(path + ": top level must be an object");

    SpadjorDocument out;
    if (doc.contains("epsilon")) {
        if (!doc["epsilon"].is_number() || !(doc["epsilon"].get<double>() > 0.0))
            throw DocumentError(path + ": epsilon must be a positive number");
        out.epsilon = doc["epsilon"].get<double>();
    }
    if (doc.contains("special")) {
        const auto s = doc["special"].get<std::string>();
        if (s != "zero" && s != "one")
            throw DocumentError(path + ": special must be \"zero\" or \"one\"");
        out.special = s;
        return out;
    }
    if (!doc.contains("curves") || !doc["curves"].is_array())
        throw DocumentError(path + ": missing curve array");
    for (const auto& jc : doc["curves"]) {
        std::vector<Point> pts;
        for (const auto& jp : jc) {
            if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number() || !jp[1].is_number())
                throw DocumentError(path + ": vertex must be [x, y]");
            pts.push_back({jp[0].get<double>(), jp[1].get<double>()});
        }
        out.curves.push_back(std::move(pts));
    }
    return out;
}

inline RealizableSpadjor to_spadjor(const SpadjorDocument& doc, Tolerance tol) {
    if (doc.special) {
        return *doc.special == "zero" ? RealizableSpadjor::zero() : RealizableSpadjor::one();
    }
    std::vector<OrientedJordanCurve> curves;
    for (const auto& pts : doc.curves) curves.emplace_back(pts, tol);
    return RealizableSpadjor::from_curves(std::move(curves), tol);
}

inline RealizableSpadjor load(const std::string& path) {
    const SpadjorDocument doc = read_document(path);
    return to_spadjor(doc, Tolerance(doc.epsilon));
}

inline RealizableSpadjor load(const std::string& path, Tolerance tol) {
    return to_spadjor(read_document(path), tol);
}

// Canonical serialization: every curve rotated to its lexicographically
// smallest start, curves sorted, floats in shortest round-trip form. Saving
// what was just loaded reproduces the file byte for byte.
inline void save(const RealizableSpadjor& j, const std::string& path, Tolerance tol) {
    nlohmann::json doc;
    doc["epsilon"] = tol.eps;
    if (j.is_zero())
        doc["special"] = "zero";
    else if (j.is_one())
        doc["special"] = "one";
    else {
        std::vector<std::vector<Point>> lists;
        for (const auto& c : j.curves()) {
            std::vector<Point> v = c.vertices();
            std::size_t best = 0;
            for (std::size_t s = 1; s < v.size(); ++s)
                for (std::size_t k = 0; k < v.size(); ++k) {
                    const Point& a = v[(s + k) % v.size()];
                    const Point& b = v[(best + k) % v.size()];
                    if (a == b) continue;
                    if (lex_less(a, b)) best = s;
                    break;
                }
            std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
            lists.push_back(std::move(v));
        }
        std::sort(lists.begin(), lists.end(), detail::lex_less_points);
        nlohmann::json curves = nlohmann::json::array();
        for (const auto& list : lists) {
            nlohmann::json jc = nlohmann::json::array();
            for (const Point& p : list) jc.push_back({p.x, p.y});
            curves.push_back(std::move(jc));
        }
        doc["curves"] = std::move(curves);
    }
    std::ofstream out(path);
    if (!out) throw DocumentError("cannot write " + path);
    out << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// SVG rendering.
// ---------------------------------------------------------------------------

struct RenderStyle {
    double canvas = 640.0;       // longer canvas side in px
    std::string fill = "#9db8d9";
    std::string stroke = "#1c2f4a";
    double stroke_width = 1.5;
    bool arrowheads = true;
};

namespace detail {

inline Window render_window(const RealizableSpadjor& j) {
    if (j.kind() != SpadjorKind::Curves) return {0.0, 0.0, 1.0, 1.0};
    auto bb = j.curves().front().bbox();
    for (const auto& c : j.curves()) {
        const auto b = c.bbox();
        bb.xmin = std::min(bb.xmin, b.xmin);
        bb.ymin = std::min(bb.ymin, b.ymin);
        bb.xmax = std::max(bb.xmax, b.xmax);
        bb.ymax = std::max(bb.ymax, b.ymax);
    }
    const double mx = std::max(1e-6, 0.05 * (bb.xmax - bb.xmin));
    const double my = std::max(1e-6, 0.05 * (bb.ymax - bb.ymin));
    return {bb.xmin - mx, bb.ymin - my, bb.xmax + mx, bb.ymax + my};
}

}  // namespace detail

// Filled picture of the represented region: solid outlines for positive
// curves, dashed for negative ones, nonzero winding fill, and a small
// arrowhead showing each curve's direction.
inline void render(const RealizableSpadjor& j, const std::string& path,
                   std::optional<Window> window = {}, RenderStyle style = {}) {
    const Window w = window ? *window : detail::render_window(j);
    if (!(w.width() > 0.0) || !(w.height() > 0.0))
        throw std::invalid_argument("render: degenerate window");
    const double s = style.canvas / std::max(w.width(), w.height());
    const double W = w.width() * s;
    const double H = w.height() * s;
    const auto X = [&](double x) { return (x - w.x0) * s; };
    const auto Y = [&](double y) { return (w.y1 - y) * s; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\" stroke=\"#666666\" stroke-width=\"1\"/>\n";

    if (j.kind() == SpadjorKind::Curves || j.is_one()) {
        std::ostringstream d;
        if (j.unbounded() || j.is_one()) {
            d << "M " << X(w.x0) << " " << Y(w.y0) << " L " << X(w.x1) << " " << Y(w.y0) << " L "
              << X(w.x1) << " " << Y(w.y1) << " L " << X(w.x0) << " " << Y(w.y1) << " Z ";
        }
        if (j.kind() == SpadjorKind::Curves) {
            for (const auto& c : j.curves()) {
                const auto& v = c.vertices();
                d << "M " << X(v[0].x) << " " << Y(v[0].y);
                for (std::size_t i = 1; i < v.size(); ++i)
                    d << " L " << X(v[i].x) << " " << Y(v[i].y);
                d << " Z ";
            }
        }
        svg << "  <path d=\"" << d.str() << "\" fill=\"" << style.fill
            << "\" fill-rule=\"nonzero\" fill-opacity=\"0.75\" stroke=\"none\"/>\n";
    }

    if (j.kind() == SpadjorKind::Curves) {
        for (const auto& c : j.curves()) {
            const auto& v = c.vertices();
            std::ostringstream d;
            d << "M " << X(v[0].x) << " " << Y(v[0].y);
            for (std::size_t i = 1; i < v.size(); ++i)
                d << " L " << X(v[i].x) << " " << Y(v[i].y);
            d << " Z";
            svg << "  <path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << style.stroke
                << "\" stroke-width=\"" << style.stroke_width << "\"";
            if (c.orientation() == Orientation::Negative)
                svg << " stroke-dasharray=\"6 4\"";
            svg << "/>\n";
        }
        if (style.arrowheads) {
            for (const auto& c : j.curves()) {
                // Longest edge carries the direction marker.
                std::size_t e = 0;
                for (std::size_t i = 1; i < c.size(); ++i)
                    if (c.edge(i).length() > c.edge(e).length()) e = i;
                const Segment seg = c.edge(e);
                const Point m = seg.a + seg.dir() * 0.5;
                const Point u = seg.dir() * (1.0 / seg.length());
                const Point nperp{-u.y, u.x};
                const double a = 6.0 / s;  // arrow size in world units
                const Point tip = m + u * a;
                const Point l = m - u * a * 0.4 + nperp * a * 0.6;
                const Point r = m - u * a * 0.4 - nperp * a * 0.6;
                svg << "  <path d=\"M " << X(tip.x) << " " << Y(tip.y) << " L " << X(l.x) << " "
                    << Y(l.y) << " L " << X(r.x) << " " << Y(r.y) << " Z\" fill=\"" << style.stroke
                    << "\"/>\n";
            }
        }
    }

    svg << "</svg>\n";
    std::ofstream out(path);
    if (!out) throw DocumentError("cannot write " + path);
    out << svg.str();
}

}  // namespace yinset
