#include "delzant/svg.hpp"

#include "delzant/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace delzant {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 40.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Frame {
    double min_x, min_y, scale;

    double x(double px) const { return kMargin + (px - min_x) * scale; }
    double y(double py) const { return kCanvas - kMargin - (py - min_y) * scale; }
};

Frame frame_for(const std::vector<const DelzantPolygon*>& polygons) {
    double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
    for (const auto* p : polygons) {
        for (const auto& v : p->vertices()) {
            double x = to_double(v.x), y = to_double(v.y);
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
        }
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    return {min_x, min_y, (kCanvas - 2 * kMargin) / span};
}

}  // namespace

std::string render_svg(const DelzantPolygon& polygon, const std::vector<DelzantPolygon>& overlays) {
    std::vector<const DelzantPolygon*> all{&polygon};
    for (const auto& o : overlays) all.push_back(&o);
    const Frame f = frame_for(all);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
    out << "<defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">"
           "<polygon points=\"0,0 6,3 0,6\" fill=\"#444\"/></marker></defs>\n";

    for (std::size_t k = 0; k < all.size(); ++k) {
        const auto& verts = all[k]->vertices();
        out << "<path d=\"";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            out << (i == 0 ? 'M' : 'L') << fmt(f.x(to_double(verts[i].x))) << ','
                << fmt(f.y(to_double(verts[i].y))) << ' ';
        }
        const char* color = kPalette[k % std::size(kPalette)];
        out << "Z\" fill=\"" << color << "\" fill-opacity=\"" << (k == 0 ? "0.35" : "0.2") << "\" stroke=\""
            << color << "\" stroke-width=\"" << (k == 0 ? "2" : "1.5") << "\"/>\n";
    }

    const auto& verts = polygon.vertices();
    const auto& edges = polygon.edges();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        double x = f.x(to_double(verts[i].x)), y = f.y(to_double(verts[i].y));
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"#000\"/>\n";
        out << "<text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5) << "\" font-size=\"11\" font-family=\"monospace\">v"
            << i << " (" << to_string(verts[i].x) << ", " << to_string(verts[i].y) << ")</text>\n";
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Vec2& a = verts[i];
        const Vec2& b = verts[(i + 1) % verts.size()];
        double mx = f.x(to_double((a.x + b.x) / 2)), my = f.y(to_double((a.y + b.y) / 2));
        double nx = to_double(Rational(edges[i].outward_normal.x));
        double ny = to_double(Rational(edges[i].outward_normal.y));
        double len = std::hypot(nx, ny);
        double ex = mx + 24.0 * nx / len, ey = my - 24.0 * ny / len;
        out << "<line x1=\"" << fmt(mx) << "\" y1=\"" << fmt(my) << "\" x2=\"" << fmt(ex) << "\" y2=\"" << fmt(ey)
            << "\" stroke=\"#444\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const Polytope& polytope, const std::vector<DelzantPolygon>& overlays) {
    if (const auto* polygon = std::get_if<DelzantPolygon>(&polytope)) return render_svg(*polygon, overlays);
    throw Error(ErrorKind::Unsupported, "rendering is only available for polygons");
}

}  // namespace delzant
