#include <cmath>
#include <cstdio>
#include <sstream>

#include "sweeprec/error.hpp"
#include "sweeprec/generate.hpp"

namespace sweeprec {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;
constexpr double kArrow = 24.0;

struct P2 {
    double x;
    double y;
};

P2 project(const Vector& v) {
    double x = v[0].get_d();
    double y = v[1].get_d();
    if (v.size() == 3) {
        double z = v[2].get_d();
        x += 0.35 * z;
        y += 0.2 * z;
    }
    return {x, y};
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

}  // namespace

std::string plot_svg(const SimplicialComplex& k, const std::optional<SweepingOrder>& order) {
    if (k.ambient_dim() > 3) throw Error(ErrorKind::Unsupported, "plotting needs d <= 3");
    const double full = kSize + 2 * kMargin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(full) << "\" height=\""
        << num(full) << "\" viewBox=\"0 0 " << num(full) << ' ' << num(full) << "\">\n";

    std::vector<P2> pts;
    for (const Vector& v : k.points()) pts.push_back(project(v));
    if (pts.empty()) {
        out << "</svg>\n";
        return out.str();
    }
    double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
    for (const P2& p : pts) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = kSize / span;
    auto screen = [&](P2 p) {
        return P2{kMargin + (p.x - lo_x) * scale, kMargin + kSize - (p.y - lo_y) * scale};
    };
    auto centroid = [&](const Simplex& s) {
        P2 c{0, 0};
        for (VertexId v : s.vertices()) {
            c.x += pts[v].x;
            c.y += pts[v].y;
        }
        double m = static_cast<double>(s.size());
        return screen({c.x / m, c.y / m});
    };

    if (order) {
        out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
               "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#c0392b\"/></marker></defs>\n";
    }
    for (const Simplex& t : k.simplices(2)) {
        out << "<polygon class=\"triangle\" points=\"";
        for (std::size_t j = 0; j < t.size(); ++j) {
            P2 p = screen(pts[t.vertices()[j]]);
            out << (j ? " " : "") << num(p.x) << ',' << num(p.y);
        }
        out << "\" fill=\"#5dade2\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    }
    for (const Simplex& e : k.simplices(1)) {
        P2 a = screen(pts[e.vertices()[0]]);
        P2 b = screen(pts[e.vertices()[1]]);
        out << "<line class=\"edge\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
            << "\" y2=\"" << num(b.y) << "\" stroke=\"#1b2631\" stroke-width=\"1.5\"/>\n";
    }
    for (const P2& raw : pts) {
        P2 p = screen(raw);
        out << "<circle class=\"vertex\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
            << "\" r=\"4\" fill=\"#1b2631\"/>\n";
    }
    if (order) {
        for (std::size_t j = 0; j < order->entries.size(); ++j) {
            const SweepEntry& e = order->entries[j];
            P2 c = centroid(e.simplex);
            P2 dir = project(e.direction);
            double len = std::hypot(dir.x, dir.y);
            if (len > 0) {
                P2 tip{c.x + kArrow * dir.x / len, c.y - kArrow * dir.y / len};
                out << "<path class=\"dir\" d=\"M" << num(c.x) << ',' << num(c.y) << " L" << num(tip.x) << ','
                    << num(tip.y) << "\" stroke=\"#c0392b\" marker-end=\"url(#head)\"/>\n";
            }
            out << "<text class=\"label\" x=\"" << num(c.x + 4) << "\" y=\"" << num(c.y - 4)
                << "\" font-size=\"12\" font-family=\"sans-serif\">" << j + 1 << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace sweeprec
