#include "gitseq/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace gitseq {

std::string to_dot(const StratumPoset& poset) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        std::string escaped;
        for (char c : poset.nodes[i].label) {
            if (c == '"' || c == '\\') escaped += '\\';
            escaped += c;
        }
        os << "  n" << i << " [label=\"" << escaped << "\\ndim " << poset.nodes[i].dim
           << "\"];\n";
    }
    const int max_dim = poset.nodes.empty()
                            ? -1
                            : std::max_element(poset.nodes.begin(), poset.nodes.end(),
                                               [](const PosetNode& a, const PosetNode& b) {
                                                   return a.dim < b.dim;
                                               })
                                  ->dim;
    for (int d = 0; d <= max_dim; ++d) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < poset.nodes.size(); ++i)
            if (poset.nodes[i].dim == d) os << " n" << i << ";";
        os << " }\n";
    }
    for (const auto& [lo, hi] : poset.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string num(double v) {
    char buf[32];
    if (v == 0.0) v = 0.0;  // avoid "-0.0000"
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Frame {
    double x_min, x_max, y_min, y_max;
    int width, height;

    double px(double x) const { return (x - x_min) / (x_max - x_min) * width; }
    double py(double y) const { return height - (y - y_min) / (y_max - y_min) * height; }
};

void draw_line(std::ostringstream& os, const Frame& f, double slope, double intercept,
               const char* style) {
    const double x0 = f.x_min, x1 = f.x_max;
    os << "<line x1=\"" << num(f.px(x0)) << "\" y1=\"" << num(f.py(slope * x0 + intercept))
       << "\" x2=\"" << num(f.px(x1)) << "\" y2=\"" << num(f.py(slope * x1 + intercept))
       << "\" " << style << "/>\n";
}

void draw_text(std::ostringstream& os, const Frame& f, double x, double y,
               const std::string& text) {
    os << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.py(y))
       << "\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" << text
       << "</text>\n";
}

}  // namespace

std::string broucke_svg(const DiagramOptions& options, const std::vector<TracePoint>* trace_points,
                        const std::vector<Event>* events) {
    const double X = options.x_range;
    Frame f{-X, X, -X * 0.75, X * 0.78, options.width, options.height};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
       << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << " "
       << options.height << "\">\n";
    os << "<rect width=\"" << options.width << "\" height=\"" << options.height
       << "\" fill=\"white\"/>\n";

    // axes
    os << "<line x1=\"" << num(f.px(f.x_min)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\""
       << num(f.px(f.x_max)) << "\" y2=\"" << num(f.py(0))
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(f.y_min)) << "\" x2=\""
       << num(f.px(0)) << "\" y2=\"" << num(f.py(f.y_max))
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    // elliptic pencil: tangents of slope cos(2 pi l/k) at (2a, a^2)
    if (options.k_max >= 3) {
        for (int k = 3; k <= options.k_max; ++k)
            for (int l = 1; 2 * l < k; ++l) {
                if (std::gcd(l, k) != 1) continue;
                const double a = std::cos(2.0 * 3.141592653589793238462643 *
                                          static_cast<double>(l) / static_cast<double>(k));
                draw_line(os, f, a, -a * a,
                          "stroke=\"#88aadd\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
            }
    }

    // Gamma_{+-1}: slopes +-1, tangent at (+-2, 1)
    draw_line(os, f, 1.0, -1.0, "stroke=\"#222222\" stroke-width=\"1.5\"");
    draw_line(os, f, -1.0, -1.0, "stroke=\"#222222\" stroke-width=\"1.5\"");

    // double-eigenvalue parabola y = x^2/4 as one exact quadratic Bezier:
    // endpoints (+-X, X^2/4), control (0, -X^2/4)
    os << "<path d=\"M " << num(f.px(-X)) << " " << num(f.py(X * X / 4.0)) << " Q "
       << num(f.px(0)) << " " << num(f.py(-X * X / 4.0)) << " " << num(f.px(X)) << " "
       << num(f.py(X * X / 4.0)) << "\" fill=\"none\" stroke=\"#bb3333\" stroke-width=\"1.5\"/>\n";

    draw_text(os, f, 0.0, -0.42, "E^2");
    draw_text(os, f, 0.0, X * 0.62, "N");
    draw_text(os, f, X * 0.68, -0.52, "EH+");
    draw_text(os, f, -X * 0.68, -0.52, "EH-");
    draw_text(os, f, 0.0, -X * 0.58, "H+H-");
    draw_text(os, f, X * 0.88, X * 0.55, "H+^2");
    draw_text(os, f, -X * 0.88, X * 0.55, "H-^2");
    draw_text(os, f, 2.35, 0.78, "G+1");
    draw_text(os, f, -2.35, 0.78, "G-1");
    draw_text(os, f, 1.15, 0.62, "Gd");

    if (trace_points && trace_points->size() >= 2) {
        os << "<polyline fill=\"none\" stroke=\"#117722\" stroke-width=\"2\" points=\"";
        for (const auto& pt : *trace_points) {
            if (pt.point.n != 2) throw ValidationError("broucke_svg: trace must be 2-dimensional");
            os << num(f.px(pt.point.s[0])) << "," << num(f.py(pt.point.s[1])) << " ";
        }
        os << "\"/>\n";

        if (events) {
            auto interp = [&](double t) -> std::array<double, 2> {
                const auto& pts = *trace_points;
                for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                    if (t >= pts[i].t && t <= pts[i + 1].t) {
                        const double w = (t - pts[i].t) / (pts[i + 1].t - pts[i].t);
                        return {(1 - w) * pts[i].point.s[0] + w * pts[i + 1].point.s[0],
                                (1 - w) * pts[i].point.s[1] + w * pts[i + 1].point.s[1]};
                    }
                return {pts.back().point.s[0], pts.back().point.s[1]};
            };
            for (const auto& event : *events) {
                if (event.kind != EventKind::eigenvalue_pm1_crossing &&
                    event.kind != EventKind::kfold_crossing)
                    continue;
                const auto xy = interp(0.5 * (event.t_lo + event.t_hi));
                os << "<circle cx=\"" << num(f.px(xy[0])) << "\" cy=\"" << num(f.py(xy[1]))
                   << "\" r=\"4\" fill=\"#dd8800\" stroke=\"#663300\"/>\n";
            }
        }
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace gitseq
