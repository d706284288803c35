#include "cargo_route/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace cargo_route {

namespace {

constexpr std::array<const char*, 12> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a"};

const char* colour(int i) {
    return kPalette[static_cast<std::size_t>(i) % kPalette.size()];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_routes_svg(const Instance& instance, const Solution& solution) {
    // Fit the drawing to the data, always including the [0,100] plane.
    double x0 = 0.0, y0 = 0.0, x1 = 100.0, y1 = 100.0;
    auto grow = [&](const Point& p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    };
    grow(instance.depot);
    for (const auto& c : instance.clients) {
        grow(c.location);
    }
    const double scale = 5.0;
    const double pad = 20.0;
    auto sx = [&](double x) { return pad + (x - x0) * scale; };
    auto sy = [&](double y) { return pad + (y1 - y) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * pad + (x1 - x0) * scale)
        << "\" height=\"" << num(2 * pad + (y1 - y0) * scale) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t v = 0; v < solution.vehicles.size(); ++v) {
        const auto& nodes = solution.vehicles[v].nodes;
        if (nodes.empty()) {
            continue;
        }
        out << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << colour(static_cast<int>(v))
            << "\" points=\"";
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const Point& p = instance.location(nodes[i]);
            out << (i ? " " : "") << num(sx(p.x)) << ',' << num(sy(p.y));
        }
        out << "\"/>\n";
    }
    for (const auto& c : instance.clients) {
        out << "<circle r=\"4\" fill=\"black\" cx=\"" << num(sx(c.location.x)) << "\" cy=\""
            << num(sy(c.location.y)) << "\"/>\n";
        out << "<text font-size=\"10\" x=\"" << num(sx(c.location.x) + 5) << "\" y=\""
            << num(sy(c.location.y) - 5) << "\">" << c.id << "</text>\n";
    }
    out << "<rect width=\"10\" height=\"10\" fill=\"red\" x=\"" << num(sx(instance.depot.x) - 5)
        << "\" y=\"" << num(sy(instance.depot.y) - 5) << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_packing_svg(const Instance& instance, const Solution& solution) {
    const auto& veh = instance.vehicle;
    const int cell = std::max(4, 240 / std::max(veh.length, veh.width));
    const int panel_w = veh.length * cell;
    const int panel_h = veh.width * cell;
    const int gap = 12;
    const int label = 16;

    std::vector<std::size_t> used;
    for (std::size_t v = 0; v < solution.vehicles.size(); ++v) {
        if (!solution.vehicles[v].items.empty()) {
            used.push_back(v);
        }
    }
    const int width = gap + veh.height * (panel_w + gap);
    const int height = gap + static_cast<int>(used.size()) * (panel_h + label + gap);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << std::max(height, gap) << "\">\n";
    out << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" "
           "stroke=\"black\" stroke-width=\"2\"/></pattern></defs>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t row = 0; row < used.size(); ++row) {
        const auto& route = solution.vehicles[used[row]];
        const int top = gap + static_cast<int>(row) * (panel_h + label + gap);
        out << "<text font-size=\"12\" x=\"" << gap << "\" y=\"" << top + 12 << "\">vehicle "
            << used[row] << "</text>\n";
        for (int h = 0; h < veh.height; ++h) {
            const int left = gap + h * (panel_w + gap);
            const int y = top + label;
            out << "<rect fill=\"none\" stroke=\"black\" x=\"" << left << "\" y=\"" << y
                << "\" width=\"" << panel_w << "\" height=\"" << panel_h << "\"/>\n";
            // Layer h shows every box whose vertical extent covers it; the
            // door (l = length) is on the right.
            for (const auto& item : route.items) {
                const auto& e = item.extents;
                const auto& p = item.placement;
                if (h < p.h || h >= p.h + e.height) {
                    continue;
                }
                const Package& pkg = instance.packages[static_cast<std::size_t>(item.package)];
                const int rx = left + p.l * cell;
                const int ry = y + p.w * cell;
                out << "<rect stroke=\"black\" fill=\"" << colour(pkg.client - 1) << "\" x=\"" << rx
                    << "\" y=\"" << ry << "\" width=\"" << e.length * cell << "\" height=\""
                    << e.width * cell << "\"/>\n";
                if (pkg.fragile) {
                    out << "<rect stroke=\"none\" fill=\"url(#hatch)\" x=\"" << rx << "\" y=\"" << ry
                        << "\" width=\"" << e.length * cell << "\" height=\"" << e.width * cell
                        << "\"/>\n";
                }
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace cargo_route
