#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

// Minimal static SVG line chart: axes, ticks, one polyline per labeled
// series, legend. No external plotting dependency.

namespace morsent::svg {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string fmt_tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace detail

inline void write_chart(const std::string& path, const std::string& title,
                        const std::string& x_label, const std::string& y_label,
                        const std::vector<Series>& series) {
    constexpr double width = 840.0, height = 520.0;
    constexpr double ml = 70.0, mr = 170.0, mt = 40.0, mb = 55.0;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (!(x_min < x_max)) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (!(y_min < y_max)) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto py = [&](double y) {
        return mt + (y_max - y) / (y_max - y_min) * plot_h;
    };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    constexpr int palette_size = 6;

    std::ofstream out(path, std::ios::binary);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << detail::fmt(ml + plot_w / 2) << "\" y=\"24\" "
        << "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
        << title << "</text>\n";

    // frame
    out << "<rect x=\"" << detail::fmt(ml) << "\" y=\"" << detail::fmt(mt)
        << "\" width=\"" << detail::fmt(plot_w) << "\" height=\"" << detail::fmt(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double tx = x_min + (x_max - x_min) * i / ticks;
        const double gx = px(tx);
        out << "<line x1=\"" << detail::fmt(gx) << "\" y1=\"" << detail::fmt(mt + plot_h)
            << "\" x2=\"" << detail::fmt(gx) << "\" y2=\""
            << detail::fmt(mt + plot_h + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << detail::fmt(gx) << "\" y=\""
            << detail::fmt(mt + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::fmt_tick(tx) << "</text>\n";

        const double ty = y_min + (y_max - y_min) * i / ticks;
        const double gy = py(ty);
        out << "<line x1=\"" << detail::fmt(ml - 5) << "\" y1=\"" << detail::fmt(gy)
            << "\" x2=\"" << detail::fmt(ml) << "\" y2=\"" << detail::fmt(gy)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << detail::fmt(ml - 9) << "\" y=\"" << detail::fmt(gy + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::fmt_tick(ty) << "</text>\n";
    }

    out << "<text x=\"" << detail::fmt(ml + plot_w / 2) << "\" y=\""
        << detail::fmt(height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << detail::fmt(mt + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << detail::fmt(mt + plot_h / 2) << ")\">"
        << y_label << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = palette[s % palette_size];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[s].points)
            out << detail::fmt(px(x)) << "," << detail::fmt(py(y)) << " ";
        out << "\"/>\n";

        const double ly = mt + 18.0 + 22.0 * static_cast<double>(s);
        out << "<line x1=\"" << detail::fmt(width - mr + 14) << "\" y1=\""
            << detail::fmt(ly) << "\" x2=\"" << detail::fmt(width - mr + 44)
            << "\" y2=\"" << detail::fmt(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << detail::fmt(width - mr + 50) << "\" y=\""
            << detail::fmt(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].label
            << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace morsent::svg
