#include "ardlkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ardlkit/errors.hpp"

namespace ardlkit {

const std::string& svg_palette(std::size_t i) {
    static const std::vector<std::string> colors = {"#1f77b4", "#d62728", "#2ca02c",
                                                    "#9467bd", "#ff7f0e", "#8c564b"};
    return colors[i % colors.size()];
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void update(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi == lo) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double m = 0.05 * (hi - lo);
        lo -= m;
        hi += m;
    }
};

// Round step to 1/2/5 x 10^k for readable ticks.
std::vector<double> ticks(double lo, double hi, int target = 6) {
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw) {
            step = mag * mult;
            break;
        }
    }
    std::vector<double> out;
    double t = std::ceil(lo / step) * step;
    for (; t <= hi + 1e-12 * step; t += step) out.push_back(t == 0.0 ? 0.0 : t);
    return out;
}

}  // namespace

std::string SvgPlot::render() const {
    const double ml = 70, mr = 20, mt = title.empty() ? 16 : 36, mb = 46;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    Range rx, ry;
    auto scan = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
        for (double v : xs) rx.update(v);
        for (double v : ys) ry.update(v);
    };
    for (const auto& b : bands) {
        scan(b.x, b.lo);
        scan(b.x, b.hi);
    }
    for (const auto& s : lines) scan(s.x, s.y);
    for (const auto& s : scatters) scan(s.x, s.y);
    rx.pad();
    ry.pad();

    auto px = [&](double v) { return ml + (v - rx.lo) / (rx.hi - rx.lo) * pw; };
    auto py = [&](double v) { return mt + ph - (v - ry.lo) / (ry.hi - ry.lo) * ph; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    if (stamp && !stamp_text.empty()) s << "<!-- generated: " << stamp_text << " -->\n";
    s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    if (!title.empty())
        s << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
          << "font-family=\"sans-serif\" font-size=\"14\" font-weight=\"bold\">" << title
          << "</text>\n";

    // grid + ticks
    s << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#333\">\n";
    for (double t : ticks(rx.lo, rx.hi)) {
        s << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(mt) << "\" x2=\"" << num(px(t))
          << "\" y2=\"" << num(mt + ph) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << num(px(t)) << "\" y=\"" << num(mt + ph + 14)
          << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(ry.lo, ry.hi)) {
        s << "<line x1=\"" << num(ml) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(ml + pw)
          << "\" y2=\"" << num(py(t)) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << num(ml - 6) << "\" y=\"" << num(py(t) + 3)
          << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    s << "</g>\n";

    for (const auto& b : bands) {
        if (b.x.empty()) continue;
        s << "<polygon fill=\"" << b.color << "\" fill-opacity=\"" << b.opacity
          << "\" stroke=\"none\" points=\"";
        for (std::size_t i = 0; i < b.x.size(); ++i)
            s << num(px(b.x[i])) << "," << num(py(b.hi[i])) << " ";
        for (std::size_t i = b.x.size(); i-- > 0;)
            s << num(px(b.x[i])) << "," << num(py(b.lo[i])) << " ";
        s << "\"/>\n";
    }
    for (const auto& line : lines) {
        if (line.x.empty()) continue;
        s << "<polyline fill=\"none\" stroke=\"" << line.color
          << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < line.x.size(); ++i)
            s << num(px(line.x[i])) << "," << num(py(line.y[i])) << " ";
        s << "\"/>\n";
    }
    for (const auto& sc : scatters) {
        for (std::size_t i = 0; i < sc.x.size(); ++i)
            s << "<circle cx=\"" << num(px(sc.x[i])) << "\" cy=\"" << num(py(sc.y[i]))
              << "\" r=\"2.5\" fill=\"" << sc.color << "\" fill-opacity=\"0.8\"/>\n";
    }

    // axes on top of the data
    s << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt + ph) << "\" x2=\"" << num(ml + pw)
      << "\" y2=\"" << num(mt + ph) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\"" << num(ml) << "\" y2=\""
      << num(mt + ph) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (!xlabel.empty())
        s << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(height - 8)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << xlabel
          << "</text>\n";
    if (!ylabel.empty())
        s << "<text x=\"14\" y=\"" << num(mt + ph / 2)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
          << "transform=\"rotate(-90 14 " << num(mt + ph / 2) << ")\">" << ylabel << "</text>\n";

    // legend
    double ly = mt + 10;
    auto legend_entry = [&](const std::string& label, const std::string& color) {
        if (label.empty()) return;
        s << "<rect x=\"" << num(ml + pw - 150) << "\" y=\"" << num(ly - 8)
          << "\" width=\"12\" height=\"4\" fill=\"" << color << "\"/>\n";
        s << "<text x=\"" << num(ml + pw - 134) << "\" y=\"" << num(ly - 3)
          << "\" font-family=\"sans-serif\" font-size=\"10\">" << label << "</text>\n";
        ly += 14;
    };
    for (const auto& line : lines) legend_entry(line.label, line.color);
    for (const auto& sc : scatters) legend_entry(sc.label, sc.color);
    for (const auto& b : bands) legend_entry(b.label, b.color);

    s << "</svg>\n";
    return s.str();
}

void SvgPlot::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write SVG file '" + path + "'");
    out << render();
}

}  // namespace ardlkit
