#pragma once

#include <string>
#include <vector>

namespace ardlkit {

/// Minimal self-contained SVG charts: lines, shaded bands and scatters with
/// axes, ticks and a legend. No timestamp is written unless `stamp` is set,
/// so identical inputs give byte-identical files.
struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
};

struct SvgBand {
    std::string label;
    std::vector<double> x;
    std::vector<double> lo;
    std::vector<double> hi;
    std::string color = "#1f77b4";
    double opacity = 0.2;
};

struct SvgPlot {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<SvgBand> bands;
    std::vector<SvgSeries> lines;
    std::vector<SvgSeries> scatters;
    int width = 760;
    int height = 440;
    bool stamp = false;
    std::string stamp_text;

    void write(const std::string& path) const;
    std::string render() const;
};

/// Cycling palette used by the report plots.
const std::string& svg_palette(std::size_t i);

}  // namespace ardlkit
