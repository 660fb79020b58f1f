#include "ardlkit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ardlkit/errors.hpp"

namespace ardlkit {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;  // from_chars does not accept a leading '+'
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last) return false;
    return std::isfinite(out);
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return {};
    return s.substr(a, b - a + 1);
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvSchema& schema,
                 const std::vector<std::string>& require_positive, bool truncate_to_positive) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open CSV file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty CSV file '" + path + "'");
    std::vector<std::string> header = split_row(line);
    for (auto& h : header) h = trim(h);
    if (header.empty() || header.front() != "year")
        throw DataError("parse error " + path + " row 1: first column must be 'year'");

    // Resolve which columns to read and what to call them.
    std::vector<std::pair<std::size_t, std::string>> wanted;  // column index -> series name
    if (schema.columns.empty()) {
        for (std::size_t c = 1; c < header.size(); ++c)
            if (!header[c].empty()) wanted.emplace_back(c, header[c]);
    } else {
        for (const auto& [col, name] : schema.columns) {
            auto it = std::find(header.begin(), header.end(), col);
            if (it == header.end())
                throw DataError("schema names column '" + col + "' absent from '" + path + "'");
            wanted.emplace_back(static_cast<std::size_t>(it - header.begin()), name);
        }
    }
    if (wanted.empty()) throw DataError("no data series in '" + path + "'");

    std::map<int, std::vector<std::optional<double>>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_row(line);
        const std::string ytext = trim(cells.empty() ? "" : cells[0]);
        int year = 0;
        auto yres = std::from_chars(ytext.data(), ytext.data() + ytext.size(), year);
        if (yres.ec != std::errc() || yres.ptr != ytext.data() + ytext.size())
            throw DataError("parse error " + path + " row " + std::to_string(lineno) +
                            " col 1: bad year '" + ytext + "'");
        if (rows.count(year))
            throw DataError("integrity error: duplicate year " + std::to_string(year) + " in '" +
                            path + "'");
        if (cells.size() > header.size())
            throw DataError("parse error " + path + " row " + std::to_string(lineno) + " col " +
                            std::to_string(header.size() + 1) + ": more cells than header columns");
        std::vector<std::optional<double>> vals(wanted.size());
        for (std::size_t w = 0; w < wanted.size(); ++w) {
            const std::size_t c = wanted[w].first;
            const std::string cell = c < cells.size() ? trim(cells[c]) : std::string();
            // Empty and non-numeric cells both become explicit missing
            // markers; parse_double also refuses locale separators and
            // non-finite spellings.
            double v = 0.0;
            if (!cell.empty() && parse_double(cell, v)) vals[w] = v;
        }
        rows.emplace(year, std::move(vals));
    }
    if (rows.empty()) throw DataError("no data rows in '" + path + "'");

    // std::map iterates in ascending year order; enforce the annual step.
    int prev = rows.begin()->first - 1;
    for (const auto& [year, _] : rows) {
        if (year != prev + 1)
            throw DataError("integrity error: gap at " + std::to_string(prev + 1) + " in '" +
                            path + "'");
        prev = year;
    }

    std::vector<TimeSeries> series;
    series.reserve(wanted.size());
    for (std::size_t w = 0; w < wanted.size(); ++w) {
        TimeSeries s;
        s.name = wanted[w].second;
        for (const auto& [year, vals] : rows) {
            s.years.push_back(year);
            s.values.push_back(vals[w]);
        }
        const bool must_be_positive =
            std::find(require_positive.begin(), require_positive.end(), s.name) !=
            require_positive.end();
        if (must_be_positive) {
            std::size_t first_ok = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s.values[i].has_value() && *s.values[i] <= 0.0) first_ok = i + 1;
            }
            if (first_ok > 0) {
                if (!truncate_to_positive)
                    throw DataError("series '" + s.name + "' has a non-positive value at " +
                                    std::to_string(s.years[first_ok - 1]) +
                                    "; pass truncate_to_positive to drop the early sample");
                if (first_ok >= s.size())
                    throw DataError("series '" + s.name + "' has no strictly positive tail");
                s = s.window(s.years[first_ok], s.years.back());
            }
        }
        s.validate();
        series.push_back(std::move(s));
    }
    return Dataset(std::move(series));
}

void write_csv(const Dataset& d, const std::string& path) {
    if (d.size() == 0) throw DataError("refusing to write a dataset with no series");
    std::ofstream out(path);
    if (!out) throw DataError("cannot write CSV file '" + path + "'");

    int start = d.series().front().start_year();
    int end = d.series().front().end_year();
    for (const auto& s : d.series()) {
        start = std::min(start, s.start_year());
        end = std::max(end, s.end_year());
    }
    out << "year";
    for (const auto& s : d.series()) out << "," << s.name;
    out << "\n";
    for (int y = start; y <= end; ++y) {
        out << y;
        for (const auto& s : d.series()) {
            out << ",";
            auto v = s.at_year(y);
            if (v.has_value()) out << format_double(*v);
        }
        out << "\n";
    }
}

}  // namespace ardlkit
