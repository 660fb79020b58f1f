#include "ardlkit/timeseries.hpp"

#include <cmath>
#include <utility>

#include "ardlkit/errors.hpp"

namespace ardlkit {

TimeSeries::TimeSeries(std::string name_, std::vector<int> years_,
                       std::vector<std::optional<double>> values_)
    : name(std::move(name_)), years(std::move(years_)), values(std::move(values_)) {
    validate();
}

TimeSeries::TimeSeries(std::string name_, int start_year, std::vector<double> dense)
    : name(std::move(name_)) {
    years.reserve(dense.size());
    values.reserve(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        years.push_back(start_year + static_cast<int>(i));
        values.emplace_back(dense[i]);
    }
    validate();
}

int TimeSeries::start_year() const {
    if (years.empty()) throw DataError("series '" + name + "' is empty");
    return years.front();
}

int TimeSeries::end_year() const {
    if (years.empty()) throw DataError("series '" + name + "' is empty");
    return years.back();
}

bool TimeSeries::complete() const {
    for (const auto& v : values)
        if (!v.has_value()) return false;
    return true;
}

std::optional<double> TimeSeries::at_year(int year) const {
    if (years.empty() || year < years.front() || year > years.back()) return std::nullopt;
    return values[static_cast<std::size_t>(year - years.front())];
}

std::vector<double> TimeSeries::dense() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].has_value())
            throw DataError("series '" + name + "' has a missing observation at " +
                            std::to_string(years[i]));
        out.push_back(*values[i]);
    }
    return out;
}

TimeSeries TimeSeries::window(int from, int to) const {
    if (years.empty() || from < years.front() || to > years.back() || from > to)
        throw DataError("window [" + std::to_string(from) + "," + std::to_string(to) +
                        "] outside series '" + name + "'");
    const auto a = static_cast<std::size_t>(from - years.front());
    const auto b = static_cast<std::size_t>(to - years.front());
    TimeSeries out;
    out.name = name;
    out.years.assign(years.begin() + a, years.begin() + b + 1);
    out.values.assign(values.begin() + a, values.begin() + b + 1);
    return out;
}

void TimeSeries::validate() const {
    if (years.size() != values.size())
        throw DataError("series '" + name + "': years and values differ in length");
    for (std::size_t i = 1; i < years.size(); ++i) {
        if (years[i] != years[i - 1] + 1)
            throw DataError("series '" + name + "': years must be annual and consecutive, gap at " +
                            std::to_string(years[i - 1] + 1));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].has_value() && !std::isfinite(*values[i]))
            throw DataError("series '" + name + "': non-finite value at " +
                            std::to_string(years[i]));
    }
}

TimeSeries log_transform(const TimeSeries& s) {
    TimeSeries out;
    out.name = "log" + s.name;
    out.years = s.years;
    out.values.reserve(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (!s.values[i].has_value()) {
            out.values.emplace_back(std::nullopt);
            continue;
        }
        const double v = *s.values[i];
        if (v <= 0.0)
            throw DataError("log of non-positive value in series '" + s.name + "' at " +
                            std::to_string(s.years[i]));
        out.values.emplace_back(std::log(v));
    }
    return out;
}

TimeSeries difference(const TimeSeries& s) {
    if (s.size() < 2)
        throw DataError("series '" + s.name + "' too short to difference");
    const std::vector<double> x = s.dense();
    std::vector<double> d(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) d[i - 1] = x[i] - x[i - 1];
    return TimeSeries("d." + s.name, s.years[1], std::move(d));
}

TimeSeries lag(const TimeSeries& s, int k) {
    if (k < 1) throw ValidationError("lag order must be >= 1");
    if (static_cast<std::size_t>(k) >= s.size())
        throw DataError("insufficient sample: lag(" + std::to_string(k) + ") on series '" +
                        s.name + "' of length " + std::to_string(s.size()));
    const std::vector<double> x = s.dense();
    std::vector<double> v(x.begin(), x.end() - k);
    return TimeSeries(s.name + ".L" + std::to_string(k), s.years[static_cast<std::size_t>(k)],
                      std::move(v));
}

}  // namespace ardlkit
