#include "ardlkit/dataset.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ardlkit/errors.hpp"

namespace ardlkit {

Dataset::Dataset(std::vector<TimeSeries> series) : series_(std::move(series)) {
    std::set<std::string> seen;
    for (const auto& s : series_) {
        s.validate();
        if (!seen.insert(s.name).second)
            throw DataError("duplicate series name '" + s.name + "'");
    }
}

bool Dataset::has(const std::string& name) const {
    return std::any_of(series_.begin(), series_.end(),
                       [&](const TimeSeries& s) { return s.name == name; });
}

const TimeSeries& Dataset::get(const std::string& name) const {
    for (const auto& s : series_)
        if (s.name == name) return s;
    std::string available;
    for (const auto& s : series_) available += (available.empty() ? "" : ", ") + s.name;
    throw DataError("no series named '" + name + "' (available: " + available + ")");
}

std::vector<std::string> Dataset::names() const {
    std::vector<std::string> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back(s.name);
    return out;
}

Dataset Dataset::with(TimeSeries s) const {
    if (has(s.name)) throw DataError("duplicate series name '" + s.name + "'");
    std::vector<TimeSeries> all = series_;
    all.push_back(std::move(s));
    return Dataset(std::move(all));
}

std::pair<int, int> Dataset::span() const {
    if (series_.empty()) throw DataError("dataset has no series");
    int start = series_.front().start_year();
    int end = series_.front().end_year();
    for (const auto& s : series_) {
        start = std::max(start, s.start_year());
        end = std::min(end, s.end_year());
    }
    return {start, end};
}

namespace {

// First and last year with an actual observation (edges may be missing after
// transforms that pad, or in ragged source files).
std::pair<int, int> observed_range(const TimeSeries& s) {
    int first = 0, last = 0;
    bool any = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s.values[i].has_value()) continue;
        if (!any) first = s.years[i];
        last = s.years[i];
        any = true;
    }
    if (!any) throw DataError("series '" + s.name + "' has no observations");
    return {first, last};
}

}  // namespace

Dataset align(const Dataset& d) {
    if (d.size() == 0) throw DataError("cannot align an empty dataset");
    int start = std::numeric_limits<int>::min();
    int end = std::numeric_limits<int>::max();
    for (const auto& s : d.series()) {
        auto [a, b] = observed_range(s);
        start = std::max(start, a);
        end = std::min(end, b);
    }
    if (start > end) {
        std::string detail;
        for (const auto& s : d.series()) {
            auto [a, b] = observed_range(s);
            detail += " " + s.name + "[" + std::to_string(a) + "-" + std::to_string(b) + "]";
        }
        throw DataError("no common sample across series:" + detail);
    }
    std::vector<TimeSeries> trimmed;
    trimmed.reserve(d.size());
    for (const auto& s : d.series()) {
        TimeSeries w = s.window(start, end);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w.values[i].has_value())
                throw DataError("missing interior value: series '" + s.name + "' at " +
                                std::to_string(w.years[i]) + " inside common span [" +
                                std::to_string(start) + "," + std::to_string(end) + "]");
        }
        trimmed.push_back(std::move(w));
    }
    return Dataset(std::move(trimmed));
}

Dataset apply_transform(const Dataset& d, const Transform& t) {
    const TimeSeries& src = d.get(t.series);
    switch (t.kind) {
        case Transform::Kind::NaturalLog:
            return d.with(log_transform(src));
        case Transform::Kind::Difference:
            return d.with(difference(src));
        case Transform::Kind::Lag:
            return d.with(lag(src, t.order));
    }
    throw ValidationError("unknown transform kind");
}

}  // namespace ardlkit
