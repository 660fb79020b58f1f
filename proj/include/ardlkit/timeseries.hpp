#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ardlkit {

/// One annual series. Years are strictly increasing with step 1; a missing
/// observation is an empty optional, never a sentinel value. All present
/// values are finite.
struct TimeSeries {
    std::string name;
    std::vector<int> years;
    std::vector<std::optional<double>> values;

    TimeSeries() = default;
    TimeSeries(std::string name_, std::vector<int> years_,
               std::vector<std::optional<double>> values_);

    /// Convenience constructor for a fully observed series.
    TimeSeries(std::string name_, int start_year, std::vector<double> dense);

    std::size_t size() const { return years.size(); }
    int start_year() const;
    int end_year() const;

    bool complete() const;

    /// Observation for a calendar year; empty optional when the year is
    /// missing or outside the series.
    std::optional<double> at_year(int year) const;

    /// All values as a dense vector. Throws DataError when any observation
    /// inside the series is missing.
    std::vector<double> dense() const;

    /// Sub-series restricted to [from, to] (inclusive). Throws DataError when
    /// the window is not fully inside the series.
    TimeSeries window(int from, int to) const;

    /// Checks the type invariants; throws DataError on violation.
    void validate() const;
};

/// Elementwise natural log. Requires strictly positive values; a non-positive
/// value raises DataError naming the offending year. The result is named
/// "log" + name, the form the estimation layer refers to (logCE, logNE, ...).
TimeSeries log_transform(const TimeSeries& s);

/// First difference: d_t = x_t - x_{t-1}. One head observation is lost.
TimeSeries difference(const TimeSeries& s);

/// Lag by k >= 1 periods: lag_t = x_{t-k}. The k head observations are lost,
/// so the result starts k years later. Result name is name + ".L<k>".
TimeSeries lag(const TimeSeries& s, int k);

}  // namespace ardlkit
