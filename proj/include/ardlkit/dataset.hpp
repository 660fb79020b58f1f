#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ardlkit/timeseries.hpp"

namespace ardlkit {

/// Kind of a declared variable transform in a pipeline. natural-log requires
/// strictly positive inputs; difference and lag(k) shorten the usable sample.
struct Transform {
    enum class Kind { NaturalLog, Difference, Lag };
    Kind kind = Kind::NaturalLog;
    std::string series;
    int order = 1;  // only used for Lag
};

/// An aligned panel of annual series. Construction does not force alignment;
/// call align() to trim to the common fully observed span. Immutable after
/// construction: all transforms return new values.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<TimeSeries> series);

    bool has(const std::string& name) const;
    const TimeSeries& get(const std::string& name) const;
    const std::vector<TimeSeries>& series() const { return series_; }
    std::vector<std::string> names() const;
    std::size_t size() const { return series_.size(); }

    /// Adds a series; duplicate names raise DataError.
    Dataset with(TimeSeries s) const;

    /// Common [start, end] over the (possibly unaligned) series.
    std::pair<int, int> span() const;

private:
    std::vector<TimeSeries> series_;
};

/// Trims every series to the maximal span over which all of them are fully
/// observed. Missing interior values are never imputed: an observation gap
/// inside the common span raises DataError, and disjoint series raise a
/// no-common-sample DataError.
Dataset align(const Dataset& d);

/// Applies one transform, returning a new dataset containing the transformed
/// series alongside the originals.
Dataset apply_transform(const Dataset& d, const Transform& t);

}  // namespace ardlkit
