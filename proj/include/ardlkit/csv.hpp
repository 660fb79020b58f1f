#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ardlkit/dataset.hpp"

namespace ardlkit {

/// Column-to-series mapping for load_csv. Empty means "load every column
/// after `year` under its header name".
struct CsvSchema {
    std::vector<std::pair<std::string, std::string>> columns;  // header -> series name
};

/// Loads an annual panel from CSV. Layout: header row, first column `year`
/// (integer), one series per remaining column, empty cell = missing. Rows may
/// arrive unordered and are sorted by year; a duplicated or skipped year is
/// an integrity error. Numeric cells use a decimal point and optional
/// scientific notation; locale separators are rejected.
///
/// `require_positive`: series listed here must be strictly positive (they
/// will be log-transformed downstream). By default a non-positive value is
/// rejected; with `truncate_to_positive` the sample is instead truncated to
/// start at the first year from which the series stays strictly positive.
Dataset load_csv(const std::string& path, const CsvSchema& schema = {},
                 const std::vector<std::string>& require_positive = {},
                 bool truncate_to_positive = false);

/// Writes the dataset in the exact format load_csv reads. Values are printed
/// with shortest round-trip precision, so finite decimals survive a
/// write/load cycle bit-for-bit.
void write_csv(const Dataset& d, const std::string& path);

/// Shortest round-trip decimal rendering of a double (std::to_chars).
std::string format_double(double v);

/// Strict double parser: decimal point, optional sign/exponent, nothing else.
/// Returns false on any violation (including non-finite results).
bool parse_double(const std::string& text, double& out);

}  // namespace ardlkit
