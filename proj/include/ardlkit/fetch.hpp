#pragma once

#include <string>

namespace ardlkit {

/// Best-effort downloaders for public indicator series, converted into the
/// dataset CSV layout (year,<name>) and cached on disk. A warm cache never
/// touches the network; nothing else in the library depends on this module.
struct FetchSpec {
    std::string source;   ///< worldbank | eia | oecd
    std::string code;     ///< provider indicator id
    std::string country = "CHN";
    std::string series_name;       ///< column name in the cached CSV; defaults to code
    std::string base_url;          ///< override for tests (replay server)
    std::string api_key;           ///< EIA only; read from EIA_API_KEY when empty
};

/// Returns the cached CSV path, downloading and converting on a cache miss.
/// Cache writes are atomic (write to temp, then rename). Throws DataError on
/// HTTP failure with a cold cache and on provider payload schema drift.
std::string fetch_series(const FetchSpec& spec, const std::string& cache_dir);

/// Conversion helpers, exposed for the replay-fixture tests.
std::string worldbank_json_to_csv(const std::string& payload, const std::string& series_name);
std::string eia_json_to_csv(const std::string& payload, const std::string& series_name);
std::string oecd_sdmx_csv_to_csv(const std::string& payload, const std::string& series_name);

}  // namespace ardlkit
