#include "ardlkit/fetch.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "ardlkit/csv.hpp"
#include "ardlkit/errors.hpp"

namespace ardlkit {

namespace {

namespace fs = std::filesystem;

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
    return out;
}

std::string excerpt(const std::string& payload) {
    return payload.substr(0, std::min<std::size_t>(payload.size(), 160));
}

// Serialize a (possibly gappy) year -> value map as a dense year column with
// empty cells for the missing years, the exact layout load_csv expects.
std::string map_to_csv(const std::map<int, double>& obs, const std::string& name) {
    if (obs.empty()) throw DataError("conversion error: provider returned no observations");
    std::ostringstream out;
    out << "year," << name << "\n";
    const int lo = obs.begin()->first;
    const int hi = obs.rbegin()->first;
    for (int y = lo; y <= hi; ++y) {
        out << y << ",";
        auto it = obs.find(y);
        if (it != obs.end()) out << format_double(it->second);
        out << "\n";
    }
    return out.str();
}

nlohmann::json parse_json(const std::string& payload, const std::string& source) {
    try {
        return nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception&) {
        throw DataError("conversion error (" + source + "): payload is not JSON: " +
                        excerpt(payload));
    }
}

}  // namespace

std::string worldbank_json_to_csv(const std::string& payload, const std::string& series_name) {
    const nlohmann::json doc = parse_json(payload, "worldbank");
    if (!doc.is_array() || doc.size() < 2 || !doc[1].is_array()) {
        if (doc.is_array() && doc.size() == 1 && doc[0].contains("message"))
            throw DataError("worldbank provider error: " + doc[0]["message"].dump());
        throw DataError("conversion error (worldbank): unexpected payload shape: " +
                        excerpt(payload));
    }
    std::map<int, double> obs;
    for (const auto& item : doc[1]) {
        if (!item.contains("date") || !item.contains("value"))
            throw DataError("conversion error (worldbank): observation missing date/value: " +
                            item.dump());
        if (item["value"].is_null()) continue;
        obs[std::stoi(item["date"].get<std::string>())] = item["value"].get<double>();
    }
    return map_to_csv(obs, series_name);
}

std::string eia_json_to_csv(const std::string& payload, const std::string& series_name) {
    const nlohmann::json doc = parse_json(payload, "eia");
    if (!doc.contains("response") || !doc["response"].contains("data")) {
        if (doc.contains("error"))
            throw DataError("eia provider error: " + doc["error"].dump());
        throw DataError("conversion error (eia): unexpected payload shape: " + excerpt(payload));
    }
    std::map<int, double> obs;
    for (const auto& item : doc["response"]["data"]) {
        if (!item.contains("period") || !item.contains("value"))
            throw DataError("conversion error (eia): observation missing period/value: " +
                            item.dump());
        if (item["value"].is_null()) continue;
        const int year = item["period"].is_string()
                             ? std::stoi(item["period"].get<std::string>())
                             : item["period"].get<int>();
        obs[year] = item["value"].get<double>();
    }
    return map_to_csv(obs, series_name);
}

std::string oecd_sdmx_csv_to_csv(const std::string& payload, const std::string& series_name) {
    std::istringstream in(payload);
    std::string line;
    if (!std::getline(in, line))
        throw DataError("conversion error (oecd): empty payload");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    int time_col = -1, value_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "TIME_PERIOD") time_col = static_cast<int>(i);
        if (header[i] == "OBS_VALUE") value_col = static_cast<int>(i);
    }
    if (time_col < 0 || value_col < 0)
        throw DataError("conversion error (oecd): TIME_PERIOD/OBS_VALUE columns absent: " +
                        excerpt(payload));
    std::map<int, double> obs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (static_cast<int>(cells.size()) <= std::max(time_col, value_col)) continue;
        const std::string& t = cells[static_cast<std::size_t>(time_col)];
        const std::string& v = cells[static_cast<std::size_t>(value_col)];
        if (v.empty()) continue;
        double value = 0.0;
        if (!parse_double(v, value))
            throw DataError("conversion error (oecd): bad OBS_VALUE '" + v + "'");
        obs[std::stoi(t)] = value;
    }
    return map_to_csv(obs, series_name);
}

std::string fetch_series(const FetchSpec& spec, const std::string& cache_dir) {
    if (spec.source != "worldbank" && spec.source != "eia" && spec.source != "oecd")
        throw ValidationError("unknown fetch source '" + spec.source +
                              "' (worldbank|eia|oecd)");
    const std::string name = spec.series_name.empty() ? spec.code : spec.series_name;

    fs::create_directories(cache_dir);
    const fs::path cached = fs::path(cache_dir) / (spec.source + "_" + sanitize(spec.code) + "_" +
                                                   sanitize(spec.country) + ".csv");
    if (fs::exists(cached)) return cached.string();

    std::string base = spec.base_url;
    std::string target;
    if (spec.source == "worldbank") {
        if (base.empty()) base = "https://api.worldbank.org";
        target = "/v2/country/" + spec.country + "/indicator/" + spec.code +
                 "?format=json&per_page=20000";
    } else if (spec.source == "eia") {
        if (base.empty()) base = "https://api.eia.gov";
        std::string key = spec.api_key;
        if (key.empty()) {
            const char* env = std::getenv("EIA_API_KEY");
            key = env ? env : "";
        }
        target = "/v2/seriesid/" + spec.code + (key.empty() ? "" : "?api_key=" + key);
    } else {
        if (base.empty()) base = "https://sdmx.oecd.org";
        target = "/public/rest/data/" + spec.code + "?format=csvfile";
    }

    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(target);
    if (!res)
        throw DataError("fetch error (" + spec.source + "): no response from " + base +
                        " and cache is cold");
    if (res->status != 200)
        throw DataError("fetch error (" + spec.source + "): HTTP " + std::to_string(res->status) +
                        " for " + target + ": " + excerpt(res->body));

    std::string csv;
    if (spec.source == "worldbank") csv = worldbank_json_to_csv(res->body, name);
    else if (spec.source == "eia") csv = eia_json_to_csv(res->body, name);
    else csv = oecd_sdmx_csv_to_csv(res->body, name);

    const fs::path tmp = cached.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw DataError("cannot write cache file '" + tmp.string() + "'");
        out << csv;
    }
    fs::rename(tmp, cached);
    return cached.string();
}

}  // namespace ardlkit
