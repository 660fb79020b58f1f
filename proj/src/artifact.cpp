#include "ardlkit/artifact.hpp"

#include <cstdint>
#include <fstream>

#include "ardlkit/errors.hpp"

namespace ardlkit {

namespace {

nlohmann::json vec_to_json(const Eigen::VectorXd& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

nlohmann::json mat_to_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

Eigen::VectorXd vec_from_json(const nlohmann::json& a) {
    Eigen::VectorXd v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
    return v;
}

Eigen::MatrixXd mat_from_json(const nlohmann::json& rows) {
    if (rows.empty()) return {};
    Eigen::MatrixXd m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r][c].get<double>();
    return m;
}

}  // namespace

std::string content_hash(const nlohmann::json& payload) {
    const std::string text = payload.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        h ^= static_cast<std::uint64_t>(ch);
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

nlohmann::json ecm_fit_to_json(const ArdlEcmFit& fit) {
    nlohmann::json payload;
    payload["spec"] = {{"dependent", fit.spec.dependent},
                       {"regressors", fit.spec.regressors},
                       {"p", fit.spec.p},
                       {"q", fit.spec.q},
                       {"trend", fit.spec.trend}};
    payload["names"] = fit.ols.names;
    payload["beta"] = vec_to_json(fit.ols.beta);
    payload["cov"] = mat_to_json(fit.ols.cov);
    payload["residuals"] = vec_to_json(fit.ols.residuals);
    payload["fitted"] = vec_to_json(fit.ols.fitted);
    payload["sigma2"] = fit.ols.sigma2;
    payload["ssr"] = fit.ols.ssr;
    payload["r2"] = fit.ols.r2;
    payload["nobs"] = fit.ols.nobs;
    payload["dof"] = fit.ols.dof;
    payload["X"] = mat_to_json(fit.ols.X);
    payload["y"] = vec_to_json(fit.ols.y);
    payload["level_names"] = fit.level_names;
    payload["short_run_names"] = fit.short_run_names;
    payload["sample"] = {{"start_year", fit.sample_start_year},
                         {"end_year", fit.sample_end_year}};

    nlohmann::json doc;
    doc["format"] = "ardlkit-fit";
    doc["version"] = kFitArtifactVersion;
    doc["payload"] = payload;
    doc["hash"] = content_hash(payload);
    return doc;
}

ArdlEcmFit ecm_fit_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || doc.value("format", "") != "ardlkit-fit")
        throw DataError("not an ardlkit fit artifact");
    if (doc.value("version", -1) != kFitArtifactVersion)
        throw DataError("unsupported fit artifact version");
    if (!doc.contains("payload") || !doc.contains("hash"))
        throw DataError("fit artifact missing payload or hash");
    const nlohmann::json& payload = doc["payload"];
    if (content_hash(payload) != doc["hash"].get<std::string>())
        throw DataError("fit artifact hash mismatch: file corrupted or edited");

    ArdlEcmFit fit;
    fit.spec.dependent = payload["spec"]["dependent"].get<std::string>();
    fit.spec.regressors = payload["spec"]["regressors"].get<std::vector<std::string>>();
    fit.spec.p = payload["spec"]["p"].get<int>();
    fit.spec.q = payload["spec"]["q"].get<std::vector<int>>();
    fit.spec.trend = payload["spec"]["trend"].get<bool>();
    fit.ols.names = payload["names"].get<std::vector<std::string>>();
    fit.ols.beta = vec_from_json(payload["beta"]);
    fit.ols.cov = mat_from_json(payload["cov"]);
    fit.ols.residuals = vec_from_json(payload["residuals"]);
    fit.ols.fitted = vec_from_json(payload["fitted"]);
    fit.ols.sigma2 = payload["sigma2"].get<double>();
    fit.ols.ssr = payload["ssr"].get<double>();
    fit.ols.r2 = payload["r2"].get<double>();
    fit.ols.nobs = payload["nobs"].get<int>();
    fit.ols.dof = payload["dof"].get<int>();
    fit.ols.X = mat_from_json(payload["X"]);
    fit.ols.y = vec_from_json(payload["y"]);
    fit.level_names = payload["level_names"].get<std::vector<std::string>>();
    fit.short_run_names = payload["short_run_names"].get<std::vector<std::string>>();
    fit.sample_start_year = payload["sample"]["start_year"].get<int>();
    fit.sample_end_year = payload["sample"]["end_year"].get<int>();
    finalize_ecm_fit(fit);
    return fit;
}

void save_fit(const ArdlEcmFit& fit, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write fit artifact '" + path + "'");
    out << ecm_fit_to_json(fit).dump(2) << "\n";
}

ArdlEcmFit load_fit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open fit artifact '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("malformed fit artifact '" + path + "': " + e.what());
    }
    return ecm_fit_from_json(doc);
}

}  // namespace ardlkit
