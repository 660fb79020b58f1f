#include "ardlkit/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "ardlkit/artifact.hpp"
#include "ardlkit/csv.hpp"
#include "ardlkit/errors.hpp"
#include "ardlkit/report.hpp"

namespace ardlkit {

namespace {

template <typename T>
bool read_field(const nlohmann::json& obj, const char* key, T& out, std::vector<std::string>& bad,
                const std::string& where) {
    if (!obj.contains(key)) return false;
    try {
        out = obj.at(key).get<T>();
        return true;
    } catch (const nlohmann::json::exception&) {
        bad.push_back(where + "." + key + ": wrong type");
        return false;
    }
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const nlohmann::json& doc) {
    std::vector<std::string> problems;
    PipelineConfig cfg;

    if (!doc.is_object()) throw ValidationError("config must be a JSON object");

    if (doc.contains("data") && doc["data"].is_object()) {
        read_field(doc["data"], "csv", cfg.csv_path, problems, "data");
        read_field(doc["data"], "truncate_to_positive", cfg.truncate_to_positive, problems,
                   "data");
    }
    if (cfg.csv_path.empty()) problems.push_back("data.csv: missing CSV path");

    if (doc.contains("variables") && doc["variables"].is_object()) {
        read_field(doc["variables"], "dependent", cfg.dependent, problems, "variables");
        read_field(doc["variables"], "regressors", cfg.regressors, problems, "variables");
        read_field(doc["variables"], "log", cfg.log_variables, problems, "variables");
    }
    if (cfg.dependent.empty()) problems.push_back("variables.dependent: missing");
    if (cfg.regressors.empty()) problems.push_back("variables.regressors: missing or empty");

    if (doc.contains("ardl") && doc["ardl"].is_object()) {
        read_field(doc["ardl"], "pmax", cfg.p_max, problems, "ardl");
        read_field(doc["ardl"], "qmax", cfg.q_max, problems, "ardl");
        std::string crit;
        if (read_field(doc["ardl"], "criterion", crit, problems, "ardl")) {
            try {
                cfg.criterion = criterion_from_string(crit);
            } catch (const ValidationError& e) {
                problems.push_back(std::string("ardl.criterion: ") + e.what());
            }
        }
    }
    if (cfg.p_max < 1) problems.push_back("ardl.pmax: must be >= 1");
    if (cfg.q_max < 0) problems.push_back("ardl.qmax: must be >= 0");

    if (doc.contains("simulate") && doc["simulate"].is_object()) {
        const auto& sim = doc["simulate"];
        read_field(sim, "target", cfg.shock_target, problems, "simulate");
        read_field(sim, "magnitude", cfg.shock_magnitude, problems, "simulate");
        read_field(sim, "at", cfg.shock_time, problems, "simulate");
        read_field(sim, "horizon", cfg.horizon, problems, "simulate");
        read_field(sim, "sims", cfg.n_sims, problems, "simulate");
        read_field(sim, "burn_in", cfg.burn_in, problems, "simulate");
        read_field(sim, "sustained", cfg.sustained, problems, "simulate");
    }
    if (cfg.shock_magnitude <= -1.0) problems.push_back("simulate.magnitude: must be > -1");
    if (!(cfg.shock_time > 0 && cfg.shock_time < cfg.horizon))
        problems.push_back("simulate.at: need 0 < at < horizon");
    if (cfg.n_sims < 1) problems.push_back("simulate.sims: must be >= 1");

    if (doc.contains("diagnostics") && doc["diagnostics"].is_object())
        read_field(doc["diagnostics"], "bg_lags", cfg.bg_lags, problems, "diagnostics");
    if (cfg.bg_lags < 1) problems.push_back("diagnostics.bg_lags: must be >= 1");

    if (doc.contains("krls") && doc["krls"].is_object()) {
        const auto& kr = doc["krls"];
        if (kr.contains("lambda") && !kr["lambda"].is_null()) {
            double v = 0;
            if (read_field(kr, "lambda", v, problems, "krls")) cfg.krls_lambda = v;
        }
        if (kr.contains("sigma2") && !kr["sigma2"].is_null()) {
            double v = 0;
            if (read_field(kr, "sigma2", v, problems, "krls")) cfg.krls_sigma2 = v;
        }
    }

    if (doc.contains("seed")) {
        std::uint64_t s = 0;
        if (read_field(doc, "seed", s, problems, "config")) {
            cfg.seed = s;
            cfg.seed_set = true;
        }
    } else {
        problems.push_back("seed: missing (a seed is mandatory for stochastic stages)");
    }

    read_field(doc, "output_dir", cfg.output_dir, problems, "config");
    read_field(doc, "stamp_plots", cfg.stamp_plots, problems, "config");

    if (!problems.empty()) {
        std::string msg = "config validation failed:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ValidationError(msg);
    }
    return cfg;
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed config '" + path + "': " + e.what());
    }
    return from_json(doc);
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    namespace fs = std::filesystem;
    if (!cfg.seed_set) throw ValidationError("pipeline requires an explicit seed");

    // ---- data -----------------------------------------------------------
    std::vector<std::string> all_vars = {cfg.dependent};
    all_vars.insert(all_vars.end(), cfg.regressors.begin(), cfg.regressors.end());

    Dataset raw = load_csv(cfg.csv_path, {}, cfg.log_variables ? all_vars : std::vector<std::string>{},
                           cfg.truncate_to_positive);
    {
        std::vector<std::string> missing;
        for (const auto& v : all_vars)
            if (!raw.has(v)) missing.push_back(v);
        if (!missing.empty()) {
            std::string avail;
            for (const auto& nm : raw.names()) avail += (avail.empty() ? "" : ", ") + nm;
            std::string msg = "config validation failed:";
            for (const auto& v : missing)
                msg += "\n  - variables: '" + v + "' not in data (available: " + avail + ")";
            throw ValidationError(msg);
        }
    }

    Dataset data = raw;
    std::string dep = cfg.dependent;
    std::vector<std::string> regs = cfg.regressors;
    if (cfg.log_variables) {
        for (const auto& v : all_vars)
            data = apply_transform(data, {Transform::Kind::NaturalLog, v, 1});
        dep = "log" + dep;
        for (auto& r : regs) r = "log" + r;
    }
    data = align(data);

    PipelineResult result;
    const fs::path out_dir(cfg.output_dir);
    fs::create_directories(out_dir);

    // ---- unit roots: level and first difference of every variable --------
    std::vector<std::string> model_vars = {dep};
    model_vars.insert(model_vars.end(), regs.begin(), regs.end());
    for (const auto& v : model_vars) {
        const TimeSeries& s = data.get(v);
        result.unit_roots.push_back(pp_test(s, Deterministic::Constant));
        result.unit_roots.push_back(pp_test(difference(s), Deterministic::Constant));
    }

    // ---- model selection and estimation ----------------------------------
    ModelSpec base;
    base.dependent = dep;
    base.regressors = regs;
    base.q.assign(regs.size(), 1);
    result.selected = select_lags(data, base, cfg.p_max, cfg.q_max, cfg.criterion);
    result.fit = fit_ecm(data, result.selected);
    result.bounds = bounds_test(result.fit);
    result.cointegration_found = result.bounds.decision == BoundsDecision::Cointegration;

    // ---- counterfactual simulation ---------------------------------------
    ShockSpec shock;
    shock.target = cfg.shock_target.empty() ? regs.front() : cfg.shock_target;
    if (cfg.log_variables && !cfg.shock_target.empty() && !shock.target.starts_with("log") &&
        std::find(regs.begin(), regs.end(), "log" + shock.target) != regs.end())
        shock.target = "log" + shock.target;  // accept raw names in the config
    shock.magnitude = cfg.shock_magnitude;
    shock.shock_time = cfg.shock_time;
    shock.horizon = cfg.horizon;
    shock.n_sims = cfg.n_sims;
    shock.burn_in = cfg.burn_in;
    shock.sustained = cfg.sustained;
    result.simulation = simulate(result.fit, shock, cfg.seed);

    // ---- diagnostics and KRLS --------------------------------------------
    result.diagnostics = run_diagnostics(result.fit.ols, cfg.bg_lags);

    {
        const TimeSeries& ys = data.get(dep);
        const std::vector<double> yv = ys.dense();
        Eigen::MatrixXd X(static_cast<Eigen::Index>(yv.size()),
                          static_cast<Eigen::Index>(regs.size()));
        for (std::size_t j = 0; j < regs.size(); ++j) {
            const std::vector<double> xv = data.get(regs[j]).dense();
            for (std::size_t i = 0; i < xv.size(); ++i)
                X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = xv[i];
        }
        Eigen::VectorXd y =
            Eigen::Map<const Eigen::VectorXd>(yv.data(), static_cast<Eigen::Index>(yv.size()));
        result.krls = fit_krls(X, y, regs, cfg.krls_lambda, cfg.krls_sigma2);
    }

    // ---- report directory -------------------------------------------------
    write_csv(data, (out_dir / "aligned_data.csv").string());
    write_unitroot_table(result.unit_roots, (out_dir / "table1_unitroot.csv").string());
    write_bounds_table(result.bounds, (out_dir / "table2_bounds.csv").string());
    write_ecm_table(result.fit, (out_dir / "table3_ecm.csv").string());
    write_diagnostics_table(result.diagnostics, (out_dir / "table4_diagnostics.csv").string());
    write_krls_table(result.krls, (out_dir / "table5_krls.csv").string());
    write_simulation_csv(result.simulation, (out_dir / "simulation.csv").string());
    save_fit(result.fit, (out_dir / "fit.json").string());

    plot_series(data, model_vars, (out_dir / "fig1_series.svg").string(), cfg.stamp_plots);
    plot_simulation(result.simulation, (out_dir / "fig2_simulation.svg").string(),
                    cfg.stamp_plots);
    plot_cusum(result.diagnostics.cusum, (out_dir / "fig3_cusum.svg").string(), cfg.stamp_plots);
    plot_coefficients(result.fit, (out_dir / "fig4_coefficients.svg").string(), cfg.stamp_plots);
    plot_krls_derivatives(result.krls, (out_dir / "fig5_krls.svg").string(), cfg.stamp_plots);

    nlohmann::json summary;
    summary["seed"] = cfg.seed;
    summary["sample"] = {{"start", result.fit.sample_start_year},
                         {"end", result.fit.sample_end_year}};
    summary["selected"] = {{"p", result.selected.p}, {"q", result.selected.q}};
    summary["bounds"] = {{"f", result.bounds.f_stat},
                         {"t", result.bounds.t_stat},
                         {"decision", to_string(result.bounds.decision)},
                         {"p_f_i1", result.bounds.p_f_i1},
                         {"p_t_i1", result.bounds.p_t_i1}};
    summary["speed_of_adjustment"] = result.fit.speed_of_adjustment;
    nlohmann::json lr = nlohmann::json::array();
    for (const auto& c : result.fit.long_run)
        lr.push_back({{"name", c.name}, {"estimate", c.estimate}, {"se", c.se},
                      {"p", c.p_value}});
    summary["long_run"] = lr;
    summary["diagnostics"] = {{"bg_p", result.diagnostics.bg.p_value},
                              {"im_het_p", result.diagnostics.im.heteroskedasticity.p_value},
                              {"cusum_in_bounds", result.diagnostics.cusum.in_bounds},
                              {"jb_p", result.diagnostics.jb.p_value}};
    nlohmann::json krls_effects = nlohmann::json::array();
    for (const auto& e : result.krls.effects)
        krls_effects.push_back({{"name", e.name},
                                {"average", e.average},
                                {"se", e.se},
                                {"p25", e.p25},
                                {"p50", e.p50},
                                {"p75", e.p75}});
    summary["krls"] = {{"r2", result.krls.r2},
                       {"lambda", result.krls.lambda},
                       {"effects", krls_effects}};
    if (!result.cointegration_found)
        summary["warnings"] = {"bounds test did not declare cointegration; downstream stages "
                               "still ran"};
    std::ofstream js(out_dir / "results.json");
    if (!js) throw DataError("cannot write results.json");
    js << summary.dump(2) << "\n";

    result.data = data;
    result.output_dir = out_dir.string();
    return result;
}

}  // namespace ardlkit
