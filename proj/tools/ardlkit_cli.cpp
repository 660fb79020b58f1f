// ardlkit command line: ingest, unit-root tests, ARDL/EC estimation, bounds
// test, counterfactual simulation, diagnostics, KRLS and the end-to-end
// `reproduce` pipeline. Exit codes: 0 ok, 1 validation, 2 data, 3 numeric.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ardlkit/artifact.hpp"
#include "ardlkit/bounds.hpp"
#include "ardlkit/csv.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/dynsim.hpp"
#include "ardlkit/errors.hpp"
#include "ardlkit/krls.hpp"
#include "ardlkit/pipeline.hpp"
#include "ardlkit/report.hpp"
#include "ardlkit/unit_root.hpp"

#ifdef ARDLKIT_WITH_FETCHERS
#include "ardlkit/fetch.hpp"
#endif

namespace {

using namespace ardlkit;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Shared data options for commands that start from a CSV file.
struct DataArgs {
    std::string csv;
    std::string log_list;      // comma separated raw series to log-transform
    bool truncate = false;

    Dataset load() const {
        Dataset d = load_csv(csv, {}, split_list(log_list), truncate);
        for (const auto& name : split_list(log_list))
            d = apply_transform(d, {Transform::Kind::NaturalLog, name, 1});
        return align(d);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--csv", csv, "input CSV (year + one column per series)")->required();
        cmd->add_option("--log", log_list, "series to log-transform, e.g. CE,NE,REN,ERT,EP");
        cmd->add_flag("--truncate-to-positive", truncate,
                      "truncate logged series to their strictly positive tail instead of "
                      "rejecting non-positive values");
    }
};

ModelSpec parse_model(const std::string& dep, const std::string& regs_csv) {
    ModelSpec spec;
    spec.dependent = dep;
    spec.regressors = split_list(regs_csv);
    spec.q.assign(spec.regressors.size(), 1);
    return spec;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"ardlkit - ARDL bounds testing, dynamic simulations, diagnostics and KRLS"};
    app.require_subcommand(1);

    // ---- ingest -----------------------------------------------------------
    auto* ingest = app.add_subcommand("ingest", "load, validate, align and rewrite a CSV");
    DataArgs ingest_data;
    ingest_data.attach(ingest);
    std::string ingest_out = "aligned.csv";
    ingest->add_option("--out", ingest_out, "output CSV path");
    ingest->callback([&] {
        Dataset d = ingest_data.load();
        write_csv(d, ingest_out);
        auto [a, b] = d.span();
        std::cout << "wrote " << ingest_out << " with " << d.size() << " series over [" << a
                  << "," << b << "]\n";
    });

    // ---- unitroot ----------------------------------------------------------
    auto* unitroot = app.add_subcommand("unitroot", "Phillips-Perron unit-root test");
    DataArgs ur_data;
    ur_data.attach(unitroot);
    std::string ur_series, ur_case = "constant";
    int ur_bandwidth = -1;
    bool ur_diff = false;
    unitroot->add_option("--series", ur_series, "series name")->required();
    unitroot->add_option("--case", ur_case, "none|constant|trend");
    unitroot->add_option("--bandwidth", ur_bandwidth, "Newey-West truncation lag");
    unitroot->add_flag("--diff", ur_diff, "test the first difference");
    unitroot->callback([&] {
        Dataset d = ur_data.load();
        TimeSeries s = d.get(ur_series);
        if (ur_diff) s = difference(s);
        const auto r = pp_test(s, deterministic_from_string(ur_case),
                               ur_bandwidth >= 0 ? std::optional<int>(ur_bandwidth)
                                                 : std::nullopt);
        std::cout << format_unitroot(r);
    });

    // ---- fit ---------------------------------------------------------------
    auto* fit_cmd = app.add_subcommand("fit", "select lags and estimate the EC model");
    DataArgs fit_data;
    fit_data.attach(fit_cmd);
    std::string fit_dep, fit_regs, fit_out = "fit.json", fit_criterion = "bic";
    int fit_pmax = 4, fit_qmax = 4, fit_p = 0;
    std::string fit_q;
    bool fit_trend = false;
    fit_cmd->add_option("--dep", fit_dep, "dependent series (after transforms)")->required();
    fit_cmd->add_option("--regs", fit_regs, "comma separated regressors")->required();
    fit_cmd->add_option("--pmax", fit_pmax, "max AR order for the grid search");
    fit_cmd->add_option("--qmax", fit_qmax, "max distributed-lag order");
    fit_cmd->add_option("--criterion", fit_criterion, "aic|bic");
    fit_cmd->add_option("--p", fit_p, "skip selection: fixed p");
    fit_cmd->add_option("--q", fit_q, "skip selection: fixed q per regressor, e.g. 1,1,2,0");
    fit_cmd->add_flag("--trend", fit_trend, "include a linear trend (experimental)");
    fit_cmd->add_option("--out", fit_out, "fit artifact path");
    fit_cmd->callback([&] {
        Dataset d = fit_data.load();
        ModelSpec spec = parse_model(fit_dep, fit_regs);
        spec.trend = fit_trend;
        if (fit_p > 0) {
            spec.p = fit_p;
            if (!fit_q.empty()) {
                spec.q.clear();
                for (const auto& tok : split_list(fit_q)) spec.q.push_back(std::stoi(tok));
            }
        } else {
            spec = select_lags(d, spec, fit_pmax, fit_qmax,
                               criterion_from_string(fit_criterion));
            std::cout << "selected p=" << spec.p << " q=";
            for (std::size_t i = 0; i < spec.q.size(); ++i)
                std::cout << (i ? "," : "") << spec.q[i];
            std::cout << " by " << fit_criterion << "\n";
        }
        const ArdlEcmFit fit = fit_ecm(d, spec);
        save_fit(fit, fit_out);
        std::cout << format_ecm(fit) << "saved " << fit_out << "\n";
    });

    // ---- bounds ------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "PSS bounds test on a saved fit");
    std::string bounds_fit = "fit.json", bounds_csv_out;
    bounds_cmd->add_option("--fit", bounds_fit, "fit artifact path");
    bounds_cmd->add_option("--out", bounds_csv_out, "optional CSV table output");
    bounds_cmd->callback([&] {
        const ArdlEcmFit fit = load_fit(bounds_fit);
        const BoundsTestResult r = bounds_test(fit);
        std::cout << format_bounds(r);
        if (!bounds_csv_out.empty()) write_bounds_table(r, bounds_csv_out);
    });

    // ---- simulate ----------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "dynamic stochastic counterfactual");
    std::string sim_fit = "fit.json", sim_shock, sim_out_dir = ".";
    int sim_at = 5, sim_horizon = 20, sim_sims = 5000, sim_burn = 20;
    std::uint64_t sim_seed = 0;
    bool sim_impulse = false, sim_stamp = false;
    bool sim_seed_set = false;
    sim_cmd->add_option("--fit", sim_fit, "fit artifact path");
    sim_cmd->add_option("--shock", sim_shock, "target=magnitude, e.g. logNE=-0.21")->required();
    sim_cmd->add_option("--at", sim_at, "shock period");
    sim_cmd->add_option("--horizon", sim_horizon, "simulated periods");
    sim_cmd->add_option("--sims", sim_sims, "simulation draws");
    sim_cmd->add_option("--burn-in", sim_burn, "pre-shock stabilization periods");
    sim_cmd->add_option("--seed", sim_seed, "RNG seed (required)")
        ->each([&](const std::string&) { sim_seed_set = true; });
    sim_cmd->add_flag("--impulse", sim_impulse, "one-period impulse instead of sustained shift");
    sim_cmd->add_flag("--stamp", sim_stamp, "stamp a timestamp comment into the SVG");
    sim_cmd->add_option("--out", sim_out_dir, "output directory");
    sim_cmd->callback([&] {
        if (!sim_seed_set) throw ValidationError("simulate requires --seed");
        const auto eq = sim_shock.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--shock must look like logNE=-0.21");
        ShockSpec shock;
        shock.target = sim_shock.substr(0, eq);
        shock.magnitude = std::stod(sim_shock.substr(eq + 1));
        shock.shock_time = sim_at;
        shock.horizon = sim_horizon;
        shock.n_sims = sim_sims;
        shock.burn_in = sim_burn;
        shock.sustained = !sim_impulse;
        const ArdlEcmFit fit = load_fit(sim_fit);
        const SimulationResult r = simulate(fit, shock, sim_seed);
        namespace fs = std::filesystem;
        fs::create_directories(sim_out_dir);
        write_simulation_csv(r, (fs::path(sim_out_dir) / "simulation.csv").string());
        plot_simulation(r, (fs::path(sim_out_dir) / "simulation.svg").string(), sim_stamp);
        std::cout << "simulated " << shock.n_sims << " draws over " << shock.horizon
                  << " periods (seed " << sim_seed << "); wrote simulation.csv/.svg under "
                  << sim_out_dir << "\n";
    });

    // ---- diagnose ----------------------------------------------------------
    auto* diag_cmd = app.add_subcommand("diagnose", "post-estimation diagnostics battery");
    std::string diag_fit = "fit.json", diag_json_out, diag_svg_out, diag_csv_out;
    int diag_bg_lags = 4;
    diag_cmd->add_option("--fit", diag_fit, "fit artifact path");
    diag_cmd->add_option("--bg-lags", diag_bg_lags, "Breusch-Godfrey lag order");
    diag_cmd->add_option("--json", diag_json_out, "write the report as JSON");
    diag_cmd->add_option("--csv", diag_csv_out, "write the report as CSV");
    diag_cmd->add_option("--svg", diag_svg_out, "write the CUSUM plot");
    diag_cmd->callback([&] {
        const ArdlEcmFit fit = load_fit(diag_fit);
        const DiagnosticsReport rep = run_diagnostics(fit.ols, diag_bg_lags);
        std::cout << format_diagnostics(rep);
        if (!diag_csv_out.empty()) write_diagnostics_table(rep, diag_csv_out);
        if (!diag_svg_out.empty()) plot_cusum(rep.cusum, diag_svg_out);
        if (!diag_json_out.empty()) {
            nlohmann::json j;
            j["bg"] = {{"lags", rep.bg.lags}, {"stat", rep.bg.lm_stat}, {"p", rep.bg.p_value}};
            j["im"] = {{"het",
                        {{"stat", rep.im.heteroskedasticity.stat},
                         {"dof", rep.im.heteroskedasticity.dof},
                         {"p", rep.im.heteroskedasticity.p_value}}},
                       {"skewness",
                        {{"stat", rep.im.skewness.stat},
                         {"dof", rep.im.skewness.dof},
                         {"p", rep.im.skewness.p_value}}},
                       {"kurtosis",
                        {{"stat", rep.im.kurtosis.stat},
                         {"dof", rep.im.kurtosis.dof},
                         {"p", rep.im.kurtosis.p_value}}},
                       {"total",
                        {{"stat", rep.im.total.stat},
                         {"dof", rep.im.total.dof},
                         {"p", rep.im.total.p_value}}}};
            j["cusum"] = {{"in_bounds", rep.cusum.in_bounds}, {"path", rep.cusum.path},
                          {"upper", rep.cusum.upper}, {"lower", rep.cusum.lower}};
            j["jarque_bera"] = {{"stat", rep.jb.stat}, {"p", rep.jb.p_value}};
            std::ofstream out(diag_json_out);
            if (!out) throw DataError("cannot write '" + diag_json_out + "'");
            out << j.dump(2) << "\n";
        }
    });

    // ---- krls --------------------------------------------------------------
    auto* krls_cmd = app.add_subcommand("krls", "kernel regularized least squares fit");
    DataArgs krls_data;
    krls_data.attach(krls_cmd);
    std::string krls_dep, krls_regs, krls_out_dir = ".";
    double krls_lambda = -1.0, krls_sigma2 = -1.0;
    bool krls_stamp = false;
    krls_cmd->add_option("--dep", krls_dep, "dependent series")->required();
    krls_cmd->add_option("--regs", krls_regs, "comma separated features")->required();
    krls_cmd->add_option("--lambda", krls_lambda, "ridge penalty (default: leave-one-out)");
    krls_cmd->add_option("--sigma2", krls_sigma2, "kernel bandwidth (default: #features)");
    krls_cmd->add_flag("--stamp", krls_stamp, "stamp a timestamp comment into the SVG");
    krls_cmd->add_option("--out", krls_out_dir, "output directory");
    krls_cmd->callback([&] {
        Dataset d = krls_data.load();
        const std::vector<std::string> regs = split_list(krls_regs);
        const std::vector<double> yv = d.get(krls_dep).dense();
        Eigen::MatrixXd X(static_cast<Eigen::Index>(yv.size()),
                          static_cast<Eigen::Index>(regs.size()));
        for (std::size_t j = 0; j < regs.size(); ++j) {
            const std::vector<double> xv = d.get(regs[j]).dense();
            for (std::size_t i = 0; i < xv.size(); ++i)
                X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = xv[i];
        }
        const Eigen::VectorXd y =
            Eigen::Map<const Eigen::VectorXd>(yv.data(), static_cast<Eigen::Index>(yv.size()));
        const KrlsFit fit =
            fit_krls(X, y, regs,
                     krls_lambda > 0 ? std::optional<double>(krls_lambda) : std::nullopt,
                     krls_sigma2 > 0 ? std::optional<double>(krls_sigma2) : std::nullopt);
        std::cout << format_krls(fit);
        namespace fs = std::filesystem;
        fs::create_directories(krls_out_dir);
        write_krls_table(fit, (fs::path(krls_out_dir) / "krls.csv").string());
        plot_krls_derivatives(fit, (fs::path(krls_out_dir) / "krls.svg").string(), krls_stamp);
    });

    // ---- reproduce ---------------------------------------------------------
    auto* repro = app.add_subcommand("reproduce", "run the full pipeline from a config file");
    std::string repro_config;
    std::string repro_out;
    std::uint64_t repro_seed = 0;
    bool repro_seed_set = false;
    repro->add_option("--config", repro_config, "pipeline config JSON")->required();
    repro->add_option("--out", repro_out, "override output directory");
    repro->add_option("--seed", repro_seed, "override config seed")
        ->each([&](const std::string&) { repro_seed_set = true; });
    repro->callback([&] {
        PipelineConfig cfg = PipelineConfig::from_file(repro_config);
        if (!repro_out.empty()) cfg.output_dir = repro_out;
        if (repro_seed_set) {
            cfg.seed = repro_seed;
            cfg.seed_set = true;
        }
        const PipelineResult r = run_pipeline(cfg);
        std::cout << "pipeline complete; report written to " << r.output_dir << "\n"
                  << format_bounds(r.bounds) << format_ecm(r.fit)
                  << format_diagnostics(r.diagnostics) << format_krls(r.krls);
        if (!r.cointegration_found)
            std::cout << "warning: bounds test did not declare cointegration; interpret the "
                         "long-run block with care\n";
    });

    // ---- fetch -------------------------------------------------------------
#ifdef ARDLKIT_WITH_FETCHERS
    auto* fetch_cmd = app.add_subcommand("fetch", "download a public indicator into the cache");
    std::string fetch_source, fetch_code, fetch_country = "CHN", fetch_name, fetch_cache,
                fetch_base;
    bool fetch_allow = false;
    fetch_cmd->add_option("--source", fetch_source, "worldbank|eia|oecd")->required();
    fetch_cmd->add_option("--code", fetch_code, "provider indicator id")->required();
    fetch_cmd->add_option("--country", fetch_country, "ISO3 country code");
    fetch_cmd->add_option("--name", fetch_name, "series name for the cached CSV column");
    fetch_cmd->add_option("--cache", fetch_cache, "cache directory")
        ->envname("ARDLKIT_CACHE_DIR")
        ->required();
    fetch_cmd->add_option("--base-url", fetch_base, "override the provider base URL");
    fetch_cmd->add_flag("--enable-network", fetch_allow,
                        "explicitly allow network access on a cache miss");
    fetch_cmd->callback([&] {
        FetchSpec spec;
        spec.source = fetch_source;
        spec.code = fetch_code;
        spec.country = fetch_country;
        spec.series_name = fetch_name;
        spec.base_url = fetch_base;
        if (!fetch_allow) {
            // cache-only probe: fetch_series would hit the network on a miss
            namespace fs = std::filesystem;
            const std::string probe = fetch_cache;
            bool hit = false;
            if (fs::exists(probe)) {
                for (const auto& entry : fs::directory_iterator(probe)) {
                    const std::string fn = entry.path().filename().string();
                    if (fn.rfind(fetch_source + "_", 0) == 0) hit = true;
                }
            }
            if (!hit)
                throw ValidationError(
                    "cache is cold and network access was not enabled; rerun with "
                    "--enable-network");
        }
        std::cout << fetch_series(spec, fetch_cache) << "\n";
    });
#endif

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ardlkit::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ardlkit::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const ardlkit::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
