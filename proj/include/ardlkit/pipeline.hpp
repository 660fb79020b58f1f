#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ardlkit/ardl.hpp"
#include "ardlkit/bounds.hpp"
#include "ardlkit/dataset.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/dynsim.hpp"
#include "ardlkit/krls.hpp"
#include "ardlkit/unit_root.hpp"

namespace ardlkit {

/// Whole-pipeline configuration, normally loaded from a JSON document. The
/// seed is mandatory: every stochastic stage derives from it.
struct PipelineConfig {
    std::string csv_path;
    std::string dependent;                // raw series name, e.g. "CE"
    std::vector<std::string> regressors;  // raw series names
    bool log_variables = true;            // apply natural log to all variables
    bool truncate_to_positive = false;    // loader policy for non-positive values
    int p_max = 4;
    int q_max = 4;
    Criterion criterion = Criterion::BIC;
    double shock_magnitude = -0.21;
    std::string shock_target;             // defaults to the first regressor
    int shock_time = 5;
    int horizon = 20;
    int n_sims = 5000;
    int burn_in = 20;
    bool sustained = true;
    int bg_lags = 4;
    std::optional<double> krls_lambda;
    std::optional<double> krls_sigma2;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string output_dir = "out";
    bool stamp_plots = false;

    /// Parses and validates; schema violations are collected and reported
    /// together in a single ValidationError.
    static PipelineConfig from_json(const nlohmann::json& doc);
    static PipelineConfig from_file(const std::string& path);
};

/// Everything the full run produced, for callers that want to inspect it.
struct PipelineResult {
    Dataset data;                       // aligned, transformed
    std::vector<PPTestResult> unit_roots;
    ModelSpec selected;
    ArdlEcmFit fit;
    BoundsTestResult bounds;
    SimulationResult simulation;
    DiagnosticsReport diagnostics;
    KrlsFit krls;
    std::string output_dir;
    bool cointegration_found = false;
};

/// Runs the full chain: unit-root tests per variable (level and first
/// difference), lag selection, EC fit, bounds test, counterfactual
/// simulation, the diagnostics battery and the KRLS marginal-effects fit.
/// Writes table1..table5 CSVs, fig1..fig5 SVGs, the fit artifact and a
/// results.json into `output_dir`. A missing cointegration result is flagged
/// but does not abort the run.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace ardlkit
