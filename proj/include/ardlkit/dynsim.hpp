#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ardlkit/ardl.hpp"

namespace ardlkit {

/// Counterfactual shock applied to one regressor during the simulation.
/// `magnitude` is a relative change (-0.21 = -21%); on logged regressors it
/// becomes an additive shift of ln(1 + magnitude). Sustained shifts hold the
/// new level through the horizon; an impulse reverts after one period.
struct ShockSpec {
    std::string target;
    double magnitude = 0.0;
    int shock_time = 5;    ///< period index within the reported horizon
    int horizon = 20;
    int n_sims = 5000;
    int burn_in = 20;
    bool sustained = true;

    void validate(const ArdlEcmFit& fit) const;
};

/// Response path of the dependent variable (log level) with percentile bands.
struct SimulationResult {
    std::vector<int> periods;
    std::vector<double> mean_path;
    /// band level (0.75/0.90/0.95) -> per-period {lo, hi}
    std::map<double, std::vector<std::pair<double, double>>> bands;
    ShockSpec shock;
    std::uint64_t seed = 0;
    bool cov_repaired = false;  ///< covariance needed a nearest-PSD repair
};

/// Jordan-Philips style stochastic simulation of the estimated EC recursion.
/// Each draw samples a coefficient vector from N(beta_hat, cov) plus an
/// iid N(0, sigma2) disturbance per period, holds the regressors at their
/// sample means, starts the dependent at the draw's own steady state, runs
/// `burn_in` pre-shock periods and then `horizon` reported periods with the
/// shock applied at `shock_time`. Per-period percentiles are linear
/// interpolations of the order statistics over draws. Identical
/// (fit, shock, seed) give bit-identical results; draws use per-index
/// substreams so any evaluation order agrees.
SimulationResult simulate(const ArdlEcmFit& fit, const ShockSpec& shock, std::uint64_t seed);

}  // namespace ardlkit
