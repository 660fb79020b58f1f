#include "ardlkit/dynsim.hpp"

#include <algorithm>
#include <cmath>

#include "ardlkit/errors.hpp"
#include "ardlkit/rng.hpp"
#include "ardlkit/stats.hpp"

namespace ardlkit {

namespace {

constexpr double kOverflowGuard = 1e8;

// Coefficient index map for the EC recursion, resolved once per simulation.
struct EcmStructure {
    int idx_const = -1;
    int idx_trend = -1;
    std::vector<int> dy_lag_idx;               // d.dep.L1 .. d.dep.L(p-1)
    std::vector<std::vector<int>> dx_idx;      // per regressor, q_k entries
    int dep_level_idx = -1;
    std::vector<int> reg_level_idx;            // per regressor

    static EcmStructure resolve(const ArdlEcmFit& fit) {
        EcmStructure s;
        const auto& spec = fit.spec;
        s.idx_const = fit.ols.index_of("const");
        if (spec.trend) s.idx_trend = fit.ols.index_of("trend");
        for (int i = 1; i <= spec.p - 1; ++i)
            s.dy_lag_idx.push_back(
                fit.ols.index_of("d." + spec.dependent + ".L" + std::to_string(i)));
        for (std::size_t k = 0; k < spec.regressors.size(); ++k) {
            std::vector<int> idx;
            for (int j = 0; j <= spec.q[k] - 1; ++j) {
                std::string nm = "d." + spec.regressors[k];
                if (j > 0) nm += ".L" + std::to_string(j);
                idx.push_back(fit.ols.index_of(nm));
            }
            s.dx_idx.push_back(std::move(idx));
            s.reg_level_idx.push_back(fit.ols.index_of(spec.regressors[k] + ".L1"));
        }
        s.dep_level_idx = fit.ols.index_of(spec.dependent + ".L1");
        return s;
    }
};

}  // namespace

void ShockSpec::validate(const ArdlEcmFit& fit) const {
    if (shock_time <= 0 || shock_time >= horizon)
        throw ValidationError("shock_time must satisfy 0 < shock_time < horizon");
    if (n_sims < 1) throw ValidationError("n_sims must be >= 1");
    if (burn_in < 0) throw ValidationError("burn_in must be >= 0");
    if (magnitude <= -1.0)
        throw ValidationError("shock magnitude must exceed -1 (a -100% change of a logged "
                              "regressor is undefined)");
    if (std::find(fit.spec.regressors.begin(), fit.spec.regressors.end(), target) ==
        fit.spec.regressors.end())
        throw ValidationError("shock target '" + target + "' is not a regressor of the fit");
}

SimulationResult simulate(const ArdlEcmFit& fit, const ShockSpec& shock, std::uint64_t seed) {
    shock.validate(fit);
    if (!fit.long_run_defined)
        throw NumericError("speed of adjustment is numerically zero; the recursion has no "
                           "equilibrium to simulate around");

    const EcmStructure st = EcmStructure::resolve(fit);
    const auto& spec = fit.spec;
    const int nreg = static_cast<int>(spec.regressors.size());
    const int ncoef = static_cast<int>(fit.ols.names.size());
    const int total = shock.burn_in + shock.horizon;
    const int target_k = static_cast<int>(
        std::find(spec.regressors.begin(), spec.regressors.end(), shock.target) -
        spec.regressors.begin());
    const double shift = std::log1p(shock.magnitude);

    // Regressor baselines: sample means of the lagged-level columns.
    std::vector<double> xbar(static_cast<std::size_t>(nreg));
    for (int k = 0; k < nreg; ++k)
        xbar[static_cast<std::size_t>(k)] = fit.ols.X.col(st.reg_level_idx[k]).mean();

    // Counterfactual regressor path; g is the global period, the reported
    // window starts at g = burn_in. Pre-sample values (g < 0) sit at the mean.
    auto x_at = [&](int k, int g) {
        double v = xbar[static_cast<std::size_t>(k)];
        if (k == target_k) {
            const int r = g - shock.burn_in;
            const bool on = shock.sustained ? (r >= shock.shock_time) : (r == shock.shock_time);
            if (on) v += shift;
        }
        return v;
    };

    // Sampling transform for the coefficient draws.
    SimulationResult result;
    result.shock = shock;
    result.seed = seed;
    Eigen::MatrixXd chol = Eigen::MatrixXd::Zero(ncoef, ncoef);
    if (fit.ols.cov.norm() > 0.0) {
        Eigen::LLT<Eigen::MatrixXd> llt(fit.ols.cov);
        if (llt.info() == Eigen::Success) {
            chol = llt.matrixL();
        } else {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fit.ols.cov);
            Eigen::VectorXd ev = es.eigenvalues().cwiseMax(1e-12);
            chol = es.eigenvectors() * ev.cwiseSqrt().asDiagonal();
            result.cov_repaired = true;
        }
    }
    const double sigma = std::sqrt(std::max(0.0, fit.ols.sigma2));
    const double tau0 = static_cast<double>(fit.ols.nobs) + 1.0;

    Eigen::MatrixXd paths(shock.n_sims, shock.horizon);
    Eigen::VectorXd z(ncoef), b(ncoef);
    std::vector<double> dy_hist(static_cast<std::size_t>(std::max(0, spec.p - 1)), 0.0);

    for (int s = 0; s < shock.n_sims; ++s) {
        RngStream rng(seed, static_cast<std::uint64_t>(s) + 1);
        for (int i = 0; i < ncoef; ++i) z(i) = rng.normal();
        b = fit.ols.beta + chol * z;

        const double lam1 = b(st.dep_level_idx);
        double levels_at_mean = b(st.idx_const);
        if (st.idx_trend >= 0) levels_at_mean += b(st.idx_trend) * tau0;
        for (int k = 0; k < nreg; ++k)
            levels_at_mean += b(st.reg_level_idx[k]) * xbar[static_cast<std::size_t>(k)];
        const double y_star = -levels_at_mean / lam1;
        if (!std::isfinite(y_star) || std::abs(y_star) > kOverflowGuard)
            throw NumericError("simulation diverged at draw " + std::to_string(s) +
                               ": sampled equilibrium is unbounded");

        std::fill(dy_hist.begin(), dy_hist.end(), 0.0);
        double y_prev = y_star;
        for (int g = 0; g < total; ++g) {
            double dy = b(st.idx_const);
            if (st.idx_trend >= 0) dy += b(st.idx_trend) * (tau0 + static_cast<double>(g));
            for (std::size_t i = 0; i < st.dy_lag_idx.size(); ++i)
                dy += b(st.dy_lag_idx[i]) * dy_hist[i];
            for (int k = 0; k < nreg; ++k) {
                const auto& idx = st.dx_idx[static_cast<std::size_t>(k)];
                for (std::size_t j = 0; j < idx.size(); ++j) {
                    const int jj = static_cast<int>(j);
                    dy += b(idx[j]) * (x_at(k, g - jj) - x_at(k, g - jj - 1));
                }
                dy += b(st.reg_level_idx[k]) * x_at(k, g - 1);
            }
            dy += lam1 * y_prev;
            if (sigma > 0.0) dy += rng.normal(0.0, sigma);

            const double y_new = y_prev + dy;
            if (!std::isfinite(y_new) || std::abs(y_new) > kOverflowGuard)
                throw NumericError("simulation diverged at draw " + std::to_string(s) +
                                   ", period " + std::to_string(g - shock.burn_in));
            if (!dy_hist.empty()) {
                for (std::size_t i = dy_hist.size() - 1; i > 0; --i) dy_hist[i] = dy_hist[i - 1];
                dy_hist[0] = y_new - y_prev;
            }
            if (g >= shock.burn_in) paths(s, g - shock.burn_in) = y_new;
            y_prev = y_new;
        }
    }

    result.periods.resize(static_cast<std::size_t>(shock.horizon));
    result.mean_path.resize(static_cast<std::size_t>(shock.horizon));
    for (double level : {0.75, 0.90, 0.95})
        result.bands[level].resize(static_cast<std::size_t>(shock.horizon));
    std::vector<double> column(static_cast<std::size_t>(shock.n_sims));
    for (int t = 0; t < shock.horizon; ++t) {
        result.periods[static_cast<std::size_t>(t)] = t;
        for (int s = 0; s < shock.n_sims; ++s) column[static_cast<std::size_t>(s)] = paths(s, t);
        std::sort(column.begin(), column.end());
        double sum = 0.0;
        for (double v : column) sum += v;
        result.mean_path[static_cast<std::size_t>(t)] = sum / static_cast<double>(shock.n_sims);
        for (double level : {0.75, 0.90, 0.95}) {
            const double alpha = (1.0 - level) / 2.0;
            result.bands[level][static_cast<std::size_t>(t)] = {
                stats::quantile_sorted(column, alpha), stats::quantile_sorted(column, 1.0 - alpha)};
        }
    }
    return result;
}

}  // namespace ardlkit
