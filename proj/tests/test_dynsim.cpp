#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ardlkit/dynsim.hpp"
#include "ardlkit/errors.hpp"
#include "ardlkit/rng.hpp"
#include "oracles.hpp"

using namespace ardlkit;

namespace {

// Hand-assembled EC fit with one regressor held at mean `xbar`:
//   dy_t = c + g*dx_t + lam1*y_{t-1} + lam2*x_{t-1} + e
ArdlEcmFit synthetic_fit(double lam1, double lam2, double c, double g, double xbar,
                         double sigma2, double cov_scale) {
    ArdlEcmFit fit;
    fit.spec.dependent = "y";
    fit.spec.regressors = {"x"};
    fit.spec.p = 1;
    fit.spec.q = {1};
    fit.level_names = {"y.L1", "x.L1"};
    fit.short_run_names = {"d.x"};
    fit.ols.names = {"const", "d.x", "y.L1", "x.L1"};
    fit.ols.beta = Eigen::Vector4d(c, g, lam1, lam2);
    fit.ols.cov = cov_scale * Eigen::Matrix4d::Identity();
    fit.ols.sigma2 = sigma2;
    fit.ols.nobs = 100;
    fit.ols.dof = 96;
    fit.ols.X = Eigen::MatrixXd::Zero(100, 4);
    fit.ols.X.col(0).setOnes();
    fit.ols.X.col(3).setConstant(xbar);
    fit.ols.y = Eigen::VectorXd::Zero(100);
    fit.ols.residuals = Eigen::VectorXd::Zero(100);
    fit.ols.fitted = Eigen::VectorXd::Zero(100);
    finalize_ecm_fit(fit);
    return fit;
}

ShockSpec shock_of(double magnitude, int at = 5, int horizon = 20, int sims = 500,
                   int burn = 20, bool sustained = true) {
    ShockSpec s;
    s.target = "x";
    s.magnitude = magnitude;
    s.shock_time = at;
    s.horizon = horizon;
    s.n_sims = sims;
    s.burn_in = burn;
    s.sustained = sustained;
    return s;
}

}  // namespace

TEST_CASE("zero-magnitude shock keeps the mean path at the equilibrium") {
    const ArdlEcmFit fit = synthetic_fit(-0.5, 0.3, 1.0, 0.2, 4.0, 0.01, 1e-4);
    const SimulationResult r = simulate(fit, shock_of(0.0, 5, 20, 2000), 99);
    const double y_star = -(1.0 + 0.3 * 4.0) / -0.5;
    for (std::size_t t = 0; t < r.mean_path.size(); ++t) {
        CHECK(r.mean_path[t] == doctest::Approx(y_star).epsilon(0.02));
        const auto& [lo, hi] = r.bands.at(0.95)[t];
        CHECK(lo <= y_star);
        CHECK(hi >= y_star);
    }
}

TEST_CASE("deterministic limit equals the closed-form recursion oracle") {
    const double lam1 = -0.45, lam2 = 0.27, c = 0.8, g = 0.15, xbar = 3.0;
    const ArdlEcmFit fit = synthetic_fit(lam1, lam2, c, g, xbar, 0.0, 0.0);
    const ShockSpec shock = shock_of(-0.21, 4, 18, 1, 12);
    const SimulationResult r = simulate(fit, shock, 1);

    const int total = shock.burn_in + shock.horizon;
    oracle::Vector xpath(static_cast<std::size_t>(total), xbar);
    for (int gidx = shock.burn_in + shock.shock_time; gidx < total; ++gidx)
        xpath[static_cast<std::size_t>(gidx)] = xbar + std::log1p(-0.21);
    const double y0 = -(c + lam2 * xbar) / lam1;
    const oracle::Vector path = oracle::ecm_recursion(c, {}, {{g}}, lam1, {lam2}, {xpath}, y0,
                                                      total);
    REQUIRE(r.mean_path.size() == static_cast<std::size_t>(shock.horizon));
    for (int t = 0; t < shock.horizon; ++t)
        CHECK(r.mean_path[static_cast<std::size_t>(t)] ==
              doctest::Approx(path[static_cast<std::size_t>(shock.burn_in + t)])
                  .epsilon(1e-10));
}

TEST_CASE("higher-order recursion also matches the oracle") {
    // p = 3, q = 2: two dy lags and two dx terms
    ArdlEcmFit fit;
    fit.spec.dependent = "y";
    fit.spec.regressors = {"x"};
    fit.spec.p = 3;
    fit.spec.q = {2};
    fit.level_names = {"y.L1", "x.L1"};
    fit.short_run_names = {"d.y.L1", "d.y.L2", "d.x", "d.x.L1"};
    fit.ols.names = {"const", "d.y.L1", "d.y.L2", "d.x", "d.x.L1", "y.L1", "x.L1"};
    Eigen::VectorXd beta(7);
    const double c = 0.4, a1 = 0.25, a2 = -0.1, g0 = 0.3, g1 = 0.12, lam1 = -0.5, lam2 = 0.2;
    beta << c, a1, a2, g0, g1, lam1, lam2;
    fit.ols.beta = beta;
    fit.ols.cov = Eigen::MatrixXd::Zero(7, 7);
    fit.ols.sigma2 = 0.0;
    fit.ols.nobs = 50;
    fit.ols.dof = 43;
    const double xbar = 2.0;
    fit.ols.X = Eigen::MatrixXd::Zero(50, 7);
    fit.ols.X.col(0).setOnes();
    fit.ols.X.col(6).setConstant(xbar);
    fit.ols.y = fit.ols.residuals = fit.ols.fitted = Eigen::VectorXd::Zero(50);
    finalize_ecm_fit(fit);

    const ShockSpec shock = shock_of(0.35, 3, 15, 1, 10);
    const SimulationResult r = simulate(fit, shock, 5);

    const int total = shock.burn_in + shock.horizon;
    oracle::Vector xpath(static_cast<std::size_t>(total), xbar);
    for (int gidx = shock.burn_in + shock.shock_time; gidx < total; ++gidx)
        xpath[static_cast<std::size_t>(gidx)] = xbar + std::log1p(0.35);
    const double y0 = -(c + lam2 * xbar) / lam1;
    const oracle::Vector path =
        oracle::ecm_recursion(c, {a1, a2}, {{g0, g1}}, lam1, {lam2}, {xpath}, y0, total);
    for (int t = 0; t < shock.horizon; ++t)
        CHECK(r.mean_path[static_cast<std::size_t>(t)] ==
              doctest::Approx(path[static_cast<std::size_t>(shock.burn_in + t)])
                  .epsilon(1e-10));
}

TEST_CASE("post-burn-in equilibrium matches the analytic steady state") {
    const ArdlEcmFit fit = synthetic_fit(-0.4, 0.3, 1.2, 0.1, 5.0, 0.0, 0.0);
    const SimulationResult r = simulate(fit, shock_of(0.0, 5, 10, 1, 20), 3);
    const double y_star = -(1.2 + 0.3 * 5.0) / -0.4;
    for (double v : r.mean_path) CHECK(v == doctest::Approx(y_star).epsilon(1e-8));
}

TEST_CASE("sustained -21% shock: initial deviation then monotone reconvergence") {
    const double lam1 = -0.4, lam2 = 0.3, c = 1.0, g = 0.25, xbar = 4.0;
    const ArdlEcmFit fit = synthetic_fit(lam1, lam2, c, g, xbar, 1e-10, 1e-12);
    const ShockSpec shock = shock_of(-0.21, 3, 30, 200, 15);
    const SimulationResult r = simulate(fit, shock, 11);

    const double y_new = -(c + lam2 * (xbar + std::log1p(-0.21))) / lam1;
    const double y_old = -(c + lam2 * xbar) / lam1;
    CHECK(std::abs(r.mean_path[0] - y_old) < 1e-4);
    // deviation appears at the shock and shrinks monotonically afterwards
    const double dev_at_shock = std::abs(r.mean_path[static_cast<std::size_t>(shock.shock_time)] -
                                         y_new);
    CHECK(dev_at_shock > 1e-3);
    // monotone until the deviation reaches the Monte-Carlo noise floor
    double prev = dev_at_shock;
    for (int t = shock.shock_time + 1; t < shock.horizon && prev > 1e-4; ++t) {
        const double dev = std::abs(r.mean_path[static_cast<std::size_t>(t)] - y_new);
        CHECK(dev <= prev + 1e-6);
        prev = dev;
    }
    CHECK(prev < 0.05 * dev_at_shock);  // essentially reconverged by the horizon
}

TEST_CASE("impulse shock returns to the original equilibrium") {
    const ArdlEcmFit fit = synthetic_fit(-0.4, 0.3, 1.0, 0.25, 4.0, 1e-10, 1e-12);
    const SimulationResult r = simulate(fit, shock_of(-0.21, 3, 30, 100, 15, false), 17);
    const double y_old = -(1.0 + 0.3 * 4.0) / -0.4;
    CHECK(std::abs(r.mean_path.back() - y_old) < 1e-3);
    // but it did move at the shock
    double max_dev = 0.0;
    for (double v : r.mean_path) max_dev = std::max(max_dev, std::abs(v - y_old));
    CHECK(max_dev > 1e-3);
}

TEST_CASE("identical seeds give bit-identical results") {
    const ArdlEcmFit fit = synthetic_fit(-0.5, 0.3, 1.0, 0.2, 4.0, 0.02, 1e-3);
    const ShockSpec shock = shock_of(-0.21, 5, 20, 400);
    const SimulationResult a = simulate(fit, shock, 42);
    const SimulationResult b = simulate(fit, shock, 42);
    CHECK(a.mean_path == b.mean_path);
    for (double level : {0.75, 0.90, 0.95}) CHECK(a.bands.at(level) == b.bands.at(level));
    const SimulationResult c = simulate(fit, shock, 43);
    CHECK(a.mean_path != c.mean_path);
}

TEST_CASE("bands are nested at every period") {
    const ArdlEcmFit fit = synthetic_fit(-0.5, 0.3, 1.0, 0.2, 4.0, 0.05, 1e-3);
    const SimulationResult r = simulate(fit, shock_of(-0.21, 5, 25, 800), 7);
    for (std::size_t t = 0; t < r.periods.size(); ++t) {
        const auto& p75 = r.bands.at(0.75)[t];
        const auto& p90 = r.bands.at(0.90)[t];
        const auto& p95 = r.bands.at(0.95)[t];
        CHECK(p90.first <= p75.first);
        CHECK(p90.second >= p75.second);
        CHECK(p95.first <= p90.first);
        CHECK(p95.second >= p90.second);
    }
}

TEST_CASE("doubling the draw count moves percentiles by less than 3 MC standard errors") {
    const ArdlEcmFit fit = synthetic_fit(-0.5, 0.3, 1.0, 0.2, 4.0, 0.05, 1e-3);
    const ShockSpec base = shock_of(-0.21, 3, 10, 600);
    // batch estimate of the MC standard error of the p95 upper band
    std::vector<double> batch;
    for (std::uint64_t s = 0; s < 8; ++s) {
        ShockSpec sh = base;
        const SimulationResult r = simulate(fit, sh, 100 + s);
        batch.push_back(r.bands.at(0.95)[8].second);
    }
    double mean = 0.0;
    for (double v : batch) mean += v;
    mean /= static_cast<double>(batch.size());
    double var = 0.0;
    for (double v : batch) var += (v - mean) * (v - mean);
    var /= static_cast<double>(batch.size() - 1);
    const double se = std::sqrt(var);

    ShockSpec doubled = base;
    doubled.n_sims = 1200;
    const SimulationResult a = simulate(fit, base, 100);
    const SimulationResult b = simulate(fit, doubled, 100);
    CHECK(std::abs(a.bands.at(0.95)[8].second - b.bands.at(0.95)[8].second) < 3.0 * se + 1e-12);
}

TEST_CASE("shock validation") {
    const ArdlEcmFit fit = synthetic_fit(-0.5, 0.3, 1.0, 0.2, 4.0, 0.01, 1e-4);
    CHECK_THROWS_AS(simulate(fit, shock_of(-0.21, 25, 20), 1), ValidationError);   // at >= horizon
    CHECK_THROWS_AS(simulate(fit, shock_of(-0.21, 0, 20), 1), ValidationError);    // at == 0
    CHECK_THROWS_AS(simulate(fit, shock_of(-1.0), 1), ValidationError);            // -100%
    ShockSpec bad = shock_of(-0.21);
    bad.target = "z";
    CHECK_THROWS_WITH_AS(simulate(fit, bad, 1), doctest::Contains("not a regressor"),
                         ValidationError);
    ShockSpec none = shock_of(-0.21);
    none.n_sims = 0;
    CHECK_THROWS_AS(simulate(fit, none, 1), ValidationError);
}

TEST_CASE("non-positive-definite covariance is repaired with a warning flag") {
    ArdlEcmFit fit = synthetic_fit(-0.5, 0.3, 1.0, 0.2, 4.0, 0.01, 1e-4);
    fit.ols.cov(1, 1) = -1e-6;  // slightly indefinite
    const SimulationResult r = simulate(fit, shock_of(-0.1, 5, 15, 50), 3);
    CHECK(r.cov_repaired);
    for (double v : r.mean_path) CHECK(std::isfinite(v));
}

TEST_CASE("explosive recursion raises a diverged error naming the draw") {
    const ArdlEcmFit fit = synthetic_fit(1.5, 0.3, 1.0, 0.2, 4.0, 1.0, 1e-6);
    CHECK_THROWS_WITH_AS(simulate(fit, shock_of(-0.21, 5, 20, 10), 1),
                         doctest::Contains("draw"), NumericError);
}
