#include "ardlkit/unit_root.hpp"

#include <cmath>

#include "ardlkit/errors.hpp"
#include "ardlkit/ols.hpp"

namespace ardlkit {

std::string to_string(Deterministic d) {
    switch (d) {
        case Deterministic::None: return "none";
        case Deterministic::Constant: return "constant";
        case Deterministic::ConstantTrend: return "trend";
    }
    return "?";
}

Deterministic deterministic_from_string(const std::string& s) {
    if (s == "none") return Deterministic::None;
    if (s == "constant") return Deterministic::Constant;
    if (s == "trend" || s == "constant+trend") return Deterministic::ConstantTrend;
    throw ValidationError("unknown deterministic case '" + s + "' (none|constant|trend)");
}

namespace {

// Response-surface constants cv(T) = b_inf + b1/T + b2/T^2 + b3/T^3 for the
// Dickey-Fuller t distribution, per deterministic case and level.
// Source: MacKinnon (2010), "Critical Values for Cointegration Tests",
// Queen's Economics Department WP 1227, Table 2 (single-variable case).
struct Surface {
    double b_inf, b1, b2, b3;
    double eval(int t) const {
        const double T = static_cast<double>(t);
        return b_inf + b1 / T + b2 / (T * T) + b3 / (T * T * T);
    }
};

constexpr Surface kNone[3] = {
    {-2.56574, -2.2358, -3.627, 0.0},      // 1%
    {-1.94100, -0.2686, -3.365, 31.223},   // 5%
    {-1.61682, 0.2656, -2.714, 25.364},    // 10%
};
constexpr Surface kConst[3] = {
    {-3.43035, -6.5393, -16.786, -79.433},
    {-2.86154, -2.8903, -4.234, -40.040},
    {-2.56677, -1.5384, -2.809, 0.0},
};
constexpr Surface kTrend[3] = {
    {-3.95877, -9.0531, -28.428, -134.155},
    {-3.41049, -4.3904, -9.036, -45.374},
    {-3.12705, -2.5856, -3.925, -22.380},
};

const Surface* surfaces_for(Deterministic det) {
    switch (det) {
        case Deterministic::None: return kNone;
        case Deterministic::Constant: return kConst;
        case Deterministic::ConstantTrend: return kTrend;
    }
    return kConst;
}

}  // namespace

double pp_critical_value(Deterministic det, double level, int nobs) {
    const Surface* s = surfaces_for(det);
    if (level == 0.01) return s[0].eval(nobs);
    if (level == 0.05) return s[1].eval(nobs);
    if (level == 0.10) return s[2].eval(nobs);
    throw ValidationError("critical values tabulated at 1%, 5%, 10% only");
}

bool PPTestResult::reject_at(double level) const {
    auto it = reject.find(level);
    if (it == reject.end()) throw ValidationError("no decision at the requested level");
    return it->second;
}

PPTestResult pp_test(const TimeSeries& s, Deterministic det, std::optional<int> bandwidth) {
    const std::vector<double> y = s.dense();
    const int T = static_cast<int>(y.size());
    const int n = T - 1;  // regression sample after one lag
    if (n < 10)
        throw DataError("insufficient sample for pp_test: need >= 10 usable observations, have " +
                        std::to_string(n));

    {
        double lo = y[0], hi = y[0];
        for (double v : y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo == 0.0)
            throw DataError("degenerate regression: series '" + s.name + "' is constant");
    }

    Eigen::VectorXd dy(n), ylag(n);
    for (int t = 1; t < T; ++t) {
        dy(t - 1) = y[static_cast<std::size_t>(t)] - y[static_cast<std::size_t>(t - 1)];
        ylag(t - 1) = y[static_cast<std::size_t>(t - 1)];
    }

    DesignBuilder builder(n);
    if (det != Deterministic::None) builder.intercept();
    if (det == Deterministic::ConstantTrend) builder.trend();
    builder.add("y.L1", ylag);
    const OlsFit fit = fit_ols(builder.build(), dy);

    const int rho_idx = fit.index_of("y.L1");
    const double rho = fit.beta(rho_idx);
    const double se_rho = fit.se(rho_idx);
    const double t_rho = rho / se_rho;
    const double s_reg = std::sqrt(fit.sigma2);  // SSR/(n-k)

    int q = bandwidth.value_or(
        static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0))));
    if (q < 0) throw ValidationError("bandwidth must be >= 0");
    if (q >= n) throw ValidationError("bandwidth must be smaller than the sample");

    // Newey-West long-run variance of the residuals, Bartlett kernel.
    const Eigen::VectorXd& u = fit.residuals;
    const double gamma0 = u.squaredNorm() / static_cast<double>(n);
    double lam2 = gamma0;
    for (int j = 1; j <= q; ++j) {
        double gj = 0.0;
        for (int t = j; t < n; ++t) gj += u(t) * u(t - j);
        gj /= static_cast<double>(n);
        const double w = 1.0 - static_cast<double>(j) / (static_cast<double>(q) + 1.0);
        lam2 += 2.0 * w * gj;
    }
    if (lam2 < 0.0) lam2 = 0.0;  // Bartlett weights keep this nonnegative; guard roundoff

    // Phillips-Perron Z_tau (Hamilton 1994, eq. 17.6.12):
    //   Z_tau = sqrt(g0/l2) * t - (l2 - g0) * n * se(rho) / (2 * sqrt(l2) * s)
    double z_tau;
    if (lam2 == 0.0) {
        z_tau = t_rho;
    } else {
        z_tau = std::sqrt(gamma0 / lam2) * t_rho -
                (lam2 - gamma0) * static_cast<double>(n) * se_rho /
                    (2.0 * std::sqrt(lam2) * s_reg);
    }

    PPTestResult r;
    r.series = s.name;
    r.deterministic = det;
    r.z_tau = z_tau;
    r.rho_t = t_rho;
    r.rho = rho;
    r.long_run_variance = lam2;
    r.gamma0 = gamma0;
    r.bandwidth = q;
    r.nobs = n;
    for (double level : {0.01, 0.05, 0.10}) {
        const double cv = pp_critical_value(det, level, n);
        r.critical_values[level] = cv;
        r.reject[level] = z_tau < cv;
    }
    return r;
}

}  // namespace ardlkit
