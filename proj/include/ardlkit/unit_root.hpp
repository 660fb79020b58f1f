#pragma once

#include <map>
#include <optional>
#include <string>

#include "ardlkit/timeseries.hpp"

namespace ardlkit {

/// Deterministic terms in the unit-root test regression.
enum class Deterministic { None, Constant, ConstantTrend };

std::string to_string(Deterministic d);
Deterministic deterministic_from_string(const std::string& s);

/// Result of the Phillips-Perron test of H0: the series has a unit root.
struct PPTestResult {
    std::string series;
    Deterministic deterministic = Deterministic::Constant;
    double z_tau = 0.0;               ///< PP-adjusted t statistic
    double rho_t = 0.0;               ///< unadjusted Dickey-Fuller t
    double rho = 0.0;                 ///< coefficient on the lagged level
    double long_run_variance = 0.0;   ///< Newey-West estimate (Bartlett kernel)
    double gamma0 = 0.0;              ///< residual variance (1/n scaling)
    int bandwidth = 0;
    int nobs = 0;                     ///< observations in the test regression
    std::map<double, double> critical_values;  ///< level (0.01/0.05/0.10) -> cv
    std::map<double, bool> reject;             ///< left-tailed: z_tau < cv

    bool reject_at(double level) const;
};

/// Phillips-Perron unit-root test. Runs the regression
///   dy_t = deterministics + rho * y_{t-1} + u_t
/// and corrects the t statistic on rho for serial correlation and
/// heteroskedasticity with the Newey-West long-run variance of u (Bartlett
/// weights 1 - j/(q+1)). Default bandwidth: floor(4*(T/100)^(2/9)). With
/// bandwidth 0 the statistic reduces to the plain Dickey-Fuller t.
///
/// Critical values come from MacKinnon-style response surfaces evaluated at
/// the regression sample size.
PPTestResult pp_test(const TimeSeries& s, Deterministic det = Deterministic::Constant,
                     std::optional<int> bandwidth = std::nullopt);

/// Response-surface critical value for the Dickey-Fuller/PP distribution.
double pp_critical_value(Deterministic det, double level, int nobs);

}  // namespace ardlkit
