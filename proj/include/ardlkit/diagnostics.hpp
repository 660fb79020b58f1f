#pragma once

#include <string>
#include <vector>

#include "ardlkit/ols.hpp"

namespace ardlkit {

struct BgTestResult {
    int lags = 0;
    double lm_stat = 0.0;   ///< n * R^2 of the auxiliary regression
    double p_value = 1.0;   ///< chi-squared with `lags` dof
};

/// Breusch-Godfrey LM test for serial correlation up to `lags`. The auxiliary
/// regression adds lagged residuals to the original design; pre-sample lags
/// are zero-filled (the common convention, which keeps the full sample).
BgTestResult breusch_godfrey(const OlsFit& fit, int lags);

struct ImComponent {
    double stat = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Cameron-Trivedi decomposition of the information-matrix test.
struct ImTestResult {
    ImComponent heteroskedasticity;  ///< n*R^2 of u^2 on unique x_i*x_j products
    ImComponent skewness;            ///< n*R^2 of u^3/s^3 on the slope regressors
    ImComponent kurtosis;            ///< n*((m4/s^4) - 3)^2 / 24
    ImComponent total;               ///< sum of the three
    int dropped_product_columns = 0; ///< duplicate cross-products removed
    /// Product set the sample could support: "full" (levels, squares, cross
    /// terms), "squares" (levels and squares) or "levels". Small samples fall
    /// back automatically; the report notes it.
    std::string product_set = "full";
};

ImTestResult im_test(const OlsFit& fit);

/// Brown-Durbin-Evans CUSUM of standardized recursive residuals.
struct CusumResult {
    std::vector<int> t_index;        ///< observation index k+1..T (1-based)
    std::vector<double> path;        ///< cumulative sum of w_t / sigma_w
    std::vector<double> upper;       ///< +a*(sqrt(T-k) + 2(t-k)/sqrt(T-k))
    std::vector<double> lower;
    std::vector<double> recursive_residuals;
    double sigma_w = 0.0;
    double a = 0.948;                ///< 5% band constant
    bool in_bounds = false;          ///< strict interior at every point
};

/// Significance constants for the CUSUM band: 10% -> 0.850, 5% -> 0.948,
/// 1% -> 1.143 (Brown, Durbin & Evans 1975).
double cusum_band_constant(double level);

CusumResult cusum(const Eigen::VectorXd& y, const DesignMatrix& X, double level = 0.05);

struct JarqueBeraResult {
    double stat = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double p_value = 1.0;
};

/// Residual normality check: n*(S^2/6 + (K-3)^2/24), chi-squared(2).
JarqueBeraResult jarque_bera(const Eigen::VectorXd& residuals);

/// The full post-estimation battery in one record.
struct DiagnosticsReport {
    BgTestResult bg;
    ImTestResult im;
    CusumResult cusum;
    JarqueBeraResult jb;
    bool bg_pass_5pct = false;     ///< no serial correlation at 5%
    bool im_pass_5pct = false;     ///< homoskedasticity at 5%
    bool cusum_pass_5pct = false;  ///< parameter stability at 5%
    bool jb_pass_5pct = false;
};

DiagnosticsReport run_diagnostics(const OlsFit& fit, int bg_lags = 4);

}  // namespace ardlkit
