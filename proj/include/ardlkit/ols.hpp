#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace ardlkit {

/// Named design matrix, rows time-ordered. Column rank is checked at fit
/// time, not on construction.
struct DesignMatrix {
    Eigen::MatrixXd X;
    std::vector<std::string> names;

    int rows() const { return static_cast<int>(X.rows()); }
    int cols() const { return static_cast<int>(X.cols()); }
    bool has_intercept() const;
    int index_of(const std::string& name) const;  // -1 if absent
};

/// Incremental builder so estimators can assemble designs column by column.
class DesignBuilder {
public:
    explicit DesignBuilder(int rows) : rows_(rows) {}

    DesignBuilder& intercept();                 // column of ones named "const"
    DesignBuilder& trend();                     // 1..n linear trend named "trend"
    DesignBuilder& add(const std::string& name, const Eigen::VectorXd& col);
    DesignBuilder& add(const std::string& name, const std::vector<double>& col);

    DesignMatrix build() const;

private:
    int rows_;
    std::vector<std::string> names_;
    std::vector<Eigen::VectorXd> cols_;
};

/// Ordinary least squares fit. Keeps the design and response so downstream
/// tests (Wald restrictions, diagnostics) can refit without rebuilding.
struct OlsFit {
    std::vector<std::string> names;
    Eigen::VectorXd beta;
    Eigen::MatrixXd cov;        // classical sigma2 * (X'X)^-1
    Eigen::VectorXd residuals;
    Eigen::VectorXd fitted;
    double sigma2 = 0.0;        // SSR / (n - k)
    double ssr = 0.0;
    double r2 = 0.0;            // centered when an intercept is present
    int nobs = 0;
    int dof = 0;                // n - k
    Eigen::MatrixXd X;
    Eigen::VectorXd y;

    int index_of(const std::string& name) const;  // throws if absent
    double coef(const std::string& name) const;
    double se(int i) const;
    double tstat(int i) const;
};

/// Fits by column-pivoted Householder QR (never by explicit normal-equation
/// inversion). Rank tolerance: machine epsilon x max(n, k) relative to the
/// largest column norm; a rank-deficient design raises NumericError naming
/// the dependent columns.
OlsFit fit_ols(const DesignMatrix& X, const Eigen::VectorXd& y);

struct FTestResult {
    double f = 0.0;
    int df1 = 0;
    int df2 = 0;
    double p_value = 1.0;
    double ssr_restricted = 0.0;
    double ssr_unrestricted = 0.0;
};

/// F test that the named coefficients are jointly zero, computed by refitting
/// the restricted model: F = ((SSR_r - SSR_u)/m) / (SSR_u/(n-k)).
FTestResult wald_f_test(const OlsFit& fit, const std::vector<std::string>& zero_restrictions);

}  // namespace ardlkit
