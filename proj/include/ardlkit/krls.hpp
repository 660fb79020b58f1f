#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace ardlkit {

/// Per-feature summary of the pointwise-derivative distribution.
struct MarginalEffect {
    std::string name;
    double average = 0.0;
    double se = 0.0;       ///< closed-form from the coefficient covariance
    double t = 0.0;
    double p_value = 1.0;
    double p25 = 0.0;
    double p50 = 0.0;
    double p75 = 0.0;
    double iqr_over_avg = 0.0;  ///< heterogeneity indicator, reported only
};

/// Gaussian-kernel regularized least squares fit.
struct KrlsFit {
    std::vector<std::string> feature_names;
    Eigen::MatrixXd X_std;          ///< standardized features (mean 0, sd 1)
    Eigen::VectorXd x_mean;
    Eigen::VectorXd x_scale;
    double y_mean = 0.0;
    Eigen::MatrixXd K;
    Eigen::VectorXd c;              ///< solves (K + lambda*I) c = y_centered
    double lambda = 0.0;
    bool lambda_from_loo = false;   ///< chosen by leave-one-out search
    double sigma2_kernel = 0.0;     ///< bandwidth, default = number of features
    Eigen::VectorXd fitted;         ///< in original y units
    double r2 = 0.0;
    double sigma2_noise = 0.0;      ///< SSR / n, used by the variance estimator
    double loo_error = 0.0;         ///< at the chosen lambda
    Eigen::MatrixXd derivatives;    ///< N x D pointwise effects, original units
    std::vector<MarginalEffect> effects;
};

/// K_ij = exp(-||x_i - x_j||^2 / sigma2) on already standardized rows.
Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& X_std, double sigma2);

/// Fits KRLS: standardizes X, centers y, picks lambda by minimizing the
/// closed-form leave-one-out error over log-lambda in [1e-6, 1e3] via
/// golden-section search (unless given), solves (K + lambda I)c = y through
/// the eigendecomposition of K, and fills in fitted values, pointwise
/// derivatives and the marginal-effect summaries.
KrlsFit fit_krls(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                 const std::vector<std::string>& names,
                 std::optional<double> lambda = std::nullopt,
                 std::optional<double> sigma2 = std::nullopt);

/// Analytic gradient of the fitted surface at every sample point, in
/// original feature units:
///   d yhat / d x_d |_{x_j} = (-2/sigma2) sum_i c_i (x_jd - x_id) K_ji / scale_d.
Eigen::MatrixXd pointwise_derivatives(const KrlsFit& fit);

/// Prediction of the fitted surface at an arbitrary standardized point.
double predict_std(const KrlsFit& fit, const Eigen::VectorXd& x_std);

}  // namespace ardlkit
