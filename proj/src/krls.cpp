#include "ardlkit/krls.hpp"

#include <algorithm>
#include <cmath>

#include "ardlkit/errors.hpp"
#include "ardlkit/stats.hpp"

namespace ardlkit {

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& X_std, double sigma2) {
    if (sigma2 <= 0.0) throw ValidationError("kernel bandwidth sigma2 must be positive");
    const Eigen::Index n = X_std.rows();
    const Eigen::VectorXd sq = X_std.rowwise().squaredNorm();
    Eigen::MatrixXd d2 = sq.replicate(1, n) + sq.transpose().replicate(n, 1) -
                         2.0 * X_std * X_std.transpose();
    d2 = d2.cwiseMax(0.0);  // roundoff can drive tiny distances negative
    return (-d2 / sigma2).array().exp();
}

namespace {

struct LooState {
    const Eigen::MatrixXd& Q;        // eigenvectors of K
    const Eigen::VectorXd& eigs;     // eigenvalues of K
    const Eigen::VectorXd& qty;      // Q' * y_centered

    // Leave-one-out squared error at a given lambda:
    //   c_i / (G^-1)_ii with G = K + lambda I, all via the eigenbasis.
    double operator()(double lambda, Eigen::VectorXd* c_out = nullptr) const {
        const Eigen::Index n = Q.rows();
        const Eigen::VectorXd inv = (eigs.array() + lambda).inverse();
        const Eigen::VectorXd c = Q * qty.cwiseProduct(inv);
        const Eigen::MatrixXd Qs = Q.array().square().matrix();
        const Eigen::VectorXd ginv_diag = Qs * inv;
        double err = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double e = c(i) / ginv_diag(i);
            err += e * e;
        }
        if (c_out) *c_out = c;
        return err;
    }
};

// Golden-section minimum of f over [lo, hi] (log-lambda scale).
double golden_section(const LooState& f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(std::exp(x1));
    double f2 = f(std::exp(x2));
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(std::exp(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(std::exp(x2));
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

KrlsFit fit_krls(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                 const std::vector<std::string>& names, std::optional<double> lambda,
                 std::optional<double> sigma2) {
    const Eigen::Index n = X.rows();
    const Eigen::Index d = X.cols();
    if (static_cast<std::size_t>(d) != names.size())
        throw ValidationError("fit_krls: one name per feature column required");
    if (y.size() != n) throw ValidationError("fit_krls: response length mismatch");
    if (n < d + 2)
        throw DataError("fit_krls: need at least D + 2 observations, have " + std::to_string(n));

    KrlsFit fit;
    fit.feature_names = names;
    fit.x_mean = X.colwise().mean();
    fit.x_scale.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::ArrayXd cj = X.col(j).array() - fit.x_mean(j);
        const double var = cj.square().sum() / static_cast<double>(n - 1);
        if (var <= 0.0)
            throw DataError("degenerate feature '" + names[static_cast<std::size_t>(j)] +
                            "': zero variance");
        fit.x_scale(j) = std::sqrt(var);
    }
    fit.X_std = (X.rowwise() - fit.x_mean.transpose()).array().rowwise() /
                fit.x_scale.transpose().array();

    fit.sigma2_kernel = sigma2.value_or(static_cast<double>(d));
    fit.K = kernel_matrix(fit.X_std, fit.sigma2_kernel);

    fit.y_mean = y.mean();
    const Eigen::VectorXd yc = y.array() - fit.y_mean;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fit.K);
    if (es.info() != Eigen::Success)
        throw NumericError("eigendecomposition of the kernel matrix failed");
    const Eigen::MatrixXd& Q = es.eigenvectors();
    const Eigen::VectorXd eigs = es.eigenvalues().cwiseMax(0.0);
    const Eigen::VectorXd qty = Q.transpose() * yc;
    const LooState loo{Q, eigs, qty};

    if (lambda) {
        if (*lambda <= 0.0) throw ValidationError("lambda must be positive");
        fit.lambda = *lambda;
    } else {
        const double t = golden_section(loo, std::log(1e-6), std::log(1e3), 1e-4);
        fit.lambda = std::exp(t);
        fit.lambda_from_loo = true;
    }
    Eigen::VectorXd c;
    fit.loo_error = loo(fit.lambda, &c);
    fit.c = c;

    fit.fitted = fit.K * fit.c;
    const double ssr = (yc - fit.fitted).squaredNorm();
    const double sst = yc.squaredNorm();
    fit.r2 = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
    fit.sigma2_noise = ssr / static_cast<double>(n);
    fit.fitted.array() += fit.y_mean;

    fit.derivatives = pointwise_derivatives(fit);

    // Average effects with closed-form variance: the average derivative is a
    // linear form w'c, and Var(c) = sigma2_noise * G^-2 with G = K + lambda I.
    const Eigen::VectorXd rowsum = fit.K.rowwise().sum();
    for (Eigen::Index j = 0; j < d; ++j) {
        MarginalEffect me;
        me.name = names[static_cast<std::size_t>(j)];
        me.average = fit.derivatives.col(j).mean();

        const Eigen::VectorXd xd = fit.X_std.col(j);
        const double scale = -2.0 / (fit.sigma2_kernel * static_cast<double>(n) * fit.x_scale(j));
        const Eigen::VectorXd w = scale * (fit.K * xd - xd.cwiseProduct(rowsum));
        const Eigen::VectorXd ginv_w =
            Q * (Q.transpose() * w).cwiseQuotient((eigs.array() + fit.lambda).matrix());
        me.se = std::sqrt(std::max(0.0, fit.sigma2_noise * ginv_w.squaredNorm()));
        me.t = me.se > 0.0 ? me.average / me.se : 0.0;
        me.p_value = me.se > 0.0 ? 2.0 * (1.0 - stats::normal_cdf(std::abs(me.t))) : 1.0;

        std::vector<double> col(fit.derivatives.col(j).data(),
                                fit.derivatives.col(j).data() + n);
        std::sort(col.begin(), col.end());
        me.p25 = stats::quantile_sorted(col, 0.25);
        me.p50 = stats::quantile_sorted(col, 0.50);
        me.p75 = stats::quantile_sorted(col, 0.75);
        me.iqr_over_avg = (me.p75 - me.p25) / std::max(std::abs(me.average), 1e-12);
        fit.effects.push_back(me);
    }
    return fit;
}

Eigen::MatrixXd pointwise_derivatives(const KrlsFit& fit) {
    const Eigen::Index n = fit.X_std.rows();
    const Eigen::Index d = fit.X_std.cols();
    Eigen::MatrixXd deriv(n, d);
    const Eigen::VectorXd kc = fit.K * fit.c;
    for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::VectorXd xd = fit.X_std.col(j);
        // (-2/s2) * [ x_jd (Kc)_j - (K (c .* x_d))_j ], then back to raw units.
        deriv.col(j) = (-2.0 / fit.sigma2_kernel) *
                       (xd.cwiseProduct(kc) - fit.K * fit.c.cwiseProduct(xd)) / fit.x_scale(j);
    }
    return deriv;
}

double predict_std(const KrlsFit& fit, const Eigen::VectorXd& x_std) {
    const Eigen::Index n = fit.X_std.rows();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d2 = (fit.X_std.row(i).transpose() - x_std).squaredNorm();
        acc += fit.c(i) * std::exp(-d2 / fit.sigma2_kernel);
    }
    return acc + fit.y_mean;
}

}  // namespace ardlkit
