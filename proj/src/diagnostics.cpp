#include "ardlkit/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ardlkit/errors.hpp"
#include "ardlkit/stats.hpp"

namespace ardlkit {

BgTestResult breusch_godfrey(const OlsFit& fit, int lags) {
    if (lags < 1) throw ValidationError("breusch_godfrey requires lags >= 1");
    const int n = fit.nobs;
    const int k = static_cast<int>(fit.names.size());
    if (n <= k + lags)
        throw DataError("insufficient sample for breusch_godfrey with " + std::to_string(lags) +
                        " lags");

    DesignBuilder builder(n);
    for (int c = 0; c < k; ++c) builder.add(fit.names[static_cast<std::size_t>(c)],
                                            Eigen::VectorXd(fit.X.col(c)));
    for (int j = 1; j <= lags; ++j) {
        Eigen::VectorXd lagged = Eigen::VectorXd::Zero(n);  // zero-filled head
        for (int t = j; t < n; ++t) lagged(t) = fit.residuals(t - j);
        builder.add("u.L" + std::to_string(j), lagged);
    }
    const OlsFit aux = fit_ols(builder.build(), fit.residuals);

    BgTestResult r;
    r.lags = lags;
    r.lm_stat = static_cast<double>(n) * aux.r2;
    r.p_value = stats::chi2_sf(r.lm_stat, static_cast<double>(lags));
    return r;
}

ImTestResult im_test(const OlsFit& fit) {
    const int n = fit.nobs;
    const int k = static_cast<int>(fit.names.size());
    const double sigma2 = fit.residuals.squaredNorm() / static_cast<double>(n);

    // Cross-products x_i * x_j (i <= j) over all columns including the
    // intercept; the constant*constant product is the auxiliary intercept.
    // Constant products are skipped outright and a rank-revealing QR pass
    // drops whatever duplicates remain (e.g. dummy*dummy = dummy). When the
    // sample cannot carry the full product set, fall back to levels+squares,
    // then to levels alone.
    std::vector<Eigen::VectorXd> candidates;
    std::string product_set;
    const int int_col = [&] {
        for (int c = 0; c < k; ++c)
            if (fit.names[static_cast<std::size_t>(c)] == "const") return c;
        return -1;
    }();
    for (const std::string set : {"full", "squares", "levels"}) {
        candidates.clear();
        product_set = set;
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                const bool is_square = i == j;
                const bool has_const = i == int_col || j == int_col;
                if (set == "squares" && !(is_square || has_const)) continue;
                if (set == "levels" && !has_const) continue;
                Eigen::VectorXd prod = fit.X.col(i).cwiseProduct(fit.X.col(j));
                const double variation = (prod.array() - prod.mean()).matrix().norm();
                if (variation < 1e-12 * std::max(1.0, prod.norm())) continue;
                candidates.push_back(std::move(prod));
            }
        }
        if (static_cast<int>(candidates.size()) + 2 < n) break;
    }
    if (candidates.empty()) throw DataError("im_test: no non-degenerate cross-products");
    if (static_cast<int>(candidates.size()) + 2 >= n)
        throw DataError("im_test: sample too small even for the levels-only auxiliary "
                        "regression");

    Eigen::MatrixXd cand(n, 1 + static_cast<Eigen::Index>(candidates.size()));
    cand.col(0).setOnes();
    for (std::size_t c = 0; c < candidates.size(); ++c)
        cand.col(1 + static_cast<Eigen::Index>(c)) = candidates[c];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    qr.setThreshold(std::numeric_limits<double>::epsilon() *
                    static_cast<double>(std::max<Eigen::Index>(cand.rows(), cand.cols())));
    qr.compute(cand);
    const int rank = static_cast<int>(qr.rank());
    std::vector<bool> keep(candidates.size() + 1, false);
    for (int i = 0; i < rank; ++i)
        keep[static_cast<std::size_t>(qr.colsPermutation().indices()(i))] = true;

    DesignBuilder builder(n);
    builder.intercept();
    int kept = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!keep[c + 1]) continue;
        builder.add("p" + std::to_string(c), candidates[c]);
        ++kept;
    }
    if (kept == 0) throw DataError("im_test: every cross-product is degenerate");

    ImTestResult r;
    r.product_set = product_set;
    r.dropped_product_columns = static_cast<int>(candidates.size()) - kept;

    const Eigen::VectorXd u2 = fit.residuals.array().square();
    const OlsFit het_aux = fit_ols(builder.build(), u2);
    r.heteroskedasticity.stat = static_cast<double>(n) * het_aux.r2;
    r.heteroskedasticity.dof = kept;
    r.heteroskedasticity.p_value = stats::chi2_sf(r.heteroskedasticity.stat,
                                                  static_cast<double>(r.heteroskedasticity.dof));

    // Skewness: u^3/s^3 on the slope regressors.
    {
        DesignBuilder sb(n);
        sb.intercept();
        int slopes = 0;
        for (int c = 0; c < k; ++c) {
            if (fit.names[static_cast<std::size_t>(c)] == "const") continue;
            sb.add(fit.names[static_cast<std::size_t>(c)], Eigen::VectorXd(fit.X.col(c)));
            ++slopes;
        }
        if (slopes == 0) throw DataError("im_test needs at least one slope regressor");
        const Eigen::VectorXd u3 = fit.residuals.array().cube() / std::pow(sigma2, 1.5);
        const OlsFit skew_aux = fit_ols(sb.build(), u3);
        r.skewness.stat = static_cast<double>(n) * skew_aux.r2;
        r.skewness.dof = slopes;
        r.skewness.p_value = stats::chi2_sf(r.skewness.stat, static_cast<double>(r.skewness.dof));
    }

    // Kurtosis: n * (m4/s^4 - 3)^2 / 24.
    {
        const double m4 = fit.residuals.array().pow(4).mean();
        const double excess = m4 / (sigma2 * sigma2) - 3.0;
        r.kurtosis.stat = static_cast<double>(n) * excess * excess / 24.0;
        r.kurtosis.dof = 1;
        r.kurtosis.p_value = stats::chi2_sf(r.kurtosis.stat, 1.0);
    }

    r.total.stat = r.heteroskedasticity.stat + r.skewness.stat + r.kurtosis.stat;
    r.total.dof = r.heteroskedasticity.dof + r.skewness.dof + r.kurtosis.dof;
    r.total.p_value = stats::chi2_sf(r.total.stat, static_cast<double>(r.total.dof));
    return r;
}

double cusum_band_constant(double level) {
    if (level == 0.10) return 0.850;
    if (level == 0.05) return 0.948;
    if (level == 0.01) return 1.143;
    throw ValidationError("CUSUM band constants tabulated at 10%, 5%, 1%");
}

CusumResult cusum(const Eigen::VectorXd& y, const DesignMatrix& X, double level) {
    const int T = static_cast<int>(X.rows());
    const int k = static_cast<int>(X.cols());
    if (T <= k + 1) throw DataError("cusum needs more than k+1 observations");

    CusumResult r;
    r.a = cusum_band_constant(level);

    // One-step-ahead standardized prediction errors from expanding windows.
    for (int t = k + 1; t <= T; ++t) {
        const int m = t - 1;  // window 1..t-1
        Eigen::MatrixXd Xw = X.X.topRows(m);
        Eigen::VectorXd yw = y.head(m);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xw);
        if (qr.rank() < k)
            throw NumericError("singular expanding-window fit at window 1.." + std::to_string(m));
        const Eigen::VectorXd beta = qr.solve(yw);
        const Eigen::VectorXd xt = X.X.row(t - 1);
        // x'(X'X)^-1 x via the R factor.
        Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
        const Eigen::VectorXd xp = qr.colsPermutation().transpose() * xt;
        const Eigen::VectorXd v = R.transpose().triangularView<Eigen::Lower>().solve(xp);
        const double h = v.squaredNorm();
        const double w = (y(t - 1) - xt.dot(beta)) / std::sqrt(1.0 + h);
        r.recursive_residuals.push_back(w);
        r.t_index.push_back(t);
    }

    const int m = static_cast<int>(r.recursive_residuals.size());  // = T - k
    double wbar = 0.0;
    for (double w : r.recursive_residuals) wbar += w;
    wbar /= static_cast<double>(m);
    double ssw = 0.0;
    for (double w : r.recursive_residuals) ssw += (w - wbar) * (w - wbar);
    r.sigma_w = std::sqrt(ssw / static_cast<double>(std::max(1, m - 1)));
    if (r.sigma_w == 0.0) throw NumericError("recursive residuals have zero variance");

    const double root = std::sqrt(static_cast<double>(T - k));
    double cum = 0.0;
    r.in_bounds = true;
    for (int i = 0; i < m; ++i) {
        cum += r.recursive_residuals[static_cast<std::size_t>(i)];
        const double path = cum / r.sigma_w;
        const double band =
            r.a * (root + 2.0 * static_cast<double>(r.t_index[static_cast<std::size_t>(i)] - k) /
                              root);
        r.path.push_back(path);
        r.upper.push_back(band);
        r.lower.push_back(-band);
        if (!(path < band && path > -band)) r.in_bounds = false;
    }
    return r;
}

JarqueBeraResult jarque_bera(const Eigen::VectorXd& residuals) {
    const int n = static_cast<int>(residuals.size());
    if (n < 4) throw DataError("jarque_bera needs at least 4 residuals");
    const double mean = residuals.mean();
    const Eigen::ArrayXd c = residuals.array() - mean;
    const double m2 = c.square().mean();
    const double m3 = c.cube().mean();
    const double m4 = c.pow(4).mean();

    JarqueBeraResult r;
    r.skewness = m3 / std::pow(m2, 1.5);
    r.kurtosis = m4 / (m2 * m2);
    r.stat = static_cast<double>(n) *
             (r.skewness * r.skewness / 6.0 + (r.kurtosis - 3.0) * (r.kurtosis - 3.0) / 24.0);
    r.p_value = stats::chi2_sf(r.stat, 2.0);
    return r;
}

DiagnosticsReport run_diagnostics(const OlsFit& fit, int bg_lags) {
    DiagnosticsReport rep;
    rep.bg = breusch_godfrey(fit, bg_lags);
    rep.im = im_test(fit);
    DesignMatrix d;
    d.X = fit.X;
    d.names = fit.names;
    rep.cusum = cusum(fit.y, d, 0.05);
    rep.jb = jarque_bera(fit.residuals);
    rep.bg_pass_5pct = rep.bg.p_value > 0.05;
    rep.im_pass_5pct = rep.im.heteroskedasticity.p_value > 0.05;
    rep.cusum_pass_5pct = rep.cusum.in_bounds;
    rep.jb_pass_5pct = rep.jb.p_value > 0.05;
    return rep;
}

}  // namespace ardlkit
