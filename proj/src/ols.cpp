#include "ardlkit/ols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ardlkit/errors.hpp"
#include "ardlkit/stats.hpp"

namespace ardlkit {

bool DesignMatrix::has_intercept() const {
    return index_of("const") >= 0;
}

int DesignMatrix::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

DesignBuilder& DesignBuilder::intercept() {
    return add("const", Eigen::VectorXd::Ones(rows_));
}

DesignBuilder& DesignBuilder::trend() {
    Eigen::VectorXd t(rows_);
    for (int i = 0; i < rows_; ++i) t(i) = static_cast<double>(i + 1);
    return add("trend", t);
}

DesignBuilder& DesignBuilder::add(const std::string& name, const Eigen::VectorXd& col) {
    if (col.size() != rows_)
        throw ValidationError("design column '" + name + "' has " + std::to_string(col.size()) +
                              " rows, expected " + std::to_string(rows_));
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw ValidationError("duplicate design column name '" + name + "'");
    names_.push_back(name);
    cols_.push_back(col);
    return *this;
}

DesignBuilder& DesignBuilder::add(const std::string& name, const std::vector<double>& col) {
    return add(name, Eigen::Map<const Eigen::VectorXd>(col.data(),
                                                       static_cast<Eigen::Index>(col.size())));
}

DesignMatrix DesignBuilder::build() const {
    DesignMatrix d;
    d.names = names_;
    d.X.resize(rows_, static_cast<Eigen::Index>(cols_.size()));
    for (std::size_t c = 0; c < cols_.size(); ++c) d.X.col(static_cast<Eigen::Index>(c)) = cols_[c];
    return d;
}

int OlsFit::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw ValidationError("no coefficient named '" + name + "' in fit");
}

double OlsFit::coef(const std::string& name) const { return beta(index_of(name)); }

double OlsFit::se(int i) const { return std::sqrt(cov(i, i)); }

double OlsFit::tstat(int i) const { return beta(i) / se(i); }

OlsFit fit_ols(const DesignMatrix& d, const Eigen::VectorXd& y) {
    const int n = d.rows();
    const int k = d.cols();
    if (k == 0) throw ValidationError("design matrix has no columns");
    if (y.size() != n)
        throw ValidationError("response has " + std::to_string(y.size()) + " rows, design has " +
                              std::to_string(n));
    if (n <= k)
        throw DataError("insufficient sample: " + std::to_string(n) + " observations for " +
                        std::to_string(k) + " coefficients");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    qr.setThreshold(std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(n, k)));
    qr.compute(d.X);
    const int rank = static_cast<int>(qr.rank());
    if (rank < k) {
        // Pivot order puts the dependent columns last.
        const auto& perm = qr.colsPermutation().indices();
        std::string dependent;
        for (int i = rank; i < k; ++i) {
            if (!dependent.empty()) dependent += ", ";
            dependent += d.names[static_cast<std::size_t>(perm(i))];
        }
        throw NumericError("singular design: column(s) " + dependent +
                           " linearly dependent on the others");
    }

    OlsFit fit;
    fit.names = d.names;
    fit.X = d.X;
    fit.y = y;
    fit.beta = qr.solve(y);
    fit.fitted = d.X * fit.beta;
    fit.residuals = y - fit.fitted;
    fit.ssr = fit.residuals.squaredNorm();
    fit.nobs = n;
    fit.dof = n - k;
    fit.sigma2 = fit.ssr / static_cast<double>(fit.dof);

    // (X'X)^-1 from the R factor: X P = Q R  =>  (X'X)^-1 = P (R'R)^-1 P'.
    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    Eigen::MatrixXd xtx_inv = Rinv * Rinv.transpose();
    xtx_inv = qr.colsPermutation() * xtx_inv * qr.colsPermutation().transpose();
    fit.cov = fit.sigma2 * xtx_inv;
    fit.cov = 0.5 * (fit.cov + fit.cov.transpose()).eval();

    if (d.has_intercept()) {
        const double ybar = y.mean();
        const double sst = (y.array() - ybar).matrix().squaredNorm();
        fit.r2 = sst > 0.0 ? 1.0 - fit.ssr / sst : 1.0;
    } else {
        const double sst = y.squaredNorm();
        fit.r2 = sst > 0.0 ? 1.0 - fit.ssr / sst : 1.0;
    }
    return fit;
}

FTestResult wald_f_test(const OlsFit& fit, const std::vector<std::string>& zero_restrictions) {
    if (zero_restrictions.empty())
        throw ValidationError("wald_f_test needs a non-empty restriction set");
    std::vector<int> drop;
    drop.reserve(zero_restrictions.size());
    for (const auto& name : zero_restrictions) drop.push_back(fit.index_of(name));

    const int k = static_cast<int>(fit.names.size());
    const int m = static_cast<int>(drop.size());
    DesignBuilder builder(fit.nobs);
    for (int c = 0; c < k; ++c) {
        if (std::find(drop.begin(), drop.end(), c) != drop.end()) continue;
        builder.add(fit.names[static_cast<std::size_t>(c)], Eigen::VectorXd(fit.X.col(c)));
    }

    double ssr_restricted;
    if (m == k) {
        // Everything restricted to zero: the restricted model is y = 0.
        ssr_restricted = fit.y.squaredNorm();
    } else {
        ssr_restricted = fit_ols(builder.build(), fit.y).ssr;
    }

    FTestResult r;
    r.df1 = m;
    r.df2 = fit.dof;
    r.ssr_restricted = ssr_restricted;
    r.ssr_unrestricted = fit.ssr;
    // Exact-fit guard: when both models explain y to numerical zero, there is
    // no explanatory loss and the ratio of roundoff residuals is meaningless.
    const double eps = std::numeric_limits<double>::epsilon();
    const double zero = eps * eps * static_cast<double>(fit.nobs) * fit.y.squaredNorm();
    if (ssr_restricted <= zero && fit.ssr <= zero) {
        r.f = 0.0;
    } else {
        r.f = std::max(0.0, ((ssr_restricted - fit.ssr) / static_cast<double>(m)) /
                                (fit.ssr / static_cast<double>(fit.dof)));
    }
    r.p_value = stats::f_sf(r.f, static_cast<double>(r.df1), static_cast<double>(r.df2));
    return r;
}

}  // namespace ardlkit
