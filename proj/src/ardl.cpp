#include "ardlkit/ardl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ardlkit/errors.hpp"
#include "ardlkit/stats.hpp"

namespace ardlkit {

Criterion criterion_from_string(const std::string& s) {
    if (s == "aic" || s == "AIC") return Criterion::AIC;
    if (s == "bic" || s == "BIC") return Criterion::BIC;
    throw ValidationError("unknown criterion '" + s + "' (aic|bic)");
}

std::string to_string(Criterion c) { return c == Criterion::AIC ? "aic" : "bic"; }

void ModelSpec::validate() const {
    if (dependent.empty()) throw ValidationError("model spec: dependent series unset");
    if (regressors.empty()) throw ValidationError("model spec: no regressors");
    if (p < 1) throw ValidationError("model spec: p must be >= 1");
    if (q.size() != regressors.size())
        throw ValidationError("model spec: need one q per regressor");
    for (int qi : q)
        if (qi < 0) throw ValidationError("model spec: q must be >= 0");
}

int ModelSpec::total_lags() const {
    int total = p;
    for (int qi : q) total += qi;
    return total;
}

namespace {

struct EcmDesign {
    DesignMatrix X;
    Eigen::VectorXd dy;
    std::vector<std::string> level_names;
    std::vector<std::string> short_run_names;
    int start_year = 0;
    int end_year = 0;
};

// Assembles the EC regression rows t = t0..T-1 of
//   dy_t = const (+ trend) + sum dy lags + sum dx lags + levels_{t-1}
// `t0_override` lets the lag search pin every candidate to one common sample.
EcmDesign build_ecm_design(const Dataset& d, const ModelSpec& spec,
                           std::optional<int> t0_override = std::nullopt) {
    spec.validate();
    const TimeSeries& dep = d.get(spec.dependent);
    std::vector<std::vector<double>> xs;
    xs.reserve(spec.regressors.size());
    const std::vector<double> y = dep.dense();
    for (const auto& name : spec.regressors) {
        const TimeSeries& x = d.get(name);
        if (x.start_year() != dep.start_year() || x.size() != dep.size())
            throw DataError("series '" + name + "' not aligned with '" + spec.dependent +
                            "'; align the dataset first");
        xs.push_back(x.dense());
    }

    const int T = static_cast<int>(y.size());
    int t0 = std::max(spec.p, 1);
    for (int qi : spec.q) t0 = std::max(t0, qi);
    if (t0_override) {
        if (*t0_override < t0) throw ValidationError("t0 override smaller than required lags");
        t0 = *t0_override;
    }
    const int n = T - t0;
    const int ncols = 1 + (spec.trend ? 1 : 0) + (spec.p - 1) +
                      std::accumulate(spec.q.begin(), spec.q.end(), 0) + 1 +
                      static_cast<int>(spec.regressors.size());
    if (n <= ncols + 5)
        throw DataError("insufficient sample: " + std::to_string(n) + " usable rows for " +
                        std::to_string(ncols) + " coefficients (need > k + 5)");

    auto diff_at = [](const std::vector<double>& v, int t) { return v[t] - v[t - 1]; };

    EcmDesign out;
    DesignBuilder builder(n);
    builder.intercept();
    if (spec.trend) builder.trend();

    Eigen::VectorXd col(n);
    for (int i = 1; i <= spec.p - 1; ++i) {
        for (int r = 0; r < n; ++r) col(r) = diff_at(y, t0 + r - i);
        const std::string nm = "d." + spec.dependent + ".L" + std::to_string(i);
        builder.add(nm, col);
        out.short_run_names.push_back(nm);
    }
    for (std::size_t kx = 0; kx < xs.size(); ++kx) {
        for (int j = 0; j <= spec.q[kx] - 1; ++j) {
            for (int r = 0; r < n; ++r) col(r) = diff_at(xs[kx], t0 + r - j);
            std::string nm = "d." + spec.regressors[kx];
            if (j > 0) nm += ".L" + std::to_string(j);
            builder.add(nm, col);
            out.short_run_names.push_back(nm);
        }
    }
    {
        for (int r = 0; r < n; ++r) col(r) = y[static_cast<std::size_t>(t0 + r - 1)];
        const std::string nm = spec.dependent + ".L1";
        builder.add(nm, col);
        out.level_names.push_back(nm);
    }
    for (std::size_t kx = 0; kx < xs.size(); ++kx) {
        for (int r = 0; r < n; ++r) col(r) = xs[kx][static_cast<std::size_t>(t0 + r - 1)];
        const std::string nm = spec.regressors[kx] + ".L1";
        builder.add(nm, col);
        out.level_names.push_back(nm);
    }

    out.X = builder.build();
    out.dy.resize(n);
    for (int r = 0; r < n; ++r) out.dy(r) = diff_at(y, t0 + r);
    out.start_year = dep.years[static_cast<std::size_t>(t0)];
    out.end_year = dep.years.back();
    return out;
}

}  // namespace

void finalize_ecm_fit(ArdlEcmFit& fit) {
    fit.lambda.clear();
    fit.short_run.clear();
    fit.long_run.clear();
    for (const auto& nm : fit.level_names) fit.lambda.push_back(fit.ols.coef(nm));
    for (const auto& nm : fit.short_run_names) fit.short_run.push_back(fit.ols.coef(nm));

    const double lambda1 = fit.lambda.front();
    fit.speed_of_adjustment = lambda1;
    fit.ec_sign_ok = lambda1 < 0.0;

    const double tol = std::sqrt(std::numeric_limits<double>::epsilon());
    fit.long_run_defined = std::abs(lambda1) > tol;
    const int i1 = fit.ols.index_of(fit.level_names.front());
    fit.long_run_reliable = fit.long_run_defined && std::abs(fit.ols.tstat(i1)) >= 2.0;

    if (fit.long_run_defined) {
        for (std::size_t j = 1; j < fit.level_names.size(); ++j) {
            const int ij = fit.ols.index_of(fit.level_names[j]);
            const double lj = fit.ols.beta(ij);
            LongRunCoef lr;
            lr.name = fit.spec.regressors[j - 1];
            lr.estimate = -lj / lambda1;
            // Delta method for g(a,b) = -b/a with a = lambda_1, b = lambda_j:
            // grad = (b/a^2, -1/a).
            const double ga = lj / (lambda1 * lambda1);
            const double gb = -1.0 / lambda1;
            const double var = ga * ga * fit.ols.cov(i1, i1) + gb * gb * fit.ols.cov(ij, ij) +
                               2.0 * ga * gb * fit.ols.cov(i1, ij);
            lr.se = std::sqrt(std::max(0.0, var));
            lr.t = lr.se > 0.0 ? lr.estimate / lr.se : 0.0;
            lr.p_value = lr.se > 0.0
                             ? stats::t_pvalue_two_sided(lr.t, static_cast<double>(fit.ols.dof))
                             : 1.0;
            fit.long_run.push_back(lr);
        }
    }
}

ArdlEcmFit fit_ecm(const Dataset& d, const ModelSpec& spec) {
    EcmDesign design = build_ecm_design(d, spec);
    ArdlEcmFit fit;
    fit.spec = spec;
    fit.ols = fit_ols(design.X, design.dy);
    fit.level_names = design.level_names;
    fit.short_run_names = design.short_run_names;
    fit.sample_start_year = design.start_year;
    fit.sample_end_year = design.end_year;
    finalize_ecm_fit(fit);
    return fit;
}

ModelSpec select_lags(const Dataset& d, const ModelSpec& base, int p_max, int q_max,
                      Criterion criterion) {
    if (p_max < 1) throw ValidationError("p_max must be >= 1");
    if (q_max < 0) throw ValidationError("q_max must be >= 0");
    const int k = static_cast<int>(base.regressors.size());
    if (k == 0) throw ValidationError("select_lags: no regressors");

    // All candidates share the sample implied by the maximal orders.
    const int t0 = std::max({p_max, q_max, 1});

    ModelSpec best;
    double best_ic = std::numeric_limits<double>::infinity();
    int best_total = std::numeric_limits<int>::max();
    std::vector<int> best_code;
    bool any = false;

    std::vector<int> qs(static_cast<std::size_t>(k), 0);
    while (true) {
        for (int p = 1; p <= p_max; ++p) {
            ModelSpec cand = base;
            cand.p = p;
            cand.q = qs;
            try {
                EcmDesign design = build_ecm_design(d, cand, t0);
                const OlsFit fit = fit_ols(design.X, design.dy);
                const double n = static_cast<double>(fit.nobs);
                const double kc = static_cast<double>(fit.names.size());
                const double loglik_term = n * std::log(fit.ssr / n);
                const double ic = criterion == Criterion::AIC ? loglik_term + 2.0 * kc
                                                              : loglik_term + kc * std::log(n);
                std::vector<int> code;
                code.push_back(p);
                code.insert(code.end(), qs.begin(), qs.end());
                const int total = cand.total_lags();
                const bool better =
                    !any || ic < best_ic ||
                    (ic == best_ic &&
                     (total < best_total || (total == best_total && code < best_code)));
                if (better) {
                    best = cand;
                    best_ic = ic;
                    best_total = total;
                    best_code = code;
                    any = true;
                }
            } catch (const DataError&) {
                // candidate too large for the sample; skip
            } catch (const NumericError&) {
                // singular candidate design; skip
            }
        }
        // next q combination (odometer)
        int pos = k - 1;
        while (pos >= 0 && qs[static_cast<std::size_t>(pos)] == q_max) {
            qs[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++qs[static_cast<std::size_t>(pos)];
    }

    if (!any)
        throw DataError("insufficient sample: no (p, q) candidate in the grid fits the data");
    return best;
}

}  // namespace ardlkit
