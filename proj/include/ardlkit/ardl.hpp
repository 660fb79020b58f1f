#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ardlkit/dataset.hpp"
#include "ardlkit/ols.hpp"

namespace ardlkit {

/// Lag-order selection criterion.
enum class Criterion { AIC, BIC };

Criterion criterion_from_string(const std::string& s);
std::string to_string(Criterion c);

/// Specification of the conditional error-correction regression. `p` and `q`
/// are the orders of the underlying levels ARDL(p, q_1..q_k): the EC design
/// carries p-1 lagged differences of the dependent, q_k difference terms of
/// regressor k (contemporaneous first; q_k = 0 means the regressor enters
/// only through its lagged level), and the one-period-lagged levels of
/// everything.
struct ModelSpec {
    std::string dependent;
    std::vector<std::string> regressors;
    int p = 1;
    std::vector<int> q;  // one entry per regressor
    bool trend = false;  // constant is always included (PSS case III default)

    void validate() const;
    int total_lags() const;
};

/// One long-run coefficient recovered from the level terms.
struct LongRunCoef {
    std::string name;
    double estimate = 0.0;
    double se = 0.0;  // delta method
    double t = 0.0;
    double p_value = 1.0;
};

/// Estimated error-correction model. `lambda` holds the level coefficients
/// (dependent first), `short_run` the difference-term coefficients, and
/// `long_run` the derived equilibrium effects -lambda_{j+1}/lambda_1.
struct ArdlEcmFit {
    ModelSpec spec;
    OlsFit ols;
    std::vector<std::string> level_names;      // "<dep>.L1", "<x1>.L1", ...
    std::vector<double> lambda;                // level coefficients
    std::vector<std::string> short_run_names;  // difference columns
    std::vector<double> short_run;
    double speed_of_adjustment = 0.0;          // lambda_1
    bool long_run_defined = false;             // |lambda_1| above tolerance
    bool long_run_reliable = false;            // lambda_1 also significant
    bool ec_sign_ok = false;                   // lambda_1 < 0 (flag, not error)
    std::vector<LongRunCoef> long_run;
    int sample_start_year = 0;
    int sample_end_year = 0;
};

/// Builds and fits the EC regression on the dataset's aligned sample.
ArdlEcmFit fit_ecm(const Dataset& d, const ModelSpec& spec);

/// Fills the derived blocks (lambda, short_run, long_run, flags) from an
/// already populated ols/spec/name layout. fit_ecm calls this itself; the
/// artifact loader reuses it so a reloaded fit carries identical statistics.
void finalize_ecm_fit(ArdlEcmFit& fit);

/// Exhaustive (p, q_1..q_k) grid search, every candidate fitted on the common
/// shortest sample so criteria are comparable. Ties break toward fewer total
/// lags, then lexicographically smaller (p, q_1, ..., q_k).
ModelSpec select_lags(const Dataset& d, const ModelSpec& base, int p_max, int q_max,
                      Criterion criterion);

}  // namespace ardlkit
