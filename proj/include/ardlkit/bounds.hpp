#pragma once

#include <map>
#include <string>

#include "ardlkit/ardl.hpp"

namespace ardlkit {

/// Lower/upper critical bound pair: `i0` assumes all regressors are I(0),
/// `i1` assumes all are I(1).
struct BoundPair {
    double i0 = 0.0;
    double i1 = 0.0;
};

enum class BoundsDecision { Cointegration, NoCointegration, Inconclusive };

std::string to_string(BoundsDecision d);

/// Bounds cointegration test on the joint nullity of the lagged-level
/// coefficients.
struct BoundsTestResult {
    double f_stat = 0.0;
    double t_stat = 0.0;                     ///< t on the lagged dependent level
    int k = 0;                               ///< number of long-run regressors
    int nobs = 0;
    std::map<double, BoundPair> f_bounds;    ///< level -> bounds
    std::map<double, BoundPair> t_bounds;
    double p_f_i0 = 1.0, p_f_i1 = 1.0;       ///< approximate p-values vs each bound
    double p_t_i0 = 1.0, p_t_i1 = 1.0;
    BoundsDecision decision = BoundsDecision::Inconclusive;  ///< at the 5% level
    std::string note;
};

/// Tabulated asymptotic critical bound; `stat` is "F" or "t". Case III
/// (unrestricted intercept, no trend) for k in 1..6; case V (unrestricted
/// intercept and trend) for k = 4 only. Other k raise ValidationError.
BoundPair pss_bound(const std::string& stat, bool trend, int k, double level);

/// Pure decision rule: cointegration only when F is above its I(1) bound and
/// t below its I(1) bound; any statistic landing between its bounds makes the
/// outcome inconclusive; anything else is no-cointegration. `note` explains.
BoundsDecision bounds_decide(double f, double t, const BoundPair& f_bounds,
                             const BoundPair& t_bounds, std::string& note);

/// Runs the bounds test on a fitted EC model: F restricts every level
/// coefficient to zero (computed by refitting, see wald_f_test), t is the
/// ratio on the lagged dependent level. Decision at 5%: cointegration only
/// when F exceeds its I(1) bound and t is below (more negative than) its I(1)
/// bound; a statistic between its bounds makes the outcome inconclusive.
BoundsTestResult bounds_test(const ArdlEcmFit& fit);

}  // namespace ardlkit
