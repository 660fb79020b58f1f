#include "ardlkit/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ardlkit/errors.hpp"

namespace ardlkit {

std::string to_string(BoundsDecision d) {
    switch (d) {
        case BoundsDecision::Cointegration: return "cointegration";
        case BoundsDecision::NoCointegration: return "no-cointegration";
        case BoundsDecision::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Asymptotic critical value bounds transcribed from Pesaran, Shin & Smith
// (2001), "Bounds testing approaches to the analysis of level relationships",
// Journal of Applied Econometrics 16(3).
//   F: Table CI(iii), case III (unrestricted intercept, no trend), k = 1..6
//   t: Table CII(iii), case III, k = 1..6
//   F/t case V rows (unrestricted intercept, unrestricted trend): k = 4 only.
// Levels ordered {10%, 5%, 2.5%, 1%}; each entry {I(0), I(1)}.
constexpr double kLevels[4] = {0.10, 0.05, 0.025, 0.01};

constexpr double kF3[6][4][2] = {
    {{4.04, 4.78}, {4.94, 5.73}, {5.77, 6.68}, {6.84, 7.84}},  // k=1
    {{3.17, 4.14}, {3.79, 4.85}, {4.41, 5.52}, {5.15, 6.36}},  // k=2
    {{2.72, 3.77}, {3.23, 4.35}, {3.69, 4.89}, {4.29, 5.61}},  // k=3
    {{2.45, 3.52}, {2.86, 4.01}, {3.25, 4.49}, {3.74, 5.06}},  // k=4
    {{2.26, 3.35}, {2.62, 3.79}, {2.96, 4.18}, {3.41, 4.68}},  // k=5
    {{2.12, 3.23}, {2.45, 3.61}, {2.75, 3.99}, {3.15, 4.43}},  // k=6
};

constexpr double kT3[6][4][2] = {
    {{-2.57, -2.91}, {-2.86, -3.22}, {-3.13, -3.50}, {-3.43, -3.82}},  // k=1
    {{-2.57, -3.21}, {-2.86, -3.53}, {-3.13, -3.80}, {-3.43, -4.10}},  // k=2
    {{-2.57, -3.46}, {-2.86, -3.78}, {-3.13, -4.05}, {-3.43, -4.37}},  // k=3
    {{-2.57, -3.66}, {-2.86, -3.99}, {-3.13, -4.26}, {-3.43, -4.60}},  // k=4
    {{-2.57, -3.86}, {-2.86, -4.19}, {-3.13, -4.46}, {-3.43, -4.79}},  // k=5
    {{-2.57, -4.04}, {-2.86, -4.38}, {-3.13, -4.66}, {-3.43, -4.99}},  // k=6
};

// Case V, k = 4 (Tables CI(v) / CII(v)).
constexpr double kF5_k4[4][2] = {{3.03, 4.06}, {3.47, 4.57}, {3.89, 5.07}, {4.40, 5.72}};
constexpr double kT5_k4[4][2] = {{-3.13, -4.46}, {-3.41, -4.79}, {-3.65, -5.08}, {-3.96, -5.42}};

int level_index(double level) {
    for (int i = 0; i < 4; ++i)
        if (level == kLevels[i]) return i;
    throw ValidationError("bounds tabulated at 10%, 5%, 2.5%, 1% only");
}

// Approximate p-value against one bound curve: log-linear interpolation of
// the significance level in the statistic, extrapolated with the outermost
// segment slope and clamped to [1e-4, 0.9999]. This is a documented
// approximation to the published response surfaces, not a replica of them.
double approx_p(double stat, const std::array<double, 4>& cvs, bool larger_rejects) {
    std::array<double, 4> s = cvs;
    if (!larger_rejects)
        for (auto& v : s) v = -v;  // map the left-tailed t onto the same code path
    const double x = larger_rejects ? stat : -stat;
    const std::array<double, 4> logp = {std::log(0.10), std::log(0.05), std::log(0.025),
                                        std::log(0.01)};
    double lp;
    if (x <= s[0]) {
        const double slope = (logp[1] - logp[0]) / (s[1] - s[0]);
        lp = logp[0] + slope * (x - s[0]);
    } else if (x >= s[3]) {
        const double slope = (logp[3] - logp[2]) / (s[3] - s[2]);
        lp = logp[3] + slope * (x - s[3]);
    } else {
        int seg = 0;
        while (seg < 3 && x > s[seg + 1]) ++seg;
        const double slope = (logp[seg + 1] - logp[seg]) / (s[seg + 1] - s[seg]);
        lp = logp[seg] + slope * (x - s[seg]);
    }
    return std::clamp(std::exp(lp), 1e-4, 0.9999);
}

std::array<double, 4> bound_curve(const std::string& stat, bool trend, int k, bool upper) {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        const BoundPair b = pss_bound(stat, trend, k, kLevels[i]);
        out[static_cast<std::size_t>(i)] = upper ? b.i1 : b.i0;
    }
    return out;
}

}  // namespace

BoundPair pss_bound(const std::string& stat, bool trend, int k, double level) {
    const int li = level_index(level);
    if (trend) {
        if (k != 4)
            throw ValidationError("trend-case bounds transcribed for k=4 only; k=" +
                                  std::to_string(k) + " unsupported");
        if (stat == "F") return {kF5_k4[li][0], kF5_k4[li][1]};
        if (stat == "t") return {kT5_k4[li][0], kT5_k4[li][1]};
    } else {
        if (k < 1 || k > 6)
            throw ValidationError("bounds transcribed for k in 1..6; k=" + std::to_string(k) +
                                  " unsupported");
        if (stat == "F") return {kF3[k - 1][li][0], kF3[k - 1][li][1]};
        if (stat == "t") return {kT3[k - 1][li][0], kT3[k - 1][li][1]};
    }
    throw ValidationError("unknown bounds statistic '" + stat + "'");
}

BoundsTestResult bounds_test(const ArdlEcmFit& fit) {
    if (fit.level_names.empty()) throw ValidationError("fit carries no level coefficients");
    const int k = static_cast<int>(fit.level_names.size()) - 1;

    BoundsTestResult r;
    r.k = k;
    r.nobs = fit.ols.nobs;
    r.f_stat = wald_f_test(fit.ols, fit.level_names).f;
    const int i1 = fit.ols.index_of(fit.level_names.front());
    r.t_stat = fit.ols.tstat(i1);

    for (double level : {0.10, 0.05, 0.025, 0.01}) {
        r.f_bounds[level] = pss_bound("F", fit.spec.trend, k, level);
        r.t_bounds[level] = pss_bound("t", fit.spec.trend, k, level);
    }

    r.p_f_i0 = approx_p(r.f_stat, bound_curve("F", fit.spec.trend, k, false), true);
    r.p_f_i1 = approx_p(r.f_stat, bound_curve("F", fit.spec.trend, k, true), true);
    r.p_t_i0 = approx_p(r.t_stat, bound_curve("t", fit.spec.trend, k, false), false);
    r.p_t_i1 = approx_p(r.t_stat, bound_curve("t", fit.spec.trend, k, true), false);

    r.decision = bounds_decide(r.f_stat, r.t_stat, r.f_bounds.at(0.05), r.t_bounds.at(0.05),
                               r.note);
    return r;
}

BoundsDecision bounds_decide(double f, double t, const BoundPair& fb, const BoundPair& tb,
                             std::string& note) {
    const bool f_beyond = f > fb.i1;
    const bool t_beyond = t < tb.i1;
    const bool f_between = f >= fb.i0 && f <= fb.i1;
    const bool t_between = t <= tb.i0 && t >= tb.i1;

    if (f_beyond && t_beyond) {
        note = "F and t both beyond their I(1) bounds at 5%";
        return BoundsDecision::Cointegration;
    }
    if (f_between || t_between) {
        note = std::string("statistic between the I(0) and I(1) bounds at 5%: ") +
               (f_between ? "F" : "") + (f_between && t_between ? " and " : "") +
               (t_between ? "t" : "");
        return BoundsDecision::Inconclusive;
    }
    if (f_beyond != t_beyond)
        note = "conflicting statistics: only one of F/t beyond its I(1) bound";
    else
        note = "neither statistic reaches its I(0) bound at 5%";
    return BoundsDecision::NoCointegration;
}

}  // namespace ardlkit
