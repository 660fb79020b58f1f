#pragma once

#include <span>
#include <vector>

namespace ardlkit::stats {

/// Right-tail probability of a chi-squared distribution with `df` degrees of
/// freedom. Returns 1 for x <= 0.
double chi2_sf(double x, double df);

/// Right-tail probability of an F distribution.
double f_sf(double x, double df1, double df2);

/// Standard normal CDF.
double normal_cdf(double x);

/// Two-sided p-value for a t statistic with `df` degrees of freedom.
double t_pvalue_two_sided(double t, double df);

/// Quantile of a pre-sorted sample by linear interpolation between order
/// statistics (the common "type 7" rule: position p*(n-1)).
double quantile_sorted(std::span<const double> sorted, double p);

/// Convenience overload that copies and sorts.
double quantile(std::vector<double> values, double p);

double mean(std::span<const double> values);

/// Sample variance with denominator n-1.
double variance(std::span<const double> values);

}  // namespace ardlkit::stats
