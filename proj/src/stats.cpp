#include "ardlkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace ardlkit::stats {

double chi2_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    boost::math::chi_squared dist(df);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double f_sf(double x, double df1, double df2) {
    if (x <= 0.0) return 1.0;
    boost::math::fisher_f dist(df1, df2);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double normal_cdf(double x) {
    static const boost::math::normal dist(0.0, 1.0);
    return boost::math::cdf(dist, x);
}

double t_pvalue_two_sided(double t, double df) {
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

double quantile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, p);
}

double mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const double m = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return s / static_cast<double>(n - 1);
}

}  // namespace ardlkit::stats
