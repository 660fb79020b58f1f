#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ardlkit/errors.hpp"
#include "ardlkit/rng.hpp"
#include "ardlkit/unit_root.hpp"

using namespace ardlkit;

namespace {

TimeSeries random_walk(std::uint64_t seed, int t) {
    RngStream rng(seed);
    std::vector<double> v(static_cast<std::size_t>(t));
    v[0] = rng.normal();
    for (int i = 1; i < t; ++i)
        v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)] + rng.normal();
    return TimeSeries("rw", 1900, std::move(v));
}

TimeSeries white_noise(std::uint64_t seed, int t) {
    RngStream rng(seed);
    std::vector<double> v(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) v[static_cast<std::size_t>(i)] = rng.normal();
    return TimeSeries("wn", 1900, std::move(v));
}

}  // namespace

TEST_CASE("bandwidth zero reduces to the Dickey-Fuller t exactly") {
    const TimeSeries s = random_walk(5, 80);
    const PPTestResult r = pp_test(s, Deterministic::Constant, 0);
    CHECK(r.z_tau == r.rho_t);
    CHECK(r.long_run_variance == doctest::Approx(r.gamma0).epsilon(1e-14));
}

TEST_CASE("default bandwidth follows floor(4 (T/100)^(2/9))") {
    const TimeSeries s = random_walk(6, 101);  // regression uses n = 100
    const PPTestResult r = pp_test(s, Deterministic::Constant);
    CHECK(r.bandwidth == static_cast<int>(std::floor(4.0 * std::pow(1.0, 2.0 / 9.0))));
    CHECK(r.bandwidth == 4);
}

TEST_CASE("long-run variance is nonnegative") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PPTestResult r = pp_test(random_walk(seed, 60), Deterministic::Constant);
        CHECK(r.long_run_variance >= 0.0);
    }
}

TEST_CASE("statistic is invariant to affine rescaling when a constant is included") {
    const TimeSeries s = random_walk(9, 90);
    const PPTestResult base = pp_test(s, Deterministic::Constant);
    std::vector<double> scaled;
    for (double v : s.dense()) scaled.push_back(3.5 * v + 11.0);
    const PPTestResult moved = pp_test(TimeSeries("rw2", 1900, scaled), Deterministic::Constant);
    CHECK(moved.z_tau == doctest::Approx(base.z_tau).epsilon(1e-8));
}

TEST_CASE("degenerate and short samples are rejected") {
    CHECK_THROWS_WITH_AS(pp_test(TimeSeries("c", 1990, std::vector<double>(30, 2.0))),
                         doctest::Contains("degenerate"), DataError);
    CHECK_THROWS_WITH_AS(pp_test(random_walk(1, 8)), doctest::Contains("insufficient"),
                         DataError);
}

TEST_CASE("critical values come from the tabulated response surfaces") {
    // asymptotic limits of the surfaces
    CHECK(pp_critical_value(Deterministic::Constant, 0.05, 1000000) ==
          doctest::Approx(-2.86154).epsilon(1e-4));
    CHECK(pp_critical_value(Deterministic::ConstantTrend, 0.05, 1000000) ==
          doctest::Approx(-3.41049).epsilon(1e-4));
    // finite-sample values are strictly more negative for the constant case
    CHECK(pp_critical_value(Deterministic::Constant, 0.05, 25) <
          pp_critical_value(Deterministic::Constant, 0.05, 250));
}

TEST_CASE("Monte-Carlo size: random walks are rejected at roughly the nominal rate") {
    const int reps = 2000;
    int rejections = 0;
    for (int r = 0; r < reps; ++r) {
        const PPTestResult res =
            pp_test(random_walk(40000 + static_cast<std::uint64_t>(r), 100),
                    Deterministic::Constant);
        if (res.reject_at(0.05)) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / reps;
    CHECK(rate >= 0.03);
    CHECK(rate <= 0.08);
}

TEST_CASE("Monte-Carlo power: iid noise is almost always rejected") {
    const int reps = 2000;
    int rejections = 0;
    for (int r = 0; r < reps; ++r) {
        const PPTestResult res =
            pp_test(white_noise(50000 + static_cast<std::uint64_t>(r), 100),
                    Deterministic::Constant);
        if (res.reject_at(0.05)) ++rejections;
    }
    CHECK(static_cast<double>(rejections) / reps >= 0.90);
}

TEST_CASE("first difference of a random walk rejects at 1%") {
    const TimeSeries rw = random_walk(123, 101);
    std::vector<double> diff;
    const std::vector<double> v = rw.dense();
    for (std::size_t i = 1; i < v.size(); ++i) diff.push_back(v[i] - v[i - 1]);
    const PPTestResult r = pp_test(TimeSeries("d.rw", 1901, diff), Deterministic::Constant);
    CHECK(r.reject_at(0.01));
}

TEST_CASE("trend case changes the critical values, not the mechanics") {
    const TimeSeries s = random_walk(77, 120);
    const PPTestResult r = pp_test(s, Deterministic::ConstantTrend);
    CHECK(r.critical_values.at(0.05) < pp_critical_value(Deterministic::Constant, 0.05, r.nobs));
    CHECK(r.nobs == 119);
}
