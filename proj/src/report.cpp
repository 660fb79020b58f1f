#include "ardlkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ardlkit/csv.hpp"
#include "ardlkit/errors.hpp"
#include "ardlkit/stats.hpp"
#include "ardlkit/svg.hpp"

namespace ardlkit {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    return out;
}

std::string f6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_unitroot_table(const std::vector<PPTestResult>& results, const std::string& path) {
    auto out = open_out(path);
    out << "series,case,bandwidth,z_tau,df_t,cv_1pct,cv_5pct,cv_10pct,reject_1pct,reject_5pct,"
           "reject_10pct\n";
    for (const auto& r : results) {
        out << r.series << "," << to_string(r.deterministic) << "," << r.bandwidth << ","
            << format_double(r.z_tau) << "," << format_double(r.rho_t) << ","
            << format_double(r.critical_values.at(0.01)) << ","
            << format_double(r.critical_values.at(0.05)) << ","
            << format_double(r.critical_values.at(0.10)) << "," << (r.reject_at(0.01) ? 1 : 0)
            << "," << (r.reject_at(0.05) ? 1 : 0) << "," << (r.reject_at(0.10) ? 1 : 0) << "\n";
    }
}

void write_bounds_table(const BoundsTestResult& r, const std::string& path) {
    auto out = open_out(path);
    out << "statistic,value,level,i0_bound,i1_bound,p_i0,p_i1\n";
    for (const auto& [level, b] : r.f_bounds)
        out << "F," << format_double(r.f_stat) << "," << level << "," << b.i0 << "," << b.i1
            << "," << format_double(r.p_f_i0) << "," << format_double(r.p_f_i1) << "\n";
    for (const auto& [level, b] : r.t_bounds)
        out << "t," << format_double(r.t_stat) << "," << level << "," << b.i0 << "," << b.i1
            << "," << format_double(r.p_t_i0) << "," << format_double(r.p_t_i1) << "\n";
    out << "decision," << to_string(r.decision) << ",,,,,\n";
}

void write_ecm_table(const ArdlEcmFit& fit, const std::string& path) {
    auto out = open_out(path);
    out << "block,term,estimate,se,t,p\n";
    const auto& ols = fit.ols;
    for (std::size_t i = 0; i < ols.names.size(); ++i) {
        const int ii = static_cast<int>(i);
        const bool is_level = std::find(fit.level_names.begin(), fit.level_names.end(),
                                        ols.names[i]) != fit.level_names.end();
        out << (is_level ? "level" : "short_run") << "," << ols.names[i] << ","
            << format_double(ols.beta(ii)) << "," << format_double(ols.se(ii)) << ","
            << format_double(ols.tstat(ii)) << ","
            << format_double(stats::t_pvalue_two_sided(ols.tstat(ii),
                                                       static_cast<double>(ols.dof)))
            << "\n";
    }
    for (const auto& lr : fit.long_run)
        out << "long_run," << lr.name << "," << format_double(lr.estimate) << ","
            << format_double(lr.se) << "," << format_double(lr.t) << ","
            << format_double(lr.p_value) << "\n";
    out << "summary,speed_of_adjustment," << format_double(fit.speed_of_adjustment) << ",,,\n";
    out << "summary,r2," << format_double(fit.ols.r2) << ",,,\n";
    out << "summary,nobs," << fit.ols.nobs << ",,,\n";
}

void write_diagnostics_table(const DiagnosticsReport& rep, const std::string& path) {
    auto out = open_out(path);
    out << "test,component,stat,dof,p,pass_5pct\n";
    out << "breusch_godfrey,lags=" << rep.bg.lags << "," << format_double(rep.bg.lm_stat) << ","
        << rep.bg.lags << "," << format_double(rep.bg.p_value) << "," << rep.bg_pass_5pct << "\n";
    auto im_row = [&](const std::string& nm, const ImComponent& c) {
        out << "im_test," << nm << "," << format_double(c.stat) << "," << c.dof << ","
            << format_double(c.p_value) << "," << (c.p_value > 0.05) << "\n";
    };
    im_row("heteroskedasticity (" + rep.im.product_set + " products)",
           rep.im.heteroskedasticity);
    im_row("skewness", rep.im.skewness);
    im_row("kurtosis", rep.im.kurtosis);
    im_row("total", rep.im.total);
    out << "cusum,max_abs_path,"
        << format_double([&] {
               double m = 0.0;
               for (double v : rep.cusum.path) m = std::max(m, std::abs(v));
               return m;
           }())
        << ",," << "," << rep.cusum_pass_5pct << "\n";
    out << "jarque_bera,normality," << format_double(rep.jb.stat) << ",2,"
        << format_double(rep.jb.p_value) << "," << rep.jb_pass_5pct << "\n";
}

void write_krls_table(const KrlsFit& fit, const std::string& path) {
    auto out = open_out(path);
    out << "feature,avg_effect,se,t,p,p25,p50,p75,iqr_over_avg\n";
    for (const auto& e : fit.effects)
        out << e.name << "," << format_double(e.average) << "," << format_double(e.se) << ","
            << format_double(e.t) << "," << format_double(e.p_value) << ","
            << format_double(e.p25) << "," << format_double(e.p50) << "," << format_double(e.p75)
            << "," << format_double(e.iqr_over_avg) << "\n";
    out << "model,r2," << format_double(fit.r2) << ",lambda," << format_double(fit.lambda)
        << ",sigma2," << format_double(fit.sigma2_kernel) << ",loo," << format_double(fit.loo_error)
        << "\n";
}

void write_simulation_csv(const SimulationResult& r, const std::string& path) {
    auto out = open_out(path);
    out << "period,mean,p75lo,p75hi,p90lo,p90hi,p95lo,p95hi\n";
    for (std::size_t i = 0; i < r.periods.size(); ++i) {
        out << r.periods[i] << "," << format_double(r.mean_path[i]);
        for (double level : {0.75, 0.90, 0.95}) {
            const auto& band = r.bands.at(level)[i];
            out << "," << format_double(band.first) << "," << format_double(band.second);
        }
        out << "\n";
    }
}

std::string format_unitroot(const PPTestResult& r) {
    std::ostringstream s;
    s << "Phillips-Perron test, series " << r.series << " (" << to_string(r.deterministic)
      << ", bandwidth " << r.bandwidth << ", n=" << r.nobs << ")\n";
    s << "  Z_tau = " << f6(r.z_tau) << "  (Dickey-Fuller t = " << f6(r.rho_t) << ")\n";
    s << "  critical values: 1% " << f6(r.critical_values.at(0.01)) << ", 5% "
      << f6(r.critical_values.at(0.05)) << ", 10% " << f6(r.critical_values.at(0.10)) << "\n";
    s << "  H0 unit root " << (r.reject_at(0.05) ? "rejected" : "not rejected") << " at 5%\n";
    return s.str();
}

std::string format_bounds(const BoundsTestResult& r) {
    std::ostringstream s;
    s << "Bounds cointegration test (k=" << r.k << ", n=" << r.nobs << ")\n";
    s << "  F = " << f6(r.f_stat) << "  5% bounds [" << r.f_bounds.at(0.05).i0 << ", "
      << r.f_bounds.at(0.05).i1 << "]  approx p (I1) = " << f6(r.p_f_i1) << "\n";
    s << "  t = " << f6(r.t_stat) << "  5% bounds [" << r.t_bounds.at(0.05).i0 << ", "
      << r.t_bounds.at(0.05).i1 << "]  approx p (I1) = " << f6(r.p_t_i1) << "\n";
    s << "  decision: " << to_string(r.decision) << " (" << r.note << ")\n";
    return s.str();
}

std::string format_ecm(const ArdlEcmFit& fit) {
    std::ostringstream s;
    s << "Error-correction model: d." << fit.spec.dependent << " ~ ARDL(p=" << fit.spec.p;
    for (int q : fit.spec.q) s << "," << q;
    s << ") sample " << fit.sample_start_year << "-" << fit.sample_end_year
      << "  n=" << fit.ols.nobs << "  R2=" << f6(fit.ols.r2) << "\n";
    s << "  speed of adjustment: " << f6(fit.speed_of_adjustment)
      << (fit.ec_sign_ok ? "" : "  [warning: not negative]") << "\n";
    for (std::size_t i = 0; i < fit.ols.names.size(); ++i) {
        const int ii = static_cast<int>(i);
        s << "  " << fit.ols.names[i] << " = " << f6(fit.ols.beta(ii)) << " (se "
          << f6(fit.ols.se(ii)) << ", t " << f6(fit.ols.tstat(ii)) << ")\n";
    }
    if (!fit.long_run_defined) {
        s << "  long-run coefficients undefined: speed of adjustment is numerically zero\n";
    } else {
        if (!fit.long_run_reliable)
            s << "  [warning: lambda_1 not significant; long-run estimates unstable]\n";
        for (const auto& lr : fit.long_run)
            s << "  long-run " << lr.name << " = " << f6(lr.estimate) << " (se " << f6(lr.se)
              << ", p " << f6(lr.p_value) << ")\n";
    }
    return s.str();
}

std::string format_diagnostics(const DiagnosticsReport& rep) {
    std::ostringstream s;
    s << "Diagnostics\n";
    s << "  Breusch-Godfrey LM (" << rep.bg.lags << " lags): stat " << f6(rep.bg.lm_stat)
      << ", p " << f6(rep.bg.p_value) << " -> "
      << (rep.bg_pass_5pct ? "no serial correlation at 5%" : "serial correlation at 5%") << "\n";
    s << "  IM decomposition: het " << f6(rep.im.heteroskedasticity.stat) << " (p "
      << f6(rep.im.heteroskedasticity.p_value) << "), skew " << f6(rep.im.skewness.stat) << " (p "
      << f6(rep.im.skewness.p_value) << "), kurt " << f6(rep.im.kurtosis.stat) << " (p "
      << f6(rep.im.kurtosis.p_value) << "), total " << f6(rep.im.total.stat) << " (p "
      << f6(rep.im.total.p_value) << ")\n";
    s << "  CUSUM: " << (rep.cusum_pass_5pct ? "inside" : "outside") << " the 95% band\n";
    s << "  Jarque-Bera: stat " << f6(rep.jb.stat) << ", p " << f6(rep.jb.p_value) << "\n";
    return s.str();
}

std::string format_krls(const KrlsFit& fit) {
    std::ostringstream s;
    s << "KRLS fit: R2 = " << f6(fit.r2) << ", lambda = " << f6(fit.lambda)
      << (fit.lambda_from_loo ? " (leave-one-out)" : "") << ", kernel sigma2 = "
      << f6(fit.sigma2_kernel) << "\n";
    s << "  avg marginal effects (p25 / p50 / p75):\n";
    for (const auto& e : fit.effects)
        s << "    " << e.name << ": " << f6(e.average) << " +- " << f6(e.se) << "  (" << f6(e.p25)
          << " / " << f6(e.p50) << " / " << f6(e.p75) << ")\n";
    return s.str();
}

void plot_series(const Dataset& d, const std::vector<std::string>& names, const std::string& path,
                 bool stamp) {
    SvgPlot plot;
    plot.title = "Series over time";
    plot.xlabel = "year";
    plot.stamp = stamp;
    std::size_t ci = 0;
    for (const auto& nm : names) {
        const TimeSeries& s = d.get(nm);
        SvgSeries line;
        line.label = nm;
        line.color = svg_palette(ci++);
        const std::vector<double> v = s.dense();
        for (std::size_t i = 0; i < v.size(); ++i) {
            line.x.push_back(static_cast<double>(s.years[i]));
            line.y.push_back(v[i]);
        }
        plot.lines.push_back(std::move(line));
    }
    plot.write(path);
}

void plot_simulation(const SimulationResult& r, const std::string& path, bool stamp) {
    SvgPlot plot;
    plot.title = "Counterfactual response: " + r.shock.target;
    plot.xlabel = "period";
    plot.ylabel = "predicted level";
    plot.stamp = stamp;
    std::vector<double> x(r.periods.begin(), r.periods.end());
    double opacity = 0.12;
    for (double level : {0.95, 0.90, 0.75}) {
        SvgBand band;
        band.x = x;
        band.color = "#1f77b4";
        band.opacity = opacity;
        opacity += 0.08;
        char lbl[16];
        std::snprintf(lbl, sizeof(lbl), "%.0f%% band", level * 100);
        band.label = lbl;
        for (const auto& [lo, hi] : r.bands.at(level)) {
            band.lo.push_back(lo);
            band.hi.push_back(hi);
        }
        plot.bands.push_back(std::move(band));
    }
    SvgSeries mean;
    mean.label = "mean path";
    mean.color = "#d62728";
    mean.x = x;
    mean.y = r.mean_path;
    plot.lines.push_back(std::move(mean));
    plot.write(path);
}

void plot_cusum(const CusumResult& r, const std::string& path, bool stamp) {
    SvgPlot plot;
    plot.title = "CUSUM of recursive residuals";
    plot.xlabel = "observation";
    plot.stamp = stamp;
    std::vector<double> x(r.t_index.begin(), r.t_index.end());
    SvgSeries path_line{.label = "cusum", .x = x, .y = r.path, .color = "#1f77b4"};
    SvgSeries up{.label = "95% band", .x = x, .y = r.upper, .color = "#d62728"};
    SvgSeries dn{.label = "", .x = x, .y = r.lower, .color = "#d62728"};
    plot.lines = {path_line, up, dn};
    plot.write(path);
}

void plot_coefficients(const ArdlEcmFit& fit, const std::string& path, bool stamp) {
    SvgPlot plot;
    plot.title = "Coefficient estimates with 95% intervals";
    plot.ylabel = "estimate";
    plot.stamp = stamp;
    SvgSeries points;
    points.label = "estimate";
    points.color = "#1f77b4";
    SvgBand ci;
    ci.label = "95% CI";
    ci.color = "#1f77b4";
    ci.opacity = 0.25;
    for (std::size_t i = 0; i < fit.ols.names.size(); ++i) {
        const int ii = static_cast<int>(i);
        const double x = static_cast<double>(i + 1);
        points.x.push_back(x);
        points.y.push_back(fit.ols.beta(ii));
        ci.x.push_back(x);
        ci.lo.push_back(fit.ols.beta(ii) - 1.96 * fit.ols.se(ii));
        ci.hi.push_back(fit.ols.beta(ii) + 1.96 * fit.ols.se(ii));
    }
    SvgSeries zero;
    zero.label = "";
    zero.color = "#888888";
    zero.x = {0.5, static_cast<double>(fit.ols.names.size()) + 0.5};
    zero.y = {0.0, 0.0};
    plot.bands.push_back(std::move(ci));
    plot.lines.push_back(std::move(zero));
    plot.scatters.push_back(std::move(points));
    plot.write(path);
}

void plot_krls_derivatives(const KrlsFit& fit, const std::string& path, bool stamp) {
    SvgPlot plot;
    plot.title = "KRLS pointwise marginal effects";
    plot.xlabel = "feature value (standardized)";
    plot.ylabel = "derivative";
    plot.stamp = stamp;
    for (Eigen::Index j = 0; j < fit.derivatives.cols(); ++j) {
        SvgSeries sc;
        sc.label = fit.feature_names[static_cast<std::size_t>(j)];
        sc.color = svg_palette(static_cast<std::size_t>(j));
        for (Eigen::Index i = 0; i < fit.derivatives.rows(); ++i) {
            sc.x.push_back(fit.X_std(i, j));
            sc.y.push_back(fit.derivatives(i, j));
        }
        plot.scatters.push_back(std::move(sc));
    }
    plot.write(path);
}

}  // namespace ardlkit
