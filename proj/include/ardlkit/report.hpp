#pragma once

#include <string>
#include <vector>

#include "ardlkit/bounds.hpp"
#include "ardlkit/dataset.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/dynsim.hpp"
#include "ardlkit/krls.hpp"
#include "ardlkit/unit_root.hpp"

namespace ardlkit {

/// CSV tables mirroring the report layout (unit roots, bounds test, EC
/// estimates, diagnostics, KRLS marginal effects) plus the simulation path.
void write_unitroot_table(const std::vector<PPTestResult>& results, const std::string& path);
void write_bounds_table(const BoundsTestResult& r, const std::string& path);
void write_ecm_table(const ArdlEcmFit& fit, const std::string& path);
void write_diagnostics_table(const DiagnosticsReport& rep, const std::string& path);
void write_krls_table(const KrlsFit& fit, const std::string& path);
void write_simulation_csv(const SimulationResult& r, const std::string& path);

/// Human-readable text renderings used by the CLI.
std::string format_unitroot(const PPTestResult& r);
std::string format_bounds(const BoundsTestResult& r);
std::string format_ecm(const ArdlEcmFit& fit);
std::string format_diagnostics(const DiagnosticsReport& rep);
std::string format_krls(const KrlsFit& fit);

/// Figure emitters (self-contained SVG).
void plot_series(const Dataset& d, const std::vector<std::string>& names,
                 const std::string& path, bool stamp = false);
void plot_simulation(const SimulationResult& r, const std::string& path, bool stamp = false);
void plot_cusum(const CusumResult& r, const std::string& path, bool stamp = false);
void plot_coefficients(const ArdlEcmFit& fit, const std::string& path, bool stamp = false);
void plot_krls_derivatives(const KrlsFit& fit, const std::string& path, bool stamp = false);

}  // namespace ardlkit
