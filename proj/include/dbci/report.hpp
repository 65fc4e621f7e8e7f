#pragma once

#include <filesystem>
#include <string>

#include "dbci/config.hpp"
#include "dbci/experiment.hpp"

namespace dbci {

/// Writes report.json plus sidecars into config.resolved_output_dir():
///   report.json                  full report, config echo, file manifest
///   radii_a<alpha>.f64           per-component radii (r_w, r_total, r_gauss
///                                concatenated), little-endian float64
///   hit_rates_a<alpha>.csv       per-component rates for box-plot export
///   support_rates_a<alpha>.csv   per-instance on-support rates
///   histogram.csv                binned remainder parts + Gaussian fit
/// On failure, files created by this call are removed before rethrowing.
/// Returns the path of report.json.
std::filesystem::path write_report(const ExperimentConfig& config,
                                   const CoverageReport& report);

/// Serializes the report (config echo included) to a JSON string; the
/// wall_clock_seconds field is the only part that varies between reruns
/// with the same seed.
std::string report_to_json(const ExperimentConfig& config,
                           const CoverageReport& report);

}  // namespace dbci
