#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dbci/config.hpp"
#include "dbci/confidence.hpp"
#include "dbci/debias.hpp"
#include "dbci/simulate.hpp"
#include "dbci/types.hpp"

namespace dbci {

struct HitRateResult {
  double overall = 0.0;        // h: mean over components of per-component rates
  double support = 0.0;        // h_S: mean over instances of on-support rates
  RVector per_component;       // h_j, length N
  RVector per_instance_support;  // h_S^{(i)}, length = #instances with support
  std::size_t empty_support_instances = 0;
};

/// Coverage counting for one radius family: hit when
/// |x_u_j^{(i)} - x_j^{(i)}| <= r_j. Instances with empty support are
/// excluded from the support average and counted as warnings.
HitRateResult hit_rates(const std::vector<CVector>& centers,
                        const std::vector<CVector>& truths,
                        const std::vector<std::vector<std::size_t>>& supports,
                        const RVector& radii);

/// Mean over instances of ||R||_2/||W||_2 and ||R||_inf/||W||_inf.
/// Throws NumericError when any instance has W = 0.
std::pair<double, double> rw_ratios(
    const std::vector<ErrorDecomposition>& decompositions);

struct GaussianFit {
  double mean = 0.0;
  double stddev = 0.0;  // maximum-likelihood (divisor n)
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  bool degenerate = false;  // stddev == 0
};

struct HistogramExport {
  RVector bin_edges;  // bins+1 edges shared by both parts
  std::vector<std::size_t> counts_real;
  std::vector<std::size_t> counts_imag;
  RVector expected_real;  // fitted per-bin expected counts
  RVector expected_imag;
  GaussianFit fit_real;
  GaussianFit fit_imag;
  std::size_t samples = 0;
};

/// Pools the selected components of the remainder samples and histograms the
/// real and imaginary parts with maximum-likelihood Gaussian fits.
/// components empty = all components. Requires >= 30 samples.
HistogramExport export_histogram(const std::vector<CVector>& remainders,
                                 const std::vector<std::size_t>& components,
                                 std::size_t bins);

struct SolverDiagnostics {
  double mean_iterations = 0.0;
  std::size_t max_iterations = 0;
  double mean_kkt_residual = 0.0;
  double max_kkt_residual = 0.0;
  std::size_t solves = 0;
};

struct AlphaResult {
  double alpha = 0.0;
  RadiusSet radii;
  HitRateResult data_driven;
  HitRateResult gaussian_adjusted;
  HitRateResult asymptotic;
  double mean_r_w = 0.0;
  double mean_r_gauss = 0.0;
  double mean_r_total = 0.0;
  double gamma_mean = 0.0;
};

struct CoverageReport {
  std::vector<AlphaResult> per_alpha;
  double ratio_l2 = 0.0;
  double ratio_linf = 0.0;
  HistogramExport histogram;
  SolverDiagnostics solver;
  double sigma = 0.0;
  double lambda_resolved = 0.0;  // NaN when not a lasso/ista run
  double mu_resolved = 0.0;      // NaN unless unrolled ISTA
  std::vector<std::size_t> dft_mask;  // empty unless DFT operator
  std::uint64_t operator_seed = 0;
  std::size_t warnings_empty_support = 0;
  bool radius_ordering_violated = false;  // soft invariant, logged not fatal
  double wall_clock_seconds = 0.0;
};

/// The full pipeline: synthesize -> estimate -> collect remainders ->
/// radii for every alpha -> evaluate hit rates on the test split.
/// Does not touch the filesystem; writing is report.hpp's job.
CoverageReport run_experiment(const ExperimentConfig& config);

}  // namespace dbci
