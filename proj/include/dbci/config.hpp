#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dbci/confidence.hpp"
#include "dbci/estimators.hpp"
#include "dbci/operators.hpp"
#include "dbci/simulate.hpp"
#include "dbci/types.hpp"

namespace dbci {

struct OperatorConfig {
  OperatorKind kind = OperatorKind::DenseGaussian;
  std::size_t m = 0;
  std::size_t n = 0;
  /// Explicit seed; absent means derived from the master seed.
  std::optional<std::uint64_t> seed;
  /// ExplicitMatrix only: binary file of row-major interleaved complex
  /// doubles, resolved relative to the config file.
  std::string matrix_path;
};

struct SignalConfig {
  std::size_t sparsity = 0;
  bool normalize = true;
};

struct DataConfig {
  std::size_t n = 0;
  SplitSpec split;
  double target_rel_noise = 0.0;
};

struct EstimatorConfig {
  EstimatorSpec::Kind kind = EstimatorSpec::Kind::LassoFista;
  /// NaN means "auto": resolved to default_lambda(sigma, m, N) after
  /// noise calibration.
  double lambda = std::numeric_limits<double>::quiet_NaN();
  std::size_t max_iters = 500;
  double rel_tol = 1e-6;
  std::size_t depth = 0;
  /// NaN means "auto": resolved to gram_operator_norm(A).
  double mu = std::numeric_limits<double>::quiet_NaN();
};

struct CorrectionConfig {
  bool identity = true;
  /// Explicit M: binary file of N x N row-major interleaved complex doubles.
  std::string matrix_path;
};

struct ExperimentConfig {
  OperatorConfig op;
  SignalConfig signal;
  DataConfig data;
  EstimatorConfig estimator;
  std::vector<double> alphas;
  GammaMode gamma_mode = GammaMode::Shared;
  StatsMode stats_mode = StatsMode::PerComponent;
  CorrectionConfig correction;
  std::uint64_t seed = 0;
  std::string output_dir;
  bool persist_remainders = false;
  std::size_t histogram_bins = 61;
  int threads = 0;  // 0 = hardware concurrency

  /// Directory of the config file; relative paths resolve against it.
  std::filesystem::path base_dir;

  std::filesystem::path resolved_output_dir() const;
};

/// Parses and validates. Errors carry the offending field path, e.g.
/// "estimator.lambda: must be a positive number or \"auto\"".
ExperimentConfig load_config(const std::filesystem::path& path);

/// Structural checks shared by load_config and the validate subcommand.
void validate_config(const ExperimentConfig& config);

}  // namespace dbci
