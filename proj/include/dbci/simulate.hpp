#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dbci/operators.hpp"
#include "dbci/rng.hpp"
#include "dbci/types.hpp"

namespace dbci {

/// One (x_true, eps, b) triple with b = A x_true + eps exactly.
struct RegressionInstance {
  CVector x_true;
  std::vector<std::size_t> support;
  CVector eps;
  CVector b;
};

struct SplitSpec {
  std::size_t train = 0;
  std::size_t estimation = 0;
  std::size_t test = 0;

  std::size_t total() const { return train + estimation + test; }
};

struct Dataset {
  std::vector<RegressionInstance> instances;
  SplitSpec split;
  double sigma = 0.0;  // noise standard deviation used for every instance
  std::uint64_t seed = 0;

  std::vector<const RegressionInstance*> train_set() const;
  std::vector<const RegressionInstance*> estimation_set() const;
  std::vector<const RegressionInstance*> test_set() const;
};

/// s distinct uniform support indices; on-support entries i.i.d. CN(0,1).
std::pair<CVector, std::vector<std::size_t>> generate_sparse_signal(
    std::size_t n, std::size_t s, rng::Stream& stream);

/// One sigma for the whole dataset:
///   sigma = target * mean_i ||A x^{(i)}|| / sqrt(m),
/// using E||eps||^2 = m sigma^2 for eps ~ CN(0, sigma^2 I_m).
double calibrate_sigma(const MeasurementOperator& a,
                       const std::vector<CVector>& signals,
                       double target_rel_noise);

/// Generates n instances, calibrates sigma, draws eps ~ CN(0, sigma^2 I_m),
/// forms b, and partitions deterministically (train | estimation | test in
/// instance order). Every instance draws from its own substream of `seed`.
/// normalize_signals rescales each x_true to unit l2 norm before
/// calibration, matching the scale convention of the reported radii.
Dataset synthesize_dataset(const MeasurementOperator& a, std::size_t s,
                           std::size_t n, double target_rel_noise,
                           SplitSpec split, std::uint64_t seed,
                           bool normalize_signals = true, unsigned threads = 1);

}  // namespace dbci
