#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dbci/types.hpp"

namespace dbci::rng {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Counter-based substream derivation: every (master, purpose, index) triple
/// maps to a fixed seed, so datasets are reproducible regardless of how the
/// generation loop is parallelized.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t purpose,
                                    std::uint64_t index = 0) {
  std::uint64_t s = master;
  std::uint64_t out = splitmix64_next(s);
  s ^= 0x9e3779b97f4a7c15ull * (purpose + 1);
  out ^= splitmix64_next(s);
  s ^= 0xd6e8feb86659fd93ull * (index + 1);
  out ^= splitmix64_next(s);
  return out;
}

namespace purpose {
inline constexpr std::uint64_t kOperator = 1;
inline constexpr std::uint64_t kMask = 2;
inline constexpr std::uint64_t kSupport = 3;
inline constexpr std::uint64_t kSignalValues = 4;
inline constexpr std::uint64_t kNoise = 5;
inline constexpr std::uint64_t kPowerIteration = 6;
}  // namespace purpose

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : eng_(seed) {}

  double normal() { return normal_(eng_); }
  double normal(double stddev) { return stddev * normal_(eng_); }
  double uniform01() { return unif_(eng_); }

  std::uint64_t uniform_below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
  }

  /// CN(0, variance): real and imaginary parts i.i.d. N(0, variance/2),
  /// so E|z|^2 = variance.
  Complex complex_normal(double variance) {
    const double s = std::sqrt(variance * 0.5);
    const double re = normal(s);
    const double im = normal(s);
    return {re, im};
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

/// m distinct indices drawn uniformly without replacement from [0, n),
/// returned ascending.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                           std::size_t m,
                                                           Stream& stream) {
  if (m > n) throw ConfigError("sample_without_replacement: m > n");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.uniform_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace dbci::rng
