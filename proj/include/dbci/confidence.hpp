#pragma once

#include <cstddef>
#include <vector>

#include "dbci/operators.hpp"
#include "dbci/types.hpp"

namespace dbci {

enum class StatsMode { PerComponent, Pooled };
enum class GammaMode { PerComponent, Shared };

const char* to_string(StatsMode mode);
const char* to_string(GammaMode mode);

/// Sample statistics of the remainder component over the estimation split.
/// Per-component vectors have length N; pooled mode stores a single entry.
struct RemainderStats {
  StatsMode mode = StatsMode::PerComponent;
  RVector s_hat;          // sample mean of |R_j|
  RVector sigma_r_hat;    // unbiased sample std of |R_j| (divisor l-1;
                          // pooled mode uses divisor l*N-1)
  RVector var_complex_r;  // m * unbiased complex variance of R_j, the
                          // (Sigma_R)_jj estimate consumed by the
                          // Gaussian-adjusted radius
  std::size_t l = 0;      // sample count
  std::size_t components = 0;

  double s_hat_at(std::size_t j) const;
  double sigma_r_hat_at(std::size_t j) const;
  double var_complex_r_at(std::size_t j) const;
};

/// One significance level's radii. gamma_j = 1 marks components whose
/// Chebyshev budget is degenerate (sigma_r_hat = 0).
struct RadiusSet {
  double alpha = 0.0;
  RVector gamma;
  RVector r_w;      // asymptotic radii (gamma = 1, Gaussian term only)
  RVector r_total;  // data-driven radii
  RVector r_gauss;  // Gaussian-adjusted radii
};

/// Exact beta-quantile of |W_j|, whose tail is
/// P(|W_j| > r) = exp(-r^2 m / (sigma^2 gram_jj)):
/// returns sigma * sqrt(gram_jj/m) * sqrt(log(1/beta)).
double gaussian_term_radius(double sigma, double gram_jj, std::size_t m,
                            double beta);

/// C(l, beta) = sqrt((l^2 - 1) / (l^2 beta - l)), the empirical-Chebyshev
/// multiplier with beta the full budget (1-gamma)*alpha. Requires l >= 2 and
/// beta > 1/l; throws NumericError otherwise.
double chebyshev_multiplier(std::size_t l, double beta);

/// Mean / unbiased std of |R_j| plus the m-scaled complex variance, per
/// component or pooled over all l*N samples.
RemainderStats estimate_remainder_stats(const std::vector<CVector>& remainders,
                                        StatsMode mode, std::size_t m);

/// Minimizer of
///   f(gamma) = gaussian_term_radius(sigma, gram_jj, m, gamma*alpha)
///            + C(l, (1-gamma)*alpha) * sigma_r_hat
/// over gamma in (0, 1 - 1/(l*alpha)), by a 1000-point grid (endpoints held
/// half a step inside) plus golden-section refinement on the best bracket.
/// Returns exactly 1 when sigma_r_hat = 0 (the asymptotic special case).
double optimize_gamma(double sigma, double gram_jj, std::size_t m,
                      std::size_t l, double alpha, double sigma_r_hat);

/// Theorem-2 radii r_total (optimized gamma per component or shared) plus
/// the gamma=1 asymptotic radii r_w. r_gauss is left empty; fill it with
/// radius_gaussian_adjusted.
RadiusSet radius_data_driven(const RemainderStats& stats,
                             const GramDiagonal& gram, double sigma,
                             std::size_t m, double alpha, GammaMode gamma_mode,
                             unsigned threads = 1);

/// Gaussian-adjusted radii
///   sqrt(sigma^2 gram_jj + var_complex_r_j) / sqrt(m) * sqrt(log(1/alpha)).
RVector radius_gaussian_adjusted(const RemainderStats& stats,
                                 const GramDiagonal& gram, double sigma,
                                 std::size_t m, double alpha);

/// |x_u_j - z| <= r_j (complex modulus, boundary inclusive).
bool region_contains(Complex x_u_j, Complex z, double r_j);

}  // namespace dbci
