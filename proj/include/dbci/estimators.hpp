#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "dbci/operators.hpp"
#include "dbci/types.hpp"

namespace dbci {

/// Complex magnitude shrinkage preserving phase:
/// z * max(1 - tau/|z|, 0), and 0 at z = 0. Throws on tau < 0.
inline Complex soft_threshold(Complex z, double tau) {
  if (tau < 0.0) throw ConfigError("soft_threshold: tau must be >= 0");
  const double mag = std::abs(z);
  if (mag <= tau) return Complex{0.0, 0.0};
  return z * (1.0 - tau / mag);
}

/// The lambda rule used for every sparse-regression experiment:
/// 10 * (sigma/sqrt(m)) * (2 + sqrt(12 log N)).
double default_lambda(double sigma, std::size_t m, std::size_t n);

/// Largest eigenvalue of A*A/m by power iteration (at most max_iters
/// iterations, early stop at relative tolerance tol). Deterministic.
/// Throws NumericError when the iteration fails to produce a positive
/// finite value.
double gram_operator_norm(const MeasurementOperator& a, std::size_t max_iters = 20,
                          double tol = 1e-6);

struct LassoSolution {
  CVector x_hat;
  std::size_t iterations_used = 0;
  double final_objective = 0.0;
  double kkt_residual = 0.0;
  /// Accepted objective value after each iteration; non-increasing.
  RVector objective_history;
};

/// (1/2m)||Ax-b||^2 + lambda*||x||_1
double lasso_objective(const MeasurementOperator& a, const CVector& b,
                       const CVector& x, double lambda);

/// Monotone FISTA on the lasso objective with step 1/L, L from
/// gram_operator_norm. Stops when the relative change of the accepted
/// objective drops below rel_tol or after max_iters iterations.
LassoSolution lasso_fista(const MeasurementOperator& a, const CVector& b,
                          double lambda, std::size_t max_iters, double rel_tol);

/// Exactly depth ISTA iterations from x = 0:
///   x <- S_{lambda/mu}( x - (1/(mu m)) A*(Ax - b) ).
/// The fixed point solves the lasso objective; mu >= L makes the step valid.
CVector unrolled_ista(const MeasurementOperator& a, const CVector& b,
                      double lambda, std::size_t depth, double mu);

struct EstimatorSpec {
  enum class Kind { LassoFista, UnrolledIsta, Oracle };

  Kind kind = Kind::LassoFista;
  double lambda = 0.0;          // LassoFista, UnrolledIsta
  std::size_t max_iters = 500;  // LassoFista
  double rel_tol = 1e-6;        // LassoFista
  std::size_t depth = 0;        // UnrolledIsta
  double mu = 0.0;              // UnrolledIsta

  static EstimatorSpec lasso(double lambda, std::size_t max_iters = 500,
                             double rel_tol = 1e-6);
  static EstimatorSpec unrolled(double lambda, std::size_t depth, double mu);
  static EstimatorSpec oracle();

  void validate() const;
};

const char* to_string(EstimatorSpec::Kind kind);

/// Dispatch to the chosen estimator; pure function of its arguments.
/// The Oracle variant returns *x_true and throws without it.
CVector estimate(const EstimatorSpec& spec, const MeasurementOperator& a,
                 const CVector& b, const CVector* x_true = nullptr);

}  // namespace dbci
