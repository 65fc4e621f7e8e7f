#pragma once

#include <vector>

#include "dbci/estimators.hpp"
#include "dbci/operators.hpp"
#include "dbci/types.hpp"

namespace dbci {

struct RegressionInstance;  // simulate.hpp

struct DebiasedEstimate {
  CVector x_u;
  CVector x_hat;
};

/// The exact split of the debiased error x_u - x_true into the Gaussian
/// part W = (1/m) M A* eps and the remainder R = (M Sigma_hat - I)(x_true - x_hat).
struct ErrorDecomposition {
  CVector w;
  CVector r;
};

/// x_u = x_hat + (1/m) M A*(b - A x_hat).
DebiasedEstimate debias(const CVector& x_hat, const MeasurementOperator& a,
                        const CorrectionMatrix& correction, const CVector& b);

/// W from the noise directly, R matrix-free as (1/m) M A*(A d) - d with
/// d = x_true - x_hat (Sigma_hat is never materialized).
ErrorDecomposition decompose_error(const CVector& x_hat, const CVector& x_true,
                                   const CVector& eps,
                                   const MeasurementOperator& a,
                                   const CorrectionMatrix& correction);

/// Runs the estimator on every instance of the estimation split and returns
/// the full W/R decompositions, one per instance, in input order.
/// Parallelizes over instances; output is independent of the thread count.
std::vector<ErrorDecomposition> collect_decompositions(
    const EstimatorSpec& spec, const MeasurementOperator& a,
    const CorrectionMatrix& correction,
    const std::vector<const RegressionInstance*>& estimation_set,
    unsigned threads = 1);

/// The remainder samples R^{(i)} consumed by the radius estimators.
std::vector<CVector> collect_remainders(
    const EstimatorSpec& spec, const MeasurementOperator& a,
    const CorrectionMatrix& correction,
    const std::vector<const RegressionInstance*>& estimation_set,
    unsigned threads = 1);

}  // namespace dbci
