#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dbci/types.hpp"

namespace dbci {

enum class OperatorKind { DenseGaussian, SubsampledDft, ExplicitMatrix };

const char* to_string(OperatorKind kind);

namespace detail {
struct DftPlan;  // FFTW plan pair, shared between operator copies
}

/// The measurement matrix A in C^{m x N} as an apply/adjoint pair.
/// Immutable after construction; concurrent apply/adjoint calls are safe.
class MeasurementOperator {
 public:
  /// Dense matrix with i.i.d. CN(0,1) entries (real/imag parts N(0, 1/2),
  /// so E|A_ij|^2 = 1). Deterministic given seed.
  static MeasurementOperator gaussian(std::size_t m, std::size_t n,
                                      std::uint64_t seed);

  /// m distinct rows of the N-point DFT drawn uniformly without replacement,
  /// scaled so every retained entry has modulus 1 (unitary DFT times sqrt(N)).
  /// apply/adjoint run through an FFT, O(N log N) per call.
  static MeasurementOperator dft(std::size_t m, std::size_t n,
                                 std::uint64_t seed);

  /// User-supplied dense matrix, row-major, size m*n.
  static MeasurementOperator explicit_matrix(std::size_t m, std::size_t n,
                                             CVector entries);

  OperatorKind kind() const noexcept { return kind_; }
  std::size_t rows() const noexcept { return m_; }
  std::size_t cols() const noexcept { return n_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// y = A x. x has length cols(), y length rows().
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  /// x = A* y (conjugate transpose). y has length rows(), x length cols().
  void adjoint(std::span<const Complex> y, std::span<Complex> x) const;

  CVector apply(const CVector& x) const;
  CVector adjoint(const CVector& y) const;

  /// Row mask of the subsampled DFT (ascending). Throws for other kinds.
  const std::vector<std::size_t>& dft_mask() const;
  /// Row-major dense storage. Throws for the DFT kind (never materialized).
  std::span<const Complex> dense() const;

  /// Diagonal of Sigma_hat = A*A/m. Constant 1 for the DFT kind.
  RVector sigma_hat_diagonal() const;

 private:
  MeasurementOperator() = default;

  OperatorKind kind_ = OperatorKind::ExplicitMatrix;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::uint64_t seed_ = 0;
  CVector dense_;                         // row-major, dense kinds only
  std::vector<std::size_t> mask_;         // DFT kind only
  std::shared_ptr<detail::DftPlan> plan_; // DFT kind only
};

/// The correction matrix M: identity (the default in every experiment here)
/// or an explicit dense N x N matrix.
class CorrectionMatrix {
 public:
  static CorrectionMatrix identity();
  static CorrectionMatrix explicit_matrix(std::size_t n, CVector entries);

  bool is_identity() const noexcept { return dense_.empty(); }
  /// 0 for the identity variant (it adapts to any dimension).
  std::size_t dim() const noexcept { return n_; }

  /// y = M x. For the identity variant this is a copy.
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  /// conj(M_{j,:}) as a column vector, i.e. M* e_j.
  CVector conj_row(std::size_t j) const;

  std::span<const Complex> dense() const;

 private:
  CorrectionMatrix() = default;
  std::size_t n_ = 0;
  CVector dense_;  // row-major n x n; empty means identity
};

/// Diagonals entering the Theorem-2/3 radii: values_j = (M Sigma_hat M*)_jj
/// plus the bare Sigma_hat diagonal for reporting.
struct GramDiagonal {
  RVector values;
  RVector sigma_hat_diag;
};

GramDiagonal gram_diagonal(const MeasurementOperator& op,
                           const CorrectionMatrix& correction);

}  // namespace dbci
