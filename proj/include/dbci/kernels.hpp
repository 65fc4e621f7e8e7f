#pragma once

#include <cstddef>

#include "dbci/types.hpp"

namespace dbci::kernels {

enum class Backend { Scalar, Avx2 };

/// True when the running CPU supports the AVX2+FMA variants.
bool avx2_available();

/// Backend currently wired into the dispatch table. Selected on first use:
/// AVX2 when the CPU supports it, scalar otherwise. The environment variable
/// DBCI_KERNELS=scalar|avx2 overrides the automatic choice.
Backend active_backend();
const char* backend_name();

/// Re-points the dispatch table (test hook). Throws ConfigError when the
/// requested backend is unavailable on this CPU.
void force_backend(Backend backend);

// All kernels treat complex data as interleaved (re, im) doubles.

/// y = A x for row-major A (rows x cols).
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
            std::size_t cols);

/// x = A* y (conjugate transpose) for row-major A (rows x cols).
void matvec_adjoint(const Complex* a, const Complex* y, Complex* x,
                    std::size_t rows, std::size_t cols);

/// sum_i conj(a_i) * b_i
Complex dot_conj(const Complex* a, const Complex* b, std::size_t n);

/// y += alpha * x
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);

/// sum_i |x_i|^2
double sum_sq(const Complex* x, std::size_t n);

/// out_i = x_i * max(1 - tau/|x_i|, 0), with out_i = 0 when x_i = 0.
/// Caller guarantees tau >= 0.
void soft_threshold(const Complex* x, double tau, Complex* out, std::size_t n);

/// out_i = |x_i|
void magnitudes(const Complex* x, double* out, std::size_t n);

}  // namespace dbci::kernels
