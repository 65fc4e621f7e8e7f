#include <cmath>
#include <cstddef>

#include "dbci/kernels.hpp"

// Reference implementations. The AVX2 variants are equivalence-tested
// against these.

namespace dbci::kernels::scalar {

void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
            std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const Complex* row = a + i * cols;
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double ar = row[j].real(), ai = row[j].imag();
      const double xr = x[j].real(), xi = x[j].imag();
      acc_re += ar * xr - ai * xi;
      acc_im += ar * xi + ai * xr;
    }
    y[i] = Complex{acc_re, acc_im};
  }
}

void matvec_adjoint(const Complex* a, const Complex* y, Complex* x,
                    std::size_t rows, std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) x[j] = Complex{0.0, 0.0};
  for (std::size_t i = 0; i < rows; ++i) {
    const Complex* row = a + i * cols;
    const double yr = y[i].real(), yi = y[i].imag();
    for (std::size_t j = 0; j < cols; ++j) {
      // x_j += conj(a_ij) * y_i
      const double ar = row[j].real(), ai = row[j].imag();
      x[j] += Complex{ar * yr + ai * yi, ar * yi - ai * yr};
    }
  }
}

Complex dot_conj(const Complex* a, const Complex* b, std::size_t n) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    acc_re += ar * br + ai * bi;
    acc_im += ar * bi - ai * br;
  }
  return Complex{acc_re, acc_im};
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double pr = alpha.real(), pi = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Complex{pr * xr - pi * xi, pr * xi + pi * xr};
  }
}

double sum_sq(const Complex* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

void soft_threshold(const Complex* x, double tau, Complex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::hypot(x[i].real(), x[i].imag());
    out[i] = (mag <= tau) ? Complex{0.0, 0.0} : x[i] * (1.0 - tau / mag);
  }
}

void magnitudes(const Complex* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::hypot(x[i].real(), x[i].imag());
  }
}

}  // namespace dbci::kernels::scalar
