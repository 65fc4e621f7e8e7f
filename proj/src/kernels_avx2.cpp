#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "dbci/kernels.hpp"

// AVX2+FMA variants. Complex doubles are interleaved (re, im), so one
// 256-bit lane holds two complex values. Tails fall back to scalar code.
// Compiled with -mavx2 -mfma for this translation unit only; callers reach
// these through the runtime dispatch table.

namespace dbci::kernels::avx2 {

namespace {

// [1, -1, 1, -1] sign mask for the imaginary-part products.
inline __m256d alt_sign() { return _mm256_setr_pd(1.0, -1.0, 1.0, -1.0); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

Complex dot_conj(const Complex* a, const Complex* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d sign = alt_sign();
  std::size_t i = 0;
  const std::size_t pairs = (n / 2) * 2;
  for (; i < pairs; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    // re: ar*br + ai*bi summed pairwise at the end
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    // im: ar*bi - ai*br  ->  va * swap(vb) * [1,-1]
    const __m256d vbs = _mm256_permute_pd(vb, 0b0101);
    acc_im = _mm256_fmadd_pd(_mm256_mul_pd(va, vbs), sign, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return Complex{re, im};
}

namespace {

// y_row = sum_j row_j * x_j (no conjugation), the inner product of matvec.
inline Complex dot_plain(const Complex* row, const Complex* x, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(row);
  const double* pb = reinterpret_cast<const double*>(x);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d sign = alt_sign();
  std::size_t i = 0;
  const std::size_t pairs = (n / 2) * 2;
  for (; i < pairs; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    // re: ar*br - ai*bi  ->  va * vb * [1,-1]
    acc_re = _mm256_fmadd_pd(_mm256_mul_pd(va, vb), sign, acc_re);
    // im: ar*bi + ai*br
    const __m256d vbs = _mm256_permute_pd(vb, 0b0101);
    acc_im = _mm256_fmadd_pd(va, vbs, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    const double ar = row[i].real(), ai = row[i].imag();
    const double br = x[i].real(), bi = x[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return Complex{re, im};
}

}  // namespace

void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
            std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    y[i] = dot_plain(a + i * cols, x, cols);
  }
}

void matvec_adjoint(const Complex* a, const Complex* y, Complex* x,
                    std::size_t rows, std::size_t cols) {
  double* px = reinterpret_cast<double*>(x);
  for (std::size_t j = 0; j < 2 * cols; ++j) px[j] = 0.0;
  const __m256d sign = alt_sign();
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = reinterpret_cast<const double*>(a + i * cols);
    const double yr = y[i].real(), yi = y[i].imag();
    const __m256d vyr = _mm256_set1_pd(yr);
    const __m256d vyi = _mm256_set1_pd(yi);
    std::size_t j = 0;
    const std::size_t pairs = (cols / 2) * 2;
    for (; j < pairs; j += 2) {
      const __m256d va = _mm256_loadu_pd(row + 2 * j);
      // conj(a) * y: even lanes ar*yr + ai*yi, odd lanes ar*yi - ai*yr
      const __m256d vas = _mm256_permute_pd(va, 0b0101);
      const __m256d term = _mm256_fmadd_pd(_mm256_mul_pd(va, vyr), sign,
                                           _mm256_mul_pd(vas, vyi));
      const __m256d acc = _mm256_loadu_pd(px + 2 * j);
      _mm256_storeu_pd(px + 2 * j, _mm256_add_pd(acc, term));
    }
    for (; j < cols; ++j) {
      const double ar = row[2 * j], ai = row[2 * j + 1];
      x[j] += Complex{ar * yr + ai * yi, ar * yi - ai * yr};
    }
  }
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const double pr = alpha.real(), pi = alpha.imag();
  const __m256d vpr = _mm256_set1_pd(pr);
  const __m256d vpi = _mm256_set1_pd(pi);
  const __m256d sign = alt_sign();
  std::size_t i = 0;
  const std::size_t pairs = (n / 2) * 2;
  for (; i < pairs; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    // alpha * x: even lanes pr*xr - pi*xi, odd lanes pr*xi + pi*xr
    const __m256d vxs = _mm256_permute_pd(vx, 0b0101);
    const __m256d term = _mm256_fmadd_pd(
        _mm256_mul_pd(_mm256_mul_pd(vxs, vpi), sign), _mm256_set1_pd(-1.0),
        _mm256_mul_pd(vx, vpr));
    const __m256d acc = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(acc, term));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Complex{pr * xr - pi * xi, pr * xi + pi * xr};
  }
}

double sum_sq(const Complex* x, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const std::size_t pairs = (n / 2) * 2;
  for (; i < pairs; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double out = hsum(acc);
  for (; i < n; ++i) {
    out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return out;
}

void soft_threshold(const Complex* x, double tau, Complex* out, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* po = reinterpret_cast<double*>(out);
  const __m256d vtau = _mm256_set1_pd(tau);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  const std::size_t pairs = (n / 2) * 2;
  for (; i < pairs; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    // |z_k|^2 broadcast to both lanes of each pair
    const __m256d mag2 = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0b0101));
    const __m256d mag = _mm256_sqrt_pd(mag2);
    // factor = max(1 - tau/mag, 0); mag <= tau (including 0) gives 0
    const __m256d factor =
        _mm256_max_pd(_mm256_sub_pd(one, _mm256_div_pd(vtau, mag)), zero);
    const __m256d keep = _mm256_cmp_pd(mag, vtau, _CMP_GT_OQ);
    const __m256d res = _mm256_and_pd(_mm256_mul_pd(v, factor), keep);
    _mm256_storeu_pd(po + 2 * i, res);
  }
  for (; i < n; ++i) {
    const double mag =
        std::sqrt(x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
    out[i] = (mag <= tau) ? Complex{0.0, 0.0} : x[i] * (1.0 - tau / mag);
  }
}

void magnitudes(const Complex* x, double* out, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  const std::size_t quads = (n / 4) * 4;
  for (; i < quads; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(px + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(px + 2 * i + 4);
    // hadd yields [q0, q2, q1, q3]; permute restores index order
    const __m256d mag2 = _mm256_hadd_pd(_mm256_mul_pd(v0, v0),
                                        _mm256_mul_pd(v1, v1));
    const __m256d ordered = _mm256_permute4x64_pd(mag2, 0b11011000);
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(ordered));
  }
  for (; i < n; ++i) {
    out[i] = std::sqrt(x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  }
}

}  // namespace dbci::kernels::avx2

#endif  // x86_64
