// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; nothing here runs unless cpu_has_avx2() said yes.
//
// Lane layout: one __m256d holds two interleaved complex doubles,
//   [c0.re, c0.im, c1.re, c1.im].
// swap_halves() gives [c0.im, c0.re, c1.im, c1.re], which together with
// fmaddsub implements the complex multiply without cross-lane shuffles.

#include <immintrin.h>

#include "loccgate/kernels.hpp"

namespace loccgate::kernels {

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

inline __m256d swap_halves(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// sign masks: flip imag lanes / flip real lanes
inline __m256d imag_flip_mask() { return _mm256_set_pd(-0.0, 0.0, -0.0, 0.0); }
inline __m256d real_flip_mask() { return _mm256_set_pd(0.0, -0.0, 0.0, -0.0); }

Amplitude dot_conj_avx2(const Amplitude* a, const Amplitude* b,
                        std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_direct = _mm256_setzero_pd();  // ar*br, ai*bi pairs
  __m256d acc_cross = _mm256_setzero_pd();   // ai*br, ar*bi pairs
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_direct = _mm256_fmadd_pd(va, vb, acc_direct);
    acc_cross = _mm256_fmadd_pd(swap_halves(va), vb, acc_cross);
  }
  double re = hsum(acc_direct);
  // imag = sum(ar*bi) - sum(ai*br): negate the even lanes, then sum.
  double im = hsum(_mm256_xor_pd(acc_cross, real_flip_mask()));
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

// res = alpha * x for two complex lanes at once.
inline __m256d cmul_broadcast(__m256d vre, __m256d vim, __m256d x) {
  // even: re*xr - im*xi ; odd: re*xi + im*xr
  return _mm256_fmaddsub_pd(vre, x, _mm256_mul_pd(vim, swap_halves(x)));
}

void axpy_avx2(Amplitude alpha, const Amplitude* x, Amplitude* y,
               std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d vre = _mm256_set1_pd(alpha.real());
  const __m256d vim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    vy = _mm256_add_pd(vy, cmul_broadcast(vre, vim, vx));
    _mm256_storeu_pd(py + 2 * i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(Amplitude alpha, Amplitude* x, std::size_t n) {
  double* px = reinterpret_cast<double*>(x);
  const __m256d vre = _mm256_set1_pd(alpha.real());
  const __m256d vim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(px + 2 * i, cmul_broadcast(vre, vim, vx));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void conjugate_avx2(const Amplitude* x, Amplitude* out, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* po = reinterpret_cast<double*>(out);
  const __m256d mask = imag_flip_mask();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    _mm256_storeu_pd(po + 2 * i, _mm256_xor_pd(vx, mask));
  }
  for (; i < n; ++i) out[i] = std::conj(x[i]);
}

double norm_sq_avx2(const Amplitude* x, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void outer_acc_avx2(Amplitude s, const Amplitude* a, std::size_t na,
                    const Amplitude* b, std::size_t nb, Amplitude* out) {
  for (std::size_t i = 0; i < na; ++i)
    axpy_avx2(s * a[i], b, out + i * nb, nb);
}

constexpr Backend kAvx2 = {
    "avx2",     dot_conj_avx2, axpy_avx2,   scale_avx2,
    conjugate_avx2, norm_sq_avx2,  outer_acc_avx2,
};

}  // namespace

const Backend& avx2_backend() { return kAvx2; }

}  // namespace loccgate::kernels
