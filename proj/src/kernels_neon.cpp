// NEON kernel variants for aarch64, where NEON is baseline. One
// float64x2_t holds a single interleaved complex double [re, im].

#include <arm_neon.h>

#include "loccgate/kernels.hpp"

namespace loccgate::kernels {

namespace {

inline float64x2_t swap_lanes(float64x2_t v) { return vextq_f64(v, v, 1); }

Amplitude dot_conj_neon(const Amplitude* a, const Amplitude* b,
                        std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t acc_direct = vdupq_n_f64(0.0);  // [ar*br, ai*bi]
  float64x2_t acc_cross = vdupq_n_f64(0.0);   // [ai*br, ar*bi]
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t va = vld1q_f64(pa + 2 * i);
    float64x2_t vb = vld1q_f64(pb + 2 * i);
    acc_direct = vfmaq_f64(acc_direct, va, vb);
    acc_cross = vfmaq_f64(acc_cross, swap_lanes(va), vb);
  }
  const double re = vgetq_lane_f64(acc_direct, 0) + vgetq_lane_f64(acc_direct, 1);
  const double im = vgetq_lane_f64(acc_cross, 1) - vgetq_lane_f64(acc_cross, 0);
  return {re, im};
}

// alpha * x for one complex lane pair: even re*xr - im*xi, odd re*xi + im*xr.
inline float64x2_t cmul(float64x2_t vre, float64x2_t vim_signed,
                        float64x2_t x) {
  return vfmaq_f64(vmulq_f64(vim_signed, swap_lanes(x)), vre, x);
}

inline float64x2_t signed_imag(double im) {
  const double vals[2] = {-im, im};
  return vld1q_f64(vals);
}

void axpy_neon(Amplitude alpha, const Amplitude* x, Amplitude* y,
               std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const float64x2_t vre = vdupq_n_f64(alpha.real());
  const float64x2_t vim = signed_imag(alpha.imag());
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t vx = vld1q_f64(px + 2 * i);
    float64x2_t vy = vld1q_f64(py + 2 * i);
    vst1q_f64(py + 2 * i, vaddq_f64(vy, cmul(vre, vim, vx)));
  }
}

void scale_neon(Amplitude alpha, Amplitude* x, std::size_t n) {
  double* px = reinterpret_cast<double*>(x);
  const float64x2_t vre = vdupq_n_f64(alpha.real());
  const float64x2_t vim = signed_imag(alpha.imag());
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t vx = vld1q_f64(px + 2 * i);
    vst1q_f64(px + 2 * i, cmul(vre, vim, vx));
  }
}

void conjugate_neon(const Amplitude* x, Amplitude* out, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* po = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t vx = vld1q_f64(px + 2 * i);
    vx = vsetq_lane_f64(-vgetq_lane_f64(vx, 1), vx, 1);
    vst1q_f64(po + 2 * i, vx);
  }
}

double norm_sq_neon(const Amplitude* x, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t vx = vld1q_f64(px + 2 * i);
    acc = vfmaq_f64(acc, vx, vx);
  }
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

void outer_acc_neon(Amplitude s, const Amplitude* a, std::size_t na,
                    const Amplitude* b, std::size_t nb, Amplitude* out) {
  for (std::size_t i = 0; i < na; ++i)
    axpy_neon(s * a[i], b, out + i * nb, nb);
}

constexpr Backend kNeon = {
    "neon",     dot_conj_neon, axpy_neon,   scale_neon,
    conjugate_neon, norm_sq_neon,  outer_acc_neon,
};

}  // namespace

const Backend& neon_backend() { return kNeon; }

}  // namespace loccgate::kernels
