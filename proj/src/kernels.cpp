// Scalar reference kernels and runtime backend selection.

#include "loccgate/kernels.hpp"

#include <cstdlib>
#include <string>

namespace loccgate::kernels {

namespace {

Amplitude dot_conj_scalar(const Amplitude* a, const Amplitude* b,
                          std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void axpy_scalar(Amplitude alpha, const Amplitude* x, Amplitude* y,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(Amplitude alpha, Amplitude* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void conjugate_scalar(const Amplitude* x, Amplitude* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::conj(x[i]);
}

double norm_sq_scalar(const Amplitude* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

void outer_acc_scalar(Amplitude s, const Amplitude* a, std::size_t na,
                      const Amplitude* b, std::size_t nb, Amplitude* out) {
  for (std::size_t i = 0; i < na; ++i) {
    const Amplitude sa = s * a[i];
    Amplitude* row = out + i * nb;
    for (std::size_t j = 0; j < nb; ++j) row[j] += sa * b[j];
  }
}

constexpr Backend kScalar = {
    "scalar",       dot_conj_scalar, axpy_scalar,
    scale_scalar,   conjugate_scalar, norm_sq_scalar,
    outer_acc_scalar,
};

}  // namespace

const Backend& scalar_backend() { return kScalar; }

#if defined(LOCCGATE_HAVE_AVX2)
const Backend& avx2_backend();  // kernels_avx2.cpp
bool cpu_has_avx2();
#endif
#if defined(LOCCGATE_HAVE_NEON)
const Backend& neon_backend();  // kernels_neon.cpp
#endif

const std::vector<const Backend*>& available_backends() {
  static const std::vector<const Backend*> list = [] {
    std::vector<const Backend*> v{&kScalar};
#if defined(LOCCGATE_HAVE_AVX2)
    if (cpu_has_avx2()) v.push_back(&avx2_backend());
#endif
#if defined(LOCCGATE_HAVE_NEON)
    v.push_back(&neon_backend());
#endif
    return v;
  }();
  return list;
}

const Backend* find_backend(std::string_view name) {
  for (const Backend* b : available_backends())
    if (name == b->name) return b;
  return nullptr;
}

const Backend& active_backend() {
  static const Backend* chosen = [] {
    if (const char* env = std::getenv("LOCCGATE_SIMD")) {
      const std::string want(env);
      if (want != "auto" && !want.empty())
        if (const Backend* b = find_backend(want)) return b;
      // Unknown or unavailable name falls through to auto selection.
    }
    return available_backends().back();  // widest available
  }();
  return *chosen;
}

}  // namespace loccgate::kernels
