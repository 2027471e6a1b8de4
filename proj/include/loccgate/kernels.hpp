#pragma once

// Amplitude-array kernels: the data-parallel inner loops everything else is
// built on. Each kernel has a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected once at runtime.
//
// Complex numbers are interleaved (re, im) pairs, the layout guaranteed by
// std::complex<double>. All kernels tolerate n == 0 and unaligned pointers.
//
// Backend selection order:
//   1. LOCCGATE_SIMD environment variable ("scalar", "avx2", "neon", "auto")
//   2. CPU feature detection (AVX2+FMA on x86-64; NEON is aarch64 baseline)
//   3. scalar fallback
//
// The SIMD variants are equivalence-tested against the scalar reference;
// reductions may differ from scalar results by accumulation order only.

#include <cstddef>
#include <string_view>
#include <vector>

#include "loccgate/common.hpp"

namespace loccgate::kernels {

struct Backend {
  const char* name;

  // sum_i conj(a[i]) * b[i]
  Amplitude (*dot_conj)(const Amplitude* a, const Amplitude* b, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(Amplitude alpha, const Amplitude* x, Amplitude* y,
               std::size_t n);

  // x[i] *= alpha
  void (*scale)(Amplitude alpha, Amplitude* x, std::size_t n);

  // out[i] = conj(x[i])
  void (*conjugate)(const Amplitude* x, Amplitude* out, std::size_t n);

  // sum_i |x[i]|^2
  double (*norm_sq)(const Amplitude* x, std::size_t n);

  // out[i*nb + j] += s * a[i] * b[j]   (accumulating outer product)
  void (*outer_acc)(Amplitude s, const Amplitude* a, std::size_t na,
                    const Amplitude* b, std::size_t nb, Amplitude* out);
};

/// Scalar reference backend (always available).
const Backend& scalar_backend();

/// Backend chosen at startup; stable for the lifetime of the process.
const Backend& active_backend();

/// All backends usable on this machine, scalar first.
const std::vector<const Backend*>& available_backends();

/// Lookup by name; nullptr if unknown or unavailable on this CPU.
const Backend* find_backend(std::string_view name);

// Convenience wrappers through the active backend.
inline Amplitude dot_conj(const Amplitude* a, const Amplitude* b,
                          std::size_t n) {
  return active_backend().dot_conj(a, b, n);
}
inline void axpy(Amplitude alpha, const Amplitude* x, Amplitude* y,
                 std::size_t n) {
  active_backend().axpy(alpha, x, y, n);
}
inline void scale(Amplitude alpha, Amplitude* x, std::size_t n) {
  active_backend().scale(alpha, x, n);
}
inline void conjugate(const Amplitude* x, Amplitude* out, std::size_t n) {
  active_backend().conjugate(x, out, n);
}
inline double norm_sq(const Amplitude* x, std::size_t n) {
  return active_backend().norm_sq(x, n);
}
inline void outer_acc(Amplitude s, const Amplitude* a, std::size_t na,
                      const Amplitude* b, std::size_t nb, Amplitude* out) {
  active_backend().outer_acc(s, a, na, b, nb, out);
}

}  // namespace loccgate::kernels
