#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace loccgate {

using Amplitude = std::complex<double>;

/// Bad or inconsistent input data (malformed files, invariant violations).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric breakdown that valid input should never trigger (SVD failure,
/// a theorem-guaranteed product check missing its tolerance, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical tolerances used throughout. `rank` is looser than `norm`
/// because squared singular values carry half the significant digits.
struct Tolerances {
  double norm = 1e-9;   // state normalization
  double orth = 1e-9;   // pairwise orthogonality
  double rank = 1e-8;   // squared Schmidt coefficient considered nonzero
  double major = 1e-9;  // majorization prefix-margin comparisons
};

/// Dense amplitude vectors are capped at this total dimension.
inline constexpr std::size_t kMaxTotalDim = std::size_t{1} << 20;

}  // namespace loccgate
