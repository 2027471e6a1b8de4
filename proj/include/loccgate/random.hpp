#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "loccgate/state.hpp"

namespace loccgate {

inline std::mt19937_64 seeded_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

/// Haar-distributed d x d unitary: QR of a complex Gaussian matrix with the
/// R diagonal's phases folded into Q (plain QR alone is not Haar).
Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng);

/// Normalized state with iid complex Gaussian amplitudes.
PureState random_state(std::vector<int> dims, std::mt19937_64& rng);

}  // namespace loccgate
