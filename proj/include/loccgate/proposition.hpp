#pragma once

// Full-basis indistinguishability. For a complete orthonormal basis
// {psi_k} of d_1 (x) ... (x) d_N, the doubled state
//
//     (1/sqrt D) sum_k psi_k (x) conj(psi_k),   D = prod d_j,
//
// is the same vector for every basis (it equals sum_j Phi+ on each
// (party j, copy j) pair), hence a product across every pairwise cut. A
// local discrimination protocol for the basis would therefore create
// entanglement across a cut where there is none, so a complete basis with
// at least one entangled vector is LOCC-indistinguishable, even
// probabilistically. A fully product complete basis, conversely, can be
// distinguished probabilistically.

#include <cstdint>
#include <vector>

#include "loccgate/cuts.hpp"
#include "loccgate/state.hpp"

namespace loccgate {

/// A complete orthonormal basis of prod(dims) vectors.
struct BasisSpec {
  std::vector<int> dims;
  std::vector<PureState> vectors;
};

void validate_basis(const BasisSpec& basis, double tol_orth = Tolerances{}.orth);

/// (1/sqrt D) sum_k psi_k (x) conj(psi_k) over 2N parties, originals
/// first, conjugated copies after.
PureState build_full_basis_witness(const BasisSpec& basis);

enum class BasisVerdict {
  LOCC_INDISTINGUISHABLE_DET_AND_PROB,
  PROB_DISTINGUISHABLE_PRODUCT_BASIS,
};

const char* to_string(BasisVerdict v);

struct PropositionVerdict {
  bool any_entangled = false;
  int witnessing_vector = -1;  // first entangled basis vector, or -1
  BasisVerdict verdict = BasisVerdict::PROB_DISTINGUISHABLE_PRODUCT_BASIS;
  // Residual weight beyond rank 1 (1 - largest squared Schmidt
  // coefficient) of the witness state, per pairwise (j, copy j) cut.
  std::vector<double> product_residuals;
};

/// Builds the witness, verifies it is product across every pairwise cut
/// (a NumericError if not: the construction guarantees it for any valid
/// basis), then scans the basis vectors for entanglement.
PropositionVerdict check_full_basis(const BasisSpec& basis,
                                    const Tolerances& tol = {});

/// Max over `trials` Haar-random U of || (U (x) conj(U)) Phi+_d - Phi+_d ||.
double uu_star_invariance_check(int d, int trials, std::uint64_t seed);

}  // namespace loccgate
