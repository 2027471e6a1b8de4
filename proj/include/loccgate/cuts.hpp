#pragma once

// Bipartitions ("cuts") of a multipartite state, the regrouped coefficient
// matrix across a cut, and the Schmidt data derived from it.
//
// A Schmidt vector here always means the squared Schmidt coefficients
// (the eigenvalues of either reduced state), sorted descending. All
// majorization machinery operates on these probabilities.

#include <Eigen/Dense>
#include <vector>

#include "loccgate/state.hpp"

namespace loccgate {

/// An ordered bipartition of party indices. Left and right must be
/// disjoint, nonempty, and together cover 0..N-1.
struct Cut {
  std::vector<int> left;
  std::vector<int> right;
};

void validate_cut(const Cut& cut, int parties);

Cut flipped(const Cut& cut);

/// {party} vs all other parties.
Cut single_party_cut(int party, int parties);

/// Coefficient matrix of `s` across `cut`: rows indexed by the left
/// group's multi-index (in the cut's listed order), columns by the right
/// group's. A pure index permutation, so the Frobenius norm is 1.
Eigen::MatrixXcd regroup(const PureState& s, const Cut& cut);

/// Squared Schmidt coefficients, descending; length min(dim_L, dim_R).
struct SchmidtVector {
  std::vector<double> probs;
};

SchmidtVector schmidt_vector(const PureState& s, const Cut& cut);

/// Squared singular values of an already-regrouped matrix, descending.
std::vector<double> squared_singular_values(const Eigen::MatrixXcd& m);

/// E_k = sum_{i >= k} lambda_i (1-based k), computed as 1 minus the sum of
/// the k-1 largest so that E_1 is exactly 1. Non-increasing under LOCC.
double vidal_monotone(const PureState& s, const Cut& cut, int k);

/// Number of squared Schmidt coefficients above tol.
int schmidt_rank(const PureState& s, const Cut& cut,
                 double tol = Tolerances{}.rank);

/// True iff the state is a product across every single-party-vs-rest cut.
bool is_fully_product(const PureState& s, double tol = Tolerances{}.rank);

struct EntanglementScan {
  bool entangled = false;
  Cut witness_cut;  // first single-party-vs-rest cut with rank > 1
};

/// Negation of is_fully_product, with the witnessing cut when entangled.
EntanglementScan is_entangled_some_cut(const PureState& s,
                                       double tol = Tolerances{}.rank);

}  // namespace loccgate
