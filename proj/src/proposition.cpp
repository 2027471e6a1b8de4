#include "loccgate/proposition.hpp"

#include <algorithm>
#include <cmath>

#include "loccgate/kernels.hpp"
#include "loccgate/random.hpp"

namespace loccgate {

void validate_basis(const BasisSpec& basis, double tol_orth) {
  const std::size_t total = checked_total_dim(basis.dims);
  if (basis.vectors.size() != total)
    throw InputError("incomplete basis: expected " + std::to_string(total) +
                     " vectors, got " + std::to_string(basis.vectors.size()));
  for (const auto& v : basis.vectors)
    if (v.dims() != basis.dims)
      throw InputError("basis vector dims do not match the declared dims");
  const auto rep = check_orthonormal(basis.vectors, tol_orth);
  if (!rep.ok)
    throw InputError("basis is not orthonormal: violation " +
                     std::to_string(rep.max_violation) + " at pair (" +
                     std::to_string(rep.worst_i) + "," +
                     std::to_string(rep.worst_j) + ")");
}

PureState build_full_basis_witness(const BasisSpec& basis) {
  validate_basis(basis);
  const std::size_t total = checked_total_dim(basis.dims);
  std::vector<int> dims = basis.dims;
  dims.insert(dims.end(), basis.dims.begin(), basis.dims.end());
  checked_total_dim(dims);
  std::vector<Amplitude> joint(total * total, Amplitude{0.0, 0.0});
  const double w = 1.0 / std::sqrt(static_cast<double>(total));
  std::vector<Amplitude> conj_amps(total);
  for (const auto& v : basis.vectors) {
    kernels::conjugate(v.amps().data(), conj_amps.data(), total);
    kernels::outer_acc(w, v.amps().data(), total, conj_amps.data(), total,
                       joint.data());
  }
  return PureState(std::move(dims), std::move(joint));
}

const char* to_string(BasisVerdict v) {
  switch (v) {
    case BasisVerdict::LOCC_INDISTINGUISHABLE_DET_AND_PROB:
      return "LOCC_INDISTINGUISHABLE_DET_AND_PROB";
    case BasisVerdict::PROB_DISTINGUISHABLE_PRODUCT_BASIS:
      return "PROB_DISTINGUISHABLE_PRODUCT_BASIS";
  }
  return "?";
}

PropositionVerdict check_full_basis(const BasisSpec& basis,
                                    const Tolerances& tol) {
  validate_basis(basis, tol.orth);
  const PureState witness = build_full_basis_witness(basis);
  const int n = static_cast<int>(basis.dims.size());

  PropositionVerdict out;
  for (int j = 0; j < n; ++j) {
    Cut pair_cut;
    pair_cut.left = {j, n + j};
    for (int p = 0; p < 2 * n; ++p)
      if (p != j && p != n + j) pair_cut.right.push_back(p);
    const auto lam = schmidt_vector(witness, pair_cut);
    const double residual = 1.0 - lam.probs.front();
    out.product_residuals.push_back(residual);
    if (residual > tol.rank)
      throw NumericError(
          "full-basis witness is not product across pair cut " +
          std::to_string(j) + " (residual " + std::to_string(residual) +
          "); the construction guarantees this for any orthonormal basis");
  }

  for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
    if (is_entangled_some_cut(basis.vectors[k], tol.rank).entangled) {
      out.any_entangled = true;
      out.witnessing_vector = static_cast<int>(k);
      break;
    }
  }
  out.verdict = out.any_entangled
                    ? BasisVerdict::LOCC_INDISTINGUISHABLE_DET_AND_PROB
                    : BasisVerdict::PROB_DISTINGUISHABLE_PRODUCT_BASIS;
  return out;
}

double uu_star_invariance_check(int d, int trials, std::uint64_t seed) {
  if (d < 2) throw InputError("uu_star_invariance_check: d must be >= 2");
  if (trials < 1) throw InputError("uu_star_invariance_check: trials >= 1");
  // Phi+_d as a PureState on dims (d, d).
  const double r = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Amplitude> amps(static_cast<std::size_t>(d) * d,
                              Amplitude{0.0, 0.0});
  for (int k = 0; k < d; ++k)
    amps[static_cast<std::size_t>(k) * d + k] = r;
  const PureState phi_plus({d, d}, std::move(amps));

  double max_dev = 0.0;
  for (int t = 0; t < trials; ++t) {
    // Per-trial derived seed keeps trials independent and reproducible.
    auto rng = seeded_rng(seed + static_cast<std::uint64_t>(t));
    const Eigen::MatrixXcd u = haar_unitary(d, rng);
    PureState moved = apply_local_unitary(phi_plus, 0, u);
    moved = apply_local_unitary(moved, 1, u.conjugate());
    double diff2 = 0.0;
    for (std::size_t i = 0; i < moved.total_dim(); ++i)
      diff2 += std::norm(moved.amps()[i] - phi_plus.amps()[i]);
    max_dev = std::max(max_dev, std::sqrt(diff2));
  }
  return max_dev;
}

}  // namespace loccgate
