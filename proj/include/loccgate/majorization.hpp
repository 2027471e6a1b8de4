#pragma once

// Majorization order on probability vectors and the two LOCC conversion
// criteria built on it: the single-target test and the ensemble test.
//
// x majorizes y when, after sorting both descending and zero-padding to a
// common length, every prefix sum of x dominates the corresponding prefix
// sum of y. The reported margins are target-prefix minus source-prefix.
// The final prefix compares the totals, which the precondition already
// pins to be equal, so the decisive min_margin is taken over the proper
// prefixes k = 1..L-1 only.

#include <span>
#include <vector>

#include "loccgate/cuts.hpp"
#include "loccgate/state.hpp"

namespace loccgate {

/// A probabilistic mixture of pure states: the target of the ensemble
/// conversion criterion. Entries must have p > 0 and sum to 1.
struct Ensemble {
  struct Entry {
    double p;
    PureState state;
  };
  std::vector<Entry> entries;
};

struct MajorizationReport {
  std::vector<double> source;          // dominated vector, sorted + padded
  std::vector<double> target;          // dominating candidate, sorted + padded
  std::vector<double> prefix_margins;  // k = 1..L: prefix_target - prefix_source
  double min_margin = 0.0;             // min over proper prefixes k = 1..L-1
  bool holds = false;                  // all margins >= -tol
  double tol = 0.0;
};

std::vector<double> prefix_sums(std::span<const double> v);

/// Does x majorize y? Entries must be nonnegative within tol and the sums
/// must agree within tol; both vectors are sorted descending and padded
/// with zeros to a common length before comparison.
MajorizationReport majorizes(std::vector<double> x, std::vector<double> y,
                             double tol = Tolerances{}.major);

/// LOCC convertibility source -> target across a cut: possible iff the
/// target's Schmidt vector majorizes the source's.
MajorizationReport nielsen_possible(const PureState& source,
                                    const PureState& target, const Cut& cut,
                                    double tol = Tolerances{}.major);

/// LOCC convertibility source -> ensemble {p_i, phi_i}: possible iff the
/// probability-weighted average of the phi_i Schmidt vectors (each sorted
/// descending before averaging, zero-padded to a common length) majorizes
/// the source's Schmidt vector.
MajorizationReport jonathan_plenio_possible(const PureState& source,
                                            const Cut& cut,
                                            const Ensemble& ensemble,
                                            const Cut& ensemble_cut,
                                            double tol = Tolerances{}.major);

}  // namespace loccgate
