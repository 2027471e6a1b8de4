#pragma once

// Derivative-free search for probability vectors that certify
// indistinguishability when the obvious choices miss. The objective,
// violation(p) = -min_margin of the ensemble conversion report, is
// piecewise linear and non-smooth, so the search is a full simplex grid
// pass followed by coordinate-pair transfer refinement with a shrinking
// step. Everything is deterministic for a fixed config.

#include <cstdint>
#include <vector>

#include "loccgate/witness.hpp"

namespace loccgate {

struct SearchConfig {
  int grid_resolution = 50;   // simplex step 1/resolution, entries >= 1 step
  int refine_iters = 40;
  double refine_shrink = 0.5;
  std::uint64_t seed = 0;     // echoed in reports; the search itself is
                              // deterministic and draws nothing
};

struct SearchResult {
  std::vector<double> best_probs;
  double best_violation = 0.0;
  long evaluations = 0;
  // Every improvement, in order: (probs, violation). Non-decreasing.
  std::vector<std::pair<std::vector<double>, double>> trace;
  // best_violation > 10*tol_major certifies the set indistinguishable for
  // best_probs.
  bool certifies = false;
};

/// -min_margin over the paired-cut coarse-grainings for given
/// probabilities (zero entries allowed: they drop out of the problem).
double violation(const StateSet& states,
                 const std::vector<PureState>& detectors,
                 const std::vector<double>& probs, const PairedCut& cut,
                 const Tolerances& tol = {});

/// Grid pass over all positive simplex points with entries k/resolution
/// (k >= 1), then pairwise-transfer local refinement projected onto the
/// simplex. Grid ties break toward the lexicographically smaller vector.
SearchResult search_probabilities(const StateSet& states,
                                  const std::vector<PureState>& detectors,
                                  const PairedCut& cut,
                                  const SearchConfig& config = {},
                                  const Tolerances& tol = {});

struct DetectorSpectrumRow {
  double mu;  // larger squared Schmidt coefficient given to every detector
  SearchResult search;
};

struct DetectorSpectrumSweep {
  std::vector<DetectorSpectrumRow> rows;
  double max_entangled_violation = 0.0;  // reference at mu = 1/2
  // True if some mu != 1/2 strictly beats the maximally entangled
  // detectors (empirical probe; no such case is known).
  bool nonmax_beats_max = false;
};

/// Reruns the probability search with every detector's Schmidt spectrum
/// replaced by (mu, 1-mu) in its own singular frame, for each mu on the
/// grid. Detectors must be two-qubit bipartite states. Only the Schmidt
/// spectrum is varied; the local frames stay fixed, so mu = 1/2
/// reproduces maximally entangled detectors exactly.
DetectorSpectrumSweep sweep_detector_spectrum(
    const StateSet& states, const std::vector<PureState>& detectors,
    const PairedCut& cut, const std::vector<double>& mu_grid,
    const SearchConfig& config = {}, const Tolerances& tol = {});

/// A detector with its Schmidt coefficients replaced by (sqrt mu,
/// sqrt(1-mu)) in its own singular frame.
PureState reshape_detector_spectrum(const PureState& detector, double mu);

}  // namespace loccgate
