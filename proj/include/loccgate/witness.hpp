#pragma once

// The detector-superposition test for local indistinguishability.
//
// Given orthonormal states psi_i to be distinguished, entangled detector
// states phi_i, and probabilities p_i, build the joint superposition
//
//     Psi = sum_i sqrt(p_i) |psi_i> (x) |phi_i>
//
// over (original parties, then detector parties). If the parties could
// discriminate the psi_i locally, they could then create phi_i with
// probability p_i on the detector side; so if the ensemble conversion
// Psi -> {p_i, phi_i} is impossible by LOCC across the paired cut, the
// set is locally indistinguishable. The converse is not implied: a
// possible conversion yields INCONCLUSIVE, never "distinguishable".

#include <functional>
#include <vector>

#include "loccgate/majorization.hpp"

namespace loccgate {

struct WitnessProblem {
  StateSet states;                   // the psi_i (orthonormal, N parties)
  std::vector<PureState> detectors;  // the phi_i (M parties, shared dims)
  std::vector<double> probs;         // positive, summing to 1
};

void validate_problem(const WitnessProblem& problem,
                      const Tolerances& tol = {});

/// Pairing of each original party with its detector partner(s): groups of
/// joint-state party indices (originals are 0..N-1, detectors N..N+M-1).
/// The test cuts are the adjacent coarse-grainings of the group list, so
/// two groups mean a single bipartite cut.
struct PairedCut {
  std::vector<std::vector<int>> groups;
};

/// Default pairing {j, N+j} for problems whose detectors have as many
/// parties as the states (the usual case).
PairedCut default_paired_cut(int state_parties, int detector_parties);

void validate_paired_cut(const PairedCut& cut, int joint_parties);

enum class Verdict { INDISTINGUISHABLE, INCONCLUSIVE, BOUNDARY };

const char* to_string(Verdict v);

/// Three-valued verdict from the decisive margin: margins inside
/// +-10*tol_major are reported BOUNDARY rather than asserted either way.
Verdict verdict_from_margin(double min_margin, double tol_major);

/// The ensemble-conversion report across one coarse-grained cut.
struct CutResult {
  Cut joint_cut;      // bipartition of the joint state
  Cut detector_cut;   // induced bipartition of the detector parties
  MajorizationReport majorization;
};

struct WitnessReport {
  double joint_state_norm = 0.0;
  std::vector<CutResult> cuts;  // one per adjacent coarse-graining
  int decisive = 0;             // index of the most violating cut
  double min_margin = 0.0;      // margin of the decisive cut
  Verdict verdict = Verdict::INCONCLUSIVE;
  bool stronger_target = false;
  Tolerances tol;
};

/// sum_i sqrt(p_i) psi_i (x) phi_i. Normalization is guaranteed by the
/// orthonormality of the psi_i alone, so detectors may overlap freely.
PureState build_superposition(const WitnessProblem& problem,
                              const Tolerances& tol = {});

/// Runs the ensemble conversion test on every coarse-graining of the
/// pairing. INDISTINGUISHABLE as soon as any cut forbids the conversion.
/// With stronger_target, the ensemble targets are psi_i (x) phi_i instead
/// of phi_i alone — a strictly stronger necessary condition kept behind
/// this flag.
WitnessReport check_indistinguishable(const WitnessProblem& problem,
                                      const PairedCut& cut,
                                      const Tolerances& tol = {},
                                      bool stronger_target = false);

/// Same evaluation with zero-probability entries dropped (used by the
/// search, whose simplex moves may touch the boundary).
std::vector<CutResult> evaluate_paired_cuts(
    const StateSet& states, const std::vector<PureState>& detectors,
    const std::vector<double>& probs, const PairedCut& cut,
    const Tolerances& tol = {}, bool stronger_target = false);

struct ParamSweep {
  std::vector<double> grid;
  std::vector<WitnessReport> reports;   // one per grid value, grid order
  std::vector<double> boundaries;       // bisected roots of min_margin(a)
};

/// Evaluates make_problem(a) at every grid value (grid points are
/// independent and run in parallel; output order is the grid order), then
/// bisects every sign change of the decisive margin to width 1e-7.
///
/// When `domain` extends past the grid, the two edge intervals are probed
/// as well, so a root between the last grid point and the domain edge is
/// still located. Domain endpoints must be valid parameter values.
ParamSweep sweep_parameter(
    const std::function<WitnessProblem(double)>& make_problem,
    const std::vector<double>& grid, const PairedCut& cut,
    const Tolerances& tol = {}, bool stronger_target = false,
    std::pair<double, double> domain = {0.0, 0.0});

struct OneWayOutcome {
  int outcome = 0;
  std::vector<int> survivors;          // hypotheses with residual norm > tol_rank
  std::vector<double> residual_norms;  // per hypothesis
  double max_overlap = 0.0;  // largest |<r_i|r_j>| between normalized survivors
};

struct OneWayReport {
  bool distinguishes = false;
  std::vector<OneWayOutcome> outcomes;
};

/// Checks whether one projective measurement on `measuring_party` (in the
/// given orthonormal local basis) followed by classical communication
/// finishes the discrimination: after every outcome the surviving residual
/// states must be pairwise orthogonal.
OneWayReport verify_one_way_protocol(
    const StateSet& states, int measuring_party,
    const std::vector<std::vector<Amplitude>>& basis,
    const Tolerances& tol = {});

}  // namespace loccgate
