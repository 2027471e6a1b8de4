#pragma once

// Multipartite pure states as dense amplitude vectors, plus the named
// state families (Bell, GHZ, generalized maximally entangled, the 3x3
// sets, and the a-parameterized two-qubit triple) used by the witness
// machinery.
//
// Index convention (used everywhere): row-major with party 0 most
// significant,  amp index = sum_j i_j * prod_{k>j} d_k.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "loccgate/common.hpp"

namespace loccgate {

/// Mixed-radix strides for the global amplitude index; stride[j] is the
/// weight of party j's digit.
std::vector<std::size_t> index_strides(const std::vector<int>& dims);

/// Product of local dimensions, guarded against overflow and the dense
/// representation cap.
std::size_t checked_total_dim(const std::vector<int>& dims,
                              std::size_t max_dim = kMaxTotalDim);

/// A normalized pure state of N parties with arbitrary local dimensions.
class PureState {
 public:
  PureState(std::vector<int> dims, std::vector<Amplitude> amps,
            double tol_norm = Tolerances{}.norm);

  const std::vector<int>& dims() const { return dims_; }
  const std::vector<Amplitude>& amps() const { return amps_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  std::size_t total_dim() const { return amps_.size(); }
  int local_dim(int party) const { return dims_[static_cast<size_t>(party)]; }

 private:
  std::vector<int> dims_;
  std::vector<Amplitude> amps_;
};

/// |i_0 i_1 ... i_{N-1}>
PureState basis_state(std::vector<int> dims, const std::vector<int>& levels);

/// Normalize an amplitude vector into a PureState (errors on zero vector).
PureState normalized_state(std::vector<int> dims, std::vector<Amplitude> amps);

/// Kronecker product; parties of `b` are appended after those of `a`.
PureState tensor(const PureState& a, const PureState& b,
                 std::size_t max_dim = kMaxTotalDim);

/// <a|b>, conjugate-linear in the first argument. Dims must match.
Amplitude inner(const PureState& a, const PureState& b);

/// Entrywise complex conjugate in the computational basis.
PureState conjugate(const PureState& s);

/// The state with a unitary applied to one party's local space.
PureState apply_local_unitary(const PureState& s, int party,
                              const Eigen::MatrixXcd& u);

struct OrthonormalityReport {
  bool ok = true;
  double max_violation = 0.0;  // max |<i|j> - delta_ij|
  int worst_i = -1, worst_j = -1;
};

/// Checks |<psi_i|psi_j> - delta_ij| <= tol for all pairs (including i==j,
/// which checks normalization). Dims must agree across the list.
OrthonormalityReport check_orthonormal(const std::vector<PureState>& states,
                                       double tol);

/// An orthonormal list of same-dims states (the sets to be distinguished).
class StateSet {
 public:
  explicit StateSet(std::vector<PureState> states,
                    double tol_orth = Tolerances{}.orth);

  const std::vector<PureState>& states() const { return states_; }
  const PureState& operator[](std::size_t i) const { return states_[i]; }
  std::size_t size() const { return states_.size(); }
  const std::vector<int>& dims() const { return states_.front().dims(); }

 private:
  std::vector<PureState> states_;
};

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

enum class Family { bell4, ghz8, gen_max_entangled, s_set, s_prime_set,
                    a_family };

struct FamilySpec {
  Family family = Family::bell4;
  // gen_max_entangled(d, shift, phase) = 1/sqrt(d) sum_k w^(phase*k) |k, k+shift mod d>
  int d = 0;
  int shift = 0;
  int phase = 0;
  // a_family: A1 = a|00> + b|11>, A2 = b|00> - a|11>, A3 = (|01>+|10>)/sqrt2,
  // with b = +sqrt(1 - a^2) and 0 < a < 1.
  double a = 0.0;

  static FamilySpec bell4() { return {Family::bell4, 0, 0, 0, 0.0}; }
  static FamilySpec ghz8() { return {Family::ghz8, 0, 0, 0, 0.0}; }
  static FamilySpec gen_max_entangled(int d, int shift, int phase) {
    return {Family::gen_max_entangled, d, shift, phase, 0.0};
  }
  static FamilySpec s_set() { return {Family::s_set, 0, 0, 0, 0.0}; }
  static FamilySpec s_prime_set() { return {Family::s_prime_set, 0, 0, 0, 0.0}; }
  static FamilySpec a_family(double a) {
    return {Family::a_family, 0, 0, 0, a};
  }
};

struct FamilyStates {
  StateSet states;
  // Default detector choice for the family; empty when none applies.
  std::vector<PureState> detectors;
};

/// The states of a named family, in their conventional order, together
/// with the family's default detectors:
///   bell4  -> the four Bell states, detectors = the same Bell states
///   ghz8   -> the eight GHZ states, detectors = the same GHZ states
///   s_set / s_prime_set / a_family -> detectors = {B1, B2, B3}
///   gen_max_entangled -> the single specified state, no detectors
FamilyStates build_family(const FamilySpec& spec);

/// Bell states B1..B4 (index 1-based, conventional order).
PureState bell_state(int which);

/// GHZ states G1..G8 (index 1-based, conventional order).
PureState ghz_state(int which);

/// 1/sqrt(d) sum_k w_d^(phase*k) |k, (k+shift) mod d>, w_d = exp(2 pi i / d).
PureState gen_max_entangled_state(int d, int shift, int phase);

}  // namespace loccgate
