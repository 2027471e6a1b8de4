#include "loccgate/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "loccgate/kernels.hpp"

namespace loccgate {

namespace {

// Nonreal cube root of unity, fixed as exp(2 pi i / 3). The other root
// would swap the two omega-phased 3x3 states; harmless either way.
Amplitude omega3() { return {-0.5, std::sqrt(3.0) / 2.0}; }

std::string dims_to_string(const std::vector<int>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<std::size_t> index_strides(const std::vector<int>& dims) {
  std::vector<std::size_t> stride(dims.size());
  std::size_t w = 1;
  for (std::size_t j = dims.size(); j-- > 0;) {
    stride[j] = w;
    w *= static_cast<std::size_t>(dims[j]);
  }
  return stride;
}

std::size_t checked_total_dim(const std::vector<int>& dims,
                              std::size_t max_dim) {
  if (dims.empty()) throw InputError("state needs at least one party");
  std::size_t total = 1;
  for (int d : dims) {
    if (d < 1) throw InputError("local dimensions must be positive");
    if (total > max_dim / static_cast<std::size_t>(d))
      throw InputError("total dimension exceeds the cap of " +
                       std::to_string(max_dim));
    total *= static_cast<std::size_t>(d);
  }
  return total;
}

PureState::PureState(std::vector<int> dims, std::vector<Amplitude> amps,
                     double tol_norm)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  const std::size_t total = checked_total_dim(dims_);
  if (amps_.size() != total)
    throw InputError("amplitude count " + std::to_string(amps_.size()) +
                     " does not match dims " + dims_to_string(dims_));
  for (const Amplitude& a : amps_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw InputError("non-finite amplitude");
  const double n2 = kernels::norm_sq(amps_.data(), amps_.size());
  if (std::abs(std::sqrt(n2) - 1.0) > tol_norm)
    throw InputError("state is not normalized (norm = " +
                     std::to_string(std::sqrt(n2)) + ")");
}

PureState basis_state(std::vector<int> dims, const std::vector<int>& levels) {
  const std::size_t total = checked_total_dim(dims);
  if (levels.size() != dims.size())
    throw InputError("basis_state: one level per party required");
  const auto stride = index_strides(dims);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (levels[j] < 0 || levels[j] >= dims[j])
      throw InputError("basis_state: level out of range");
    idx += static_cast<std::size_t>(levels[j]) * stride[j];
  }
  std::vector<Amplitude> amps(total, Amplitude{0.0, 0.0});
  amps[idx] = 1.0;
  return PureState(std::move(dims), std::move(amps));
}

PureState normalized_state(std::vector<int> dims,
                           std::vector<Amplitude> amps) {
  const double n2 = kernels::norm_sq(amps.data(), amps.size());
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw InputError("cannot normalize a zero or non-finite vector");
  kernels::scale(1.0 / std::sqrt(n2), amps.data(), amps.size());
  return PureState(std::move(dims), std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b,
                 std::size_t max_dim) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  checked_total_dim(dims, max_dim);
  std::vector<Amplitude> amps(a.total_dim() * b.total_dim(),
                              Amplitude{0.0, 0.0});
  kernels::outer_acc(1.0, a.amps().data(), a.total_dim(), b.amps().data(),
                     b.total_dim(), amps.data());
  return PureState(std::move(dims), std::move(amps));
}

Amplitude inner(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims())
    throw InputError("inner: dims mismatch " + dims_to_string(a.dims()) +
                     " vs " + dims_to_string(b.dims()));
  return kernels::dot_conj(a.amps().data(), b.amps().data(), a.total_dim());
}

PureState conjugate(const PureState& s) {
  std::vector<Amplitude> out(s.total_dim());
  kernels::conjugate(s.amps().data(), out.data(), out.size());
  return PureState(s.dims(), std::move(out));
}

PureState apply_local_unitary(const PureState& s, int party,
                              const Eigen::MatrixXcd& u) {
  if (party < 0 || party >= s.parties())
    throw InputError("apply_local_unitary: party index out of range");
  const int d = s.local_dim(party);
  if (u.rows() != d || u.cols() != d)
    throw InputError("apply_local_unitary: matrix does not match local dim");
  const auto stride = index_strides(s.dims());
  const std::size_t step = stride[static_cast<std::size_t>(party)];
  const std::size_t total = s.total_dim();
  std::vector<Amplitude> out(total, Amplitude{0.0, 0.0});
  const auto& in = s.amps();
  // Iterate over global indices whose digit at `party` is zero; each such
  // base index carries one local d-vector at offsets base + k*step.
  const std::size_t block = step * static_cast<std::size_t>(d);
  for (std::size_t hi = 0; hi < total; hi += block) {
    for (std::size_t lo = 0; lo < step; ++lo) {
      const std::size_t base = hi + lo;
      for (int kk = 0; kk < d; ++kk) {
        Amplitude acc{0.0, 0.0};
        for (int k = 0; k < d; ++k)
          acc += u(kk, k) * in[base + static_cast<std::size_t>(k) * step];
        out[base + static_cast<std::size_t>(kk) * step] = acc;
      }
    }
  }
  return PureState(s.dims(), std::move(out));
}

OrthonormalityReport check_orthonormal(const std::vector<PureState>& states,
                                       double tol) {
  if (states.empty()) throw InputError("empty state list");
  for (const auto& s : states)
    if (s.dims() != states.front().dims())
      throw InputError("orthonormality check: dims mismatch in list");
  OrthonormalityReport rep;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i; j < states.size(); ++j) {
      const Amplitude ip = inner(states[i], states[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      const double viol = std::abs(ip - target);
      if (viol > rep.max_violation) {
        rep.max_violation = viol;
        rep.worst_i = static_cast<int>(i);
        rep.worst_j = static_cast<int>(j);
      }
    }
  }
  rep.ok = rep.max_violation <= tol;
  return rep;
}

StateSet::StateSet(std::vector<PureState> states, double tol_orth)
    : states_(std::move(states)) {
  const auto rep = check_orthonormal(states_, tol_orth);
  if (!rep.ok)
    throw InputError(
        "state set is not orthonormal: |<" + std::to_string(rep.worst_i) +
        "|" + std::to_string(rep.worst_j) + "> - delta| = " +
        std::to_string(rep.max_violation));
}

PureState bell_state(int which) {
  const double r = 1.0 / std::numbers::sqrt2;
  std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
  switch (which) {
    case 1: amps[0] = r; amps[3] = r; break;   // (|00> + |11>)/sqrt2
    case 2: amps[0] = r; amps[3] = -r; break;  // (|00> - |11>)/sqrt2
    case 3: amps[1] = r; amps[2] = r; break;   // (|01> + |10>)/sqrt2
    case 4: amps[1] = r; amps[2] = -r; break;  // (|01> - |10>)/sqrt2
    default: throw InputError("bell_state: index must be 1..4");
  }
  return PureState({2, 2}, std::move(amps));
}

PureState ghz_state(int which) {
  // G_{2m-1}, G_{2m} = (|xyz> +- |!x !y !z>)/sqrt2 for the four base
  // patterns 000, 010, 100, 001.
  static constexpr int base[4][3] = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0},
                                     {0, 0, 1}};
  if (which < 1 || which > 8) throw InputError("ghz_state: index must be 1..8");
  const int* b = base[(which - 1) / 2];
  const double sign = (which % 2 == 1) ? 1.0 : -1.0;
  const double r = 1.0 / std::numbers::sqrt2;
  std::vector<Amplitude> amps(8, Amplitude{0.0, 0.0});
  const std::size_t i0 = static_cast<std::size_t>(b[0] * 4 + b[1] * 2 + b[2]);
  const std::size_t i1 =
      static_cast<std::size_t>((1 - b[0]) * 4 + (1 - b[1]) * 2 + (1 - b[2]));
  amps[i0] = r;
  amps[i1] = sign * r;
  return PureState({2, 2, 2}, std::move(amps));
}

PureState gen_max_entangled_state(int d, int shift, int phase) {
  if (d < 2) throw InputError("gen_max_entangled: dimension must be >= 2");
  const double r = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Amplitude> amps(static_cast<std::size_t>(d) * d,
                              Amplitude{0.0, 0.0});
  for (int k = 0; k < d; ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(phase * k) / d;
    const int col = ((k + shift) % d + d) % d;
    amps[static_cast<std::size_t>(k) * d + col] =
        r * Amplitude{std::cos(angle), std::sin(angle)};
  }
  return PureState({d, d}, std::move(amps));
}

namespace {

PureState omega_phased_3x3(int phase_power) {
  // 1/sqrt3 (|00> + w^p |11> + w^2p |22>); w^2 = conj(w) keeps the
  // components exact instead of accumulating rounding through products.
  const double r = 1.0 / std::sqrt(3.0);
  const Amplitude pow3[3] = {{1.0, 0.0}, omega3(), std::conj(omega3())};
  std::vector<Amplitude> amps(9, Amplitude{0.0, 0.0});
  for (int k = 0; k < 3; ++k)
    amps[static_cast<std::size_t>(k) * 3 + k] = r * pow3[(phase_power * k) % 3];
  return PureState({3, 3}, std::move(amps));
}

PureState shift_3x3() {
  // 1/sqrt3 (|01> + |12> + |20>)
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<Amplitude> amps(9, Amplitude{0.0, 0.0});
  amps[0 * 3 + 1] = r;
  amps[1 * 3 + 2] = r;
  amps[2 * 3 + 0] = r;
  return PureState({3, 3}, std::move(amps));
}

std::vector<PureState> bell_triple() {
  return {bell_state(1), bell_state(2), bell_state(3)};
}

}  // namespace

FamilyStates build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::bell4: {
      std::vector<PureState> b{bell_state(1), bell_state(2), bell_state(3),
                               bell_state(4)};
      return {StateSet(b), b};
    }
    case Family::ghz8: {
      std::vector<PureState> g;
      for (int i = 1; i <= 8; ++i) g.push_back(ghz_state(i));
      return {StateSet(g), g};
    }
    case Family::gen_max_entangled: {
      std::vector<PureState> v{
          gen_max_entangled_state(spec.d, spec.shift, spec.phase)};
      return {StateSet(std::move(v)), {}};
    }
    case Family::s_set: {
      std::vector<PureState> s{omega_phased_3x3(1), omega_phased_3x3(2),
                               shift_3x3()};
      return {StateSet(std::move(s)), bell_triple()};
    }
    case Family::s_prime_set: {
      std::vector<PureState> s{omega_phased_3x3(1), omega_phased_3x3(2),
                               basis_state({3, 3}, {0, 1})};
      return {StateSet(std::move(s)), bell_triple()};
    }
    case Family::a_family: {
      if (!(spec.a > 0.0 && spec.a < 1.0))
        throw InputError("a_family requires 0 < a < 1");
      const double a = spec.a;
      const double b = std::sqrt(1.0 - a * a);
      const double r = 1.0 / std::numbers::sqrt2;
      std::vector<Amplitude> a1(4, Amplitude{}), a2(4, Amplitude{}),
          a3(4, Amplitude{});
      a1[0] = a;  a1[3] = b;
      a2[0] = b;  a2[3] = -a;
      a3[1] = r;  a3[2] = r;
      std::vector<PureState> s{PureState({2, 2}, std::move(a1)),
                               PureState({2, 2}, std::move(a2)),
                               PureState({2, 2}, std::move(a3))};
      return {StateSet(std::move(s)), bell_triple()};
    }
  }
  throw InputError("unknown family");
}

}  // namespace loccgate
