#include "loccgate/cuts.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace loccgate {

void validate_cut(const Cut& cut, int parties) {
  if (cut.left.empty() || cut.right.empty())
    throw InputError("cut: both sides must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(parties), 0);
  auto mark = [&](const std::vector<int>& side) {
    for (int p : side) {
      if (p < 0 || p >= parties)
        throw InputError("cut: party index " + std::to_string(p) +
                         " out of range");
      if (seen[static_cast<std::size_t>(p)]++)
        throw InputError("cut: party " + std::to_string(p) +
                         " listed twice");
    }
  };
  mark(cut.left);
  mark(cut.right);
  if (cut.left.size() + cut.right.size() != static_cast<std::size_t>(parties))
    throw InputError("cut: sides must cover all parties");
}

Cut flipped(const Cut& cut) { return {cut.right, cut.left}; }

Cut single_party_cut(int party, int parties) {
  Cut c;
  c.left = {party};
  for (int p = 0; p < parties; ++p)
    if (p != party) c.right.push_back(p);
  return c;
}

namespace {

std::size_t side_dim(const PureState& s, const std::vector<int>& side) {
  std::size_t d = 1;
  for (int p : side) d *= static_cast<std::size_t>(s.local_dim(p));
  return d;
}

// Global-index offsets for every multi-index of one side of a cut, in the
// side's own mixed-radix order (first listed party most significant).
std::vector<std::size_t> side_offsets(const PureState& s,
                                      const std::vector<int>& side) {
  const auto stride = index_strides(s.dims());
  const std::size_t n = side_dim(s, side);
  std::vector<std::size_t> offsets(n, 0);
  std::size_t repeat = n;  // run length of each digit value
  for (int p : side) {
    const std::size_t d = static_cast<std::size_t>(s.local_dim(p));
    repeat /= d;
    const std::size_t w = stride[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < n; ++i)
      offsets[i] += ((i / repeat) % d) * w;
  }
  return offsets;
}

}  // namespace

Eigen::MatrixXcd regroup(const PureState& s, const Cut& cut) {
  validate_cut(cut, s.parties());
  const auto rows = side_offsets(s, cut.left);
  const auto cols = side_offsets(s, cut.right);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(cols.size()));
  const auto& amps = s.amps();
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          amps[rows[i] + cols[j]];
  return m;
}

std::vector<double> squared_singular_values(const Eigen::MatrixXcd& m) {
  Eigen::VectorXd sv;
  if (std::min(m.rows(), m.cols()) > 64) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    if (svd.info() != Eigen::Success) throw NumericError("SVD did not converge");
    sv = svd.singularValues();
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    if (svd.info() != Eigen::Success) throw NumericError("SVD did not converge");
    sv = svd.singularValues();
  }
  std::vector<double> out(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    out[static_cast<std::size_t>(i)] = sv[i] * sv[i];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SchmidtVector schmidt_vector(const PureState& s, const Cut& cut) {
  SchmidtVector v{squared_singular_values(regroup(s, cut))};
  const double sum = std::accumulate(v.probs.begin(), v.probs.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-6)
    throw NumericError("Schmidt spectrum sums to " + std::to_string(sum) +
                       ", expected 1");
  return v;
}

double vidal_monotone(const PureState& s, const Cut& cut, int k) {
  const auto v = schmidt_vector(s, cut);
  const int len = static_cast<int>(v.probs.size());
  if (k < 1 || k > len)
    throw InputError("vidal_monotone: k must be in 1.." + std::to_string(len));
  double head = 0.0;
  for (int i = 0; i < k - 1; ++i) head += v.probs[static_cast<std::size_t>(i)];
  return 1.0 - head;
}

int schmidt_rank(const PureState& s, const Cut& cut, double tol) {
  const auto v = schmidt_vector(s, cut);
  int rank = 0;
  for (double p : v.probs)
    if (p > tol) ++rank;
  return rank;
}

bool is_fully_product(const PureState& s, double tol) {
  return !is_entangled_some_cut(s, tol).entangled;
}

EntanglementScan is_entangled_some_cut(const PureState& s, double tol) {
  EntanglementScan scan;
  if (s.parties() < 2) return scan;  // single party: nothing to cut
  for (int p = 0; p < s.parties(); ++p) {
    Cut c = single_party_cut(p, s.parties());
    if (schmidt_rank(s, c, tol) > 1) {
      scan.entangled = true;
      scan.witness_cut = std::move(c);
      return scan;
    }
  }
  return scan;
}

}  // namespace loccgate
