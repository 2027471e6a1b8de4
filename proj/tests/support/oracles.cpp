#include "support/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <functional>
#include <map>

namespace testsupport {

std::vector<double> partial_trace_spectrum(const loccgate::PureState& s,
                                           const std::vector<int>& left) {
  const auto& dims = s.dims();
  const auto stride = loccgate::index_strides(dims);
  const std::size_t total = s.total_dim();

  // Pack each global index into (left code, right code) by digit
  // extraction; remaining parties keep their original relative order.
  std::vector<char> is_left(dims.size(), 0);
  for (int p : left) is_left[static_cast<std::size_t>(p)] = 1;
  std::size_t dl = 1;
  for (int p : left) dl *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);

  std::vector<std::size_t> lcode(total, 0), rcode(total, 0);
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t lc = 0, rc = 0;
    for (int p : left) {
      const std::size_t sp = static_cast<std::size_t>(p);
      lc = lc * static_cast<std::size_t>(dims[sp]) + (g / stride[sp]) % dims[sp];
    }
    for (std::size_t sp = 0; sp < dims.size(); ++sp) {
      if (is_left[sp]) continue;
      rc = rc * static_cast<std::size_t>(dims[sp]) + (g / stride[sp]) % dims[sp];
    }
    lcode[g] = lc;
    rcode[g] = rc;
  }

  // rho_L[a,b] = sum over right index r of amp(a,r) conj(amp(b,r))
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dl),
                                                static_cast<Eigen::Index>(dl));
  std::map<std::size_t, std::vector<std::size_t>> buckets;
  for (std::size_t g = 0; g < total; ++g) buckets[rcode[g]].push_back(g);
  const auto& amps = s.amps();
  for (const auto& [r, members] : buckets) {
    for (std::size_t g1 : members)
      for (std::size_t g2 : members)
        rho(static_cast<Eigen::Index>(lcode[g1]),
            static_cast<Eigen::Index>(lcode[g2])) +=
            amps[g1] * std::conj(amps[g2]);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
  std::vector<double> out(static_cast<std::size_t>(eig.eigenvalues().size()));
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    out[static_cast<std::size_t>(i)] = eig.eigenvalues()[i];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::set<std::vector<int>> t_transform_reachable(std::vector<int> x,
                                                 int depth) {
  std::sort(x.begin(), x.end(), std::greater<>());
  std::set<std::vector<int>> seen{x};
  std::set<std::vector<int>> level{std::move(x)};
  const int n = static_cast<int>(seen.begin()->size());
  for (int d = 0; d < depth; ++d) {
    std::set<std::vector<int>> next;
    for (const auto& v : level) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(j)])
            continue;
          const int gap =
              v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
          for (int amt = 1; amt <= gap; ++amt) {
            std::vector<int> w = v;
            w[static_cast<std::size_t>(i)] -= amt;
            w[static_cast<std::size_t>(j)] += amt;
            std::sort(w.begin(), w.end(), std::greater<>());
            if (seen.insert(w).second) next.insert(std::move(w));
          }
        }
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  return seen;
}

bool t_transform_oracle(const std::vector<int>& x, const std::vector<int>& y,
                        int depth) {
  std::vector<int> ys = y;
  std::sort(ys.begin(), ys.end(), std::greater<>());
  const auto reach = t_transform_reachable(x, depth);
  return reach.count(ys) > 0;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  const std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, total);
  return out;
}

}  // namespace testsupport
