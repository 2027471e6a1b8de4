#include "loccgate/search.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "loccgate/parallel.hpp"

namespace loccgate {

double violation(const StateSet& states,
                 const std::vector<PureState>& detectors,
                 const std::vector<double>& probs, const PairedCut& cut,
                 const Tolerances& tol) {
  const auto results = evaluate_paired_cuts(states, detectors, probs, cut,
                                            tol, /*stronger_target=*/false);
  double min_margin = results.front().majorization.min_margin;
  for (const auto& r : results)
    min_margin = std::min(min_margin, r.majorization.min_margin);
  return -min_margin;
}

namespace {

// All compositions of `resolution` into n positive parts, lexicographic.
std::vector<std::vector<int>> positive_compositions(int n, int resolution) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  const std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      if (left >= 1) {
        cur[static_cast<std::size_t>(pos)] = left;
        out.push_back(cur);
      }
      return;
    }
    for (int k = 1; left - k >= n - 1 - pos; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, resolution);
  return out;
}

std::vector<double> to_probs(const std::vector<int>& comp, int resolution) {
  std::vector<double> p(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    p[i] = static_cast<double>(comp[i]) / resolution;
  return p;
}

}  // namespace

SearchResult search_probabilities(const StateSet& states,
                                  const std::vector<PureState>& detectors,
                                  const PairedCut& cut,
                                  const SearchConfig& config,
                                  const Tolerances& tol) {
  if (config.grid_resolution < 2)
    throw InputError("search: grid resolution must be >= 2");
  if (!(config.refine_shrink > 0.0 && config.refine_shrink < 1.0))
    throw InputError("search: refine_shrink must be in (0,1)");
  const int n = static_cast<int>(states.size());
  if (static_cast<int>(detectors.size()) != n)
    throw InputError("search: one detector per state required");
  if (config.grid_resolution < n)
    throw InputError("search: resolution too small for a positive grid");

  const auto grid = positive_compositions(n, config.grid_resolution);
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    values[i] = violation(states, detectors,
                          to_probs(grid[i], config.grid_resolution), cut, tol);
  });

  SearchResult result;
  result.evaluations = static_cast<long>(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (values[i] > values[best] ||
        (values[i] == values[best] && grid[i] < grid[best]))
      best = i;
  }
  result.best_probs = to_probs(grid[best], config.grid_resolution);
  result.best_violation = values[best];
  result.trace.emplace_back(result.best_probs, result.best_violation);

  // Pairwise-transfer refinement: moving weight h from one entry to
  // another stays on the simplex by construction.
  double h = 1.0 / config.grid_resolution;
  for (int iter = 0; iter < config.refine_iters; ++iter) {
    std::vector<double> best_cand;
    double best_val = result.best_violation;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<double> cand = result.best_probs;
        if (cand[static_cast<std::size_t>(j)] < h - 1e-15) continue;
        cand[static_cast<std::size_t>(i)] += h;
        cand[static_cast<std::size_t>(j)] -= h;
        if (cand[static_cast<std::size_t>(j)] < 0.0)
          cand[static_cast<std::size_t>(j)] = 0.0;
        const double v = violation(states, detectors, cand, cut, tol);
        ++result.evaluations;
        if (v > best_val) {
          best_val = v;
          best_cand = std::move(cand);
        }
      }
    }
    if (best_cand.empty()) {
      h *= config.refine_shrink;
    } else {
      result.best_probs = std::move(best_cand);
      result.best_violation = best_val;
      result.trace.emplace_back(result.best_probs, result.best_violation);
    }
  }
  result.certifies = result.best_violation > 10.0 * tol.major;
  return result;
}

PureState reshape_detector_spectrum(const PureState& detector, double mu) {
  if (detector.parties() != 2 || detector.local_dim(0) != 2 ||
      detector.local_dim(1) != 2)
    throw InputError("detector spectrum sweep needs two-qubit detectors");
  if (!(mu >= 0.0 && mu <= 1.0))
    throw InputError("mu must lie in [0,1]");
  const Eigen::MatrixXcd m = regroup(detector, Cut{{0}, {1}});
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector2d coeffs(std::sqrt(mu), std::sqrt(1.0 - mu));
  const Eigen::MatrixXcd rebuilt =
      svd.matrixU() * coeffs.asDiagonal() * svd.matrixV().adjoint();
  std::vector<Amplitude> amps(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      amps[static_cast<std::size_t>(i) * 2 + static_cast<std::size_t>(j)] =
          rebuilt(i, j);
  return PureState({2, 2}, std::move(amps));
}

DetectorSpectrumSweep sweep_detector_spectrum(
    const StateSet& states, const std::vector<PureState>& detectors,
    const PairedCut& cut, const std::vector<double>& mu_grid,
    const SearchConfig& config, const Tolerances& tol) {
  DetectorSpectrumSweep sweep;

  auto run_at = [&](double mu) {
    std::vector<PureState> reshaped;
    reshaped.reserve(detectors.size());
    for (const auto& d : detectors)
      reshaped.push_back(reshape_detector_spectrum(d, mu));
    return search_probabilities(states, reshaped, cut, config, tol);
  };

  sweep.max_entangled_violation = run_at(0.5).best_violation;
  for (double mu : mu_grid) {
    DetectorSpectrumRow row{mu, run_at(mu)};
    if (mu != 0.5 && row.search.best_violation >
                         sweep.max_entangled_violation + 10.0 * tol.major)
      sweep.nonmax_beats_max = true;
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

}  // namespace loccgate
