#include "loccgate/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "loccgate/kernels.hpp"
#include "loccgate/parallel.hpp"

namespace loccgate {

void validate_problem(const WitnessProblem& problem, const Tolerances& tol) {
  const std::size_t k = problem.states.size();
  if (problem.detectors.size() != k || problem.probs.size() != k)
    throw InputError("witness problem needs matching counts of states, "
                     "detectors and probabilities");
  for (const auto& d : problem.detectors)
    if (d.dims() != problem.detectors.front().dims())
      throw InputError("detectors must share dims");
  double sum = 0.0;
  for (double p : problem.probs) {
    if (!(p > 0.0)) throw InputError("probabilities must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.norm)
    throw InputError("probabilities sum to " + std::to_string(sum));
}

PairedCut default_paired_cut(int state_parties, int detector_parties) {
  if (state_parties != detector_parties)
    throw InputError(
        "no default pairing when detector party count differs from the "
        "state party count; pass an explicit cut");
  PairedCut cut;
  for (int j = 0; j < state_parties; ++j)
    cut.groups.push_back({j, state_parties + j});
  return cut;
}

void validate_paired_cut(const PairedCut& cut, int joint_parties) {
  if (cut.groups.size() < 2)
    throw InputError("paired cut needs at least two groups");
  std::vector<char> seen(static_cast<std::size_t>(joint_parties), 0);
  for (const auto& g : cut.groups) {
    if (g.empty()) throw InputError("paired cut: empty group");
    for (int p : g) {
      if (p < 0 || p >= joint_parties)
        throw InputError("paired cut: party index out of range");
      if (seen[static_cast<std::size_t>(p)]++)
        throw InputError("paired cut: party listed twice");
    }
  }
  for (char c : seen)
    if (!c) throw InputError("paired cut: every joint party must appear");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::INDISTINGUISHABLE: return "INDISTINGUISHABLE";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    case Verdict::BOUNDARY: return "BOUNDARY";
  }
  return "?";
}

Verdict verdict_from_margin(double min_margin, double tol_major) {
  if (min_margin < -10.0 * tol_major) return Verdict::INDISTINGUISHABLE;
  if (min_margin <= 10.0 * tol_major) return Verdict::BOUNDARY;
  return Verdict::INCONCLUSIVE;
}

namespace {

PureState superpose(const StateSet& states,
                    const std::vector<PureState>& detectors,
                    const std::vector<double>& probs, const Tolerances& tol) {
  std::vector<int> dims = states.dims();
  const auto& ddims = detectors.front().dims();
  dims.insert(dims.end(), ddims.begin(), ddims.end());
  const std::size_t total = checked_total_dim(dims);
  std::vector<Amplitude> joint(total, Amplitude{0.0, 0.0});
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] > 0.0)) continue;
    kernels::outer_acc(std::sqrt(probs[i]), states[i].amps().data(),
                       states[i].total_dim(), detectors[i].amps().data(),
                       detectors[i].total_dim(), joint.data());
  }
  // Orthonormality of the states makes this norm 1; a miss means the
  // problem data was inconsistent after all.
  const double norm = std::sqrt(kernels::norm_sq(joint.data(), joint.size()));
  if (std::abs(norm - 1.0) > tol.norm)
    throw InputError("superposition norm is " + std::to_string(norm) +
                     "; states are not orthonormal enough");
  return PureState(std::move(dims), std::move(joint), tol.norm);
}

}  // namespace

PureState build_superposition(const WitnessProblem& problem,
                              const Tolerances& tol) {
  validate_problem(problem, tol);
  return superpose(problem.states, problem.detectors, problem.probs, tol);
}

std::vector<CutResult> evaluate_paired_cuts(
    const StateSet& states, const std::vector<PureState>& detectors,
    const std::vector<double>& probs, const PairedCut& cut,
    const Tolerances& tol, bool stronger_target) {
  if (detectors.size() != states.size() || probs.size() != states.size())
    throw InputError("states, detectors and probabilities must have "
                     "matching counts");
  const int n = static_cast<int>(states.dims().size());
  const int m = detectors.front().parties();
  validate_paired_cut(cut, n + m);

  const PureState joint = superpose(states, detectors, probs, tol);

  // Ensemble targets: the detectors alone, or (stronger variant) the full
  // kept pairs psi_i (x) phi_i.
  Ensemble ens;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] > 0.0)) continue;
    ens.entries.push_back(
        {probs[i], stronger_target ? tensor(states[i], detectors[i])
                                   : detectors[i]});
  }
  // Renormalize in case boundary evaluation dropped entries.
  double psum = 0.0;
  for (const auto& e : ens.entries) psum += e.p;
  for (auto& e : ens.entries) e.p /= psum;

  std::vector<CutResult> results;
  for (std::size_t split = 1; split < cut.groups.size(); ++split) {
    Cut joint_cut;
    for (std::size_t g = 0; g < cut.groups.size(); ++g) {
      auto& side = (g < split) ? joint_cut.left : joint_cut.right;
      side.insert(side.end(), cut.groups[g].begin(), cut.groups[g].end());
    }
    Cut det_cut;  // detector-internal indices induced by the pairing
    for (int p : joint_cut.left)
      if (p >= n) det_cut.left.push_back(p - n);
    for (int p : joint_cut.right)
      if (p >= n) det_cut.right.push_back(p - n);
    if (det_cut.left.empty() || det_cut.right.empty())
      throw InputError(
          "paired cut places all detector parties on one side; the "
          "conversion target has no cut to be evaluated across");

    const Cut& target_cut = stronger_target ? joint_cut : det_cut;
    CutResult r;
    r.majorization =
        jonathan_plenio_possible(joint, joint_cut, ens, target_cut, tol.major);
    r.joint_cut = std::move(joint_cut);
    r.detector_cut = std::move(det_cut);
    results.push_back(std::move(r));
  }
  return results;
}

WitnessReport check_indistinguishable(const WitnessProblem& problem,
                                      const PairedCut& cut,
                                      const Tolerances& tol,
                                      bool stronger_target) {
  validate_problem(problem, tol);
  WitnessReport rep;
  rep.tol = tol;
  rep.stronger_target = stronger_target;
  rep.joint_state_norm = 1.0;  // enforced by build; echoed for reports
  rep.cuts = evaluate_paired_cuts(problem.states, problem.detectors,
                                  problem.probs, cut, tol, stronger_target);
  rep.decisive = 0;
  for (std::size_t i = 1; i < rep.cuts.size(); ++i)
    if (rep.cuts[i].majorization.min_margin <
        rep.cuts[static_cast<std::size_t>(rep.decisive)].majorization.min_margin)
      rep.decisive = static_cast<int>(i);
  rep.min_margin =
      rep.cuts[static_cast<std::size_t>(rep.decisive)].majorization.min_margin;
  rep.verdict = verdict_from_margin(rep.min_margin, tol.major);
  return rep;
}

ParamSweep sweep_parameter(
    const std::function<WitnessProblem(double)>& make_problem,
    const std::vector<double>& grid, const PairedCut& cut,
    const Tolerances& tol, bool stronger_target,
    std::pair<double, double> domain) {
  if (grid.empty()) throw InputError("sweep: empty grid");
  ParamSweep sweep;
  sweep.grid = grid;
  sweep.reports.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    sweep.reports[i] = check_indistinguishable(make_problem(grid[i]), cut,
                                               tol, stronger_target);
  });

  auto margin_at = [&](double a) {
    return check_indistinguishable(make_problem(a), cut, tol, stronger_target)
        .min_margin;
  };

  // Scan intervals: the grid, widened by the edge intervals when the
  // domain extends past the grid span.
  std::vector<std::pair<double, double>> knots;  // (a, margin)
  if (domain.first < grid.front())
    knots.emplace_back(domain.first, margin_at(domain.first));
  for (std::size_t i = 0; i < grid.size(); ++i)
    knots.emplace_back(grid[i], sweep.reports[i].min_margin);
  if (domain.second > grid.back())
    knots.emplace_back(domain.second, margin_at(domain.second));

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double lo = knots[i].first, hi = knots[i + 1].first;
    double flo = knots[i].second;
    const double fhi = knots[i + 1].second;
    if ((flo < 0.0) == (fhi < 0.0)) continue;
    while (hi - lo > 1e-7) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = margin_at(mid);
      if ((fmid < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    sweep.boundaries.push_back(0.5 * (lo + hi));
  }
  return sweep;
}

OneWayReport verify_one_way_protocol(
    const StateSet& states, int measuring_party,
    const std::vector<std::vector<Amplitude>>& basis, const Tolerances& tol) {
  const auto& dims = states.dims();
  const int n = static_cast<int>(dims.size());
  if (measuring_party < 0 || measuring_party >= n)
    throw InputError("measuring party index out of range");
  const int d = dims[static_cast<std::size_t>(measuring_party)];
  if (static_cast<int>(basis.size()) != d)
    throw InputError("local basis must have exactly " + std::to_string(d) +
                     " vectors");
  {
    std::vector<PureState> bs;
    for (const auto& v : basis) {
      if (static_cast<int>(v.size()) != d)
        throw InputError("local basis vector has wrong dimension");
      bs.emplace_back(std::vector<int>{d}, v, tol.norm);
    }
    const auto rep = check_orthonormal(bs, tol.orth);
    if (!rep.ok)
      throw InputError("measurement basis is not orthonormal (violation " +
                       std::to_string(rep.max_violation) + ")");
  }

  const auto stride = index_strides(dims);
  const std::size_t step = stride[static_cast<std::size_t>(measuring_party)];
  const std::size_t block = step * static_cast<std::size_t>(d);
  const std::size_t total = states[0].total_dim();
  const std::size_t rest_dim = total / static_cast<std::size_t>(d);

  OneWayReport report;
  report.distinguishes = true;
  for (int outcome = 0; outcome < d; ++outcome) {
    OneWayOutcome out;
    out.outcome = outcome;
    const auto& v = basis[static_cast<std::size_t>(outcome)];
    // Unnormalized residual of each hypothesis on the remaining parties.
    std::vector<std::vector<Amplitude>> residuals;
    for (std::size_t s = 0; s < states.size(); ++s) {
      std::vector<Amplitude> r(rest_dim, Amplitude{0.0, 0.0});
      const auto& amps = states[s].amps();
      std::size_t rest = 0;
      for (std::size_t hi = 0; hi < total; hi += block)
        for (std::size_t lo = 0; lo < step; ++lo, ++rest) {
          Amplitude acc{0.0, 0.0};
          for (int k = 0; k < d; ++k)
            acc += std::conj(v[static_cast<std::size_t>(k)]) *
                   amps[hi + lo + static_cast<std::size_t>(k) * step];
          r[rest] = acc;
        }
      const double norm = std::sqrt(kernels::norm_sq(r.data(), r.size()));
      out.residual_norms.push_back(norm);
      if (norm > tol.rank) {
        out.survivors.push_back(static_cast<int>(s));
        kernels::scale(1.0 / norm, r.data(), r.size());
        residuals.push_back(std::move(r));
      }
    }
    for (std::size_t i = 0; i < residuals.size(); ++i)
      for (std::size_t j = i + 1; j < residuals.size(); ++j) {
        const double ov = std::abs(kernels::dot_conj(
            residuals[i].data(), residuals[j].data(), rest_dim));
        out.max_overlap = std::max(out.max_overlap, ov);
      }
    if (out.max_overlap > tol.orth) report.distinguishes = false;
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

}  // namespace loccgate
