#include "loccgate/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace loccgate {

std::vector<double> prefix_sums(std::span<const double> v) {
  std::vector<double> out(v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    out[i] = acc;
  }
  return out;
}

namespace {

void check_entries(const std::vector<double>& v, double tol,
                   const char* label) {
  if (v.empty()) throw InputError(std::string(label) + " vector is empty");
  for (double e : v) {
    if (!std::isfinite(e))
      throw InputError(std::string(label) + " vector has non-finite entry");
    if (e < -tol)
      throw InputError(std::string(label) + " vector has negative entry " +
                       std::to_string(e));
  }
}

}  // namespace

MajorizationReport majorizes(std::vector<double> x, std::vector<double> y,
                             double tol) {
  check_entries(x, tol, "majorizing");
  check_entries(y, tol, "majorized");
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  if (std::abs(sx - sy) > tol)
    throw InputError("majorization: sums differ by " +
                     std::to_string(sx - sy));

  const std::size_t len = std::max(x.size(), y.size());
  x.resize(len, 0.0);
  y.resize(len, 0.0);
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());

  MajorizationReport rep;
  rep.tol = tol;
  rep.target = x;
  rep.source = y;
  rep.prefix_margins.resize(len);
  double px = 0.0, py = 0.0;
  double min_all = std::numeric_limits<double>::infinity();
  double min_proper = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < len; ++k) {
    px += x[k];
    py += y[k];
    const double margin = px - py;
    rep.prefix_margins[k] = margin;
    min_all = std::min(min_all, margin);
    if (k + 1 < len) min_proper = std::min(min_proper, margin);
  }
  // Length-1 vectors have no proper prefix; the total is the only margin.
  rep.min_margin = (len == 1) ? rep.prefix_margins[0] : min_proper;
  rep.holds = min_all >= -tol;
  return rep;
}

MajorizationReport nielsen_possible(const PureState& source,
                                    const PureState& target, const Cut& cut,
                                    double tol) {
  if (source.dims() != target.dims())
    throw InputError("nielsen: source/target cut mismatch (dims differ)");
  const auto ls = schmidt_vector(source, cut);
  const auto lt = schmidt_vector(target, cut);
  return majorizes(lt.probs, ls.probs, tol);
}

MajorizationReport jonathan_plenio_possible(const PureState& source,
                                            const Cut& cut,
                                            const Ensemble& ensemble,
                                            const Cut& ensemble_cut,
                                            double tol) {
  if (ensemble.entries.empty()) throw InputError("ensemble is empty");
  double psum = 0.0;
  for (const auto& e : ensemble.entries) {
    if (!(e.p > 0.0)) throw InputError("ensemble probabilities must be > 0");
    if (e.state.dims() != ensemble.entries.front().state.dims())
      throw InputError("ensemble states must share dims");
    psum += e.p;
  }
  if (std::abs(psum - 1.0) > Tolerances{}.norm)
    throw InputError("ensemble probabilities sum to " + std::to_string(psum));

  const auto lam = schmidt_vector(source, cut);
  std::vector<std::vector<double>> specs;
  specs.reserve(ensemble.entries.size());
  std::size_t len = lam.probs.size();
  for (const auto& e : ensemble.entries) {
    specs.push_back(schmidt_vector(e.state, ensemble_cut).probs);
    len = std::max(len, specs.back().size());
  }
  std::vector<double> avg(len, 0.0);
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t k = 0; k < specs[i].size(); ++k)
      avg[k] += ensemble.entries[i].p * specs[i][k];
  return majorizes(std::move(avg), lam.probs, tol);
}

}  // namespace loccgate
