// loccgate: certify local indistinguishability of orthogonal state sets.
//
// Subcommands:
//   check        detector-superposition test on a problem file
//   proposition  full-basis verdict for a complete orthonormal basis
//   sweep        parameter sweep over the a-family with boundary bisection
//   search       probability-simplex search for a certifying violation
//   oneway       verify a one-round projective discrimination protocol
//
// Reports are JSON on stdout (or --out FILE); the last stdout line is a
// single machine-readable token. Exit codes: 0 computed verdict, 1 input
// error, 2 numeric failure. LOCCGATE_THREADS caps worker threads.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "loccgate/io.hpp"
#include "loccgate/proposition.hpp"
#include "loccgate/search.hpp"
#include "loccgate/witness.hpp"

namespace {

using loccgate::InputError;
using loccgate::NumericError;
using loccgate::Tolerances;
using nlohmann::json;

struct CommonOpts {
  Tolerances tol;
  std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--tol-norm", opts.tol.norm, "normalization tolerance");
  cmd->add_option("--tol-orth", opts.tol.orth, "orthogonality tolerance");
  cmd->add_option("--tol-rank", opts.tol.rank, "Schmidt rank tolerance");
  cmd->add_option("--tol,--tol-major", opts.tol.major,
                  "majorization margin tolerance");
  cmd->add_option("--out", opts.out_path, "write the JSON report here");
}

json tolerances_json(const Tolerances& t) {
  return json{{"norm", t.norm},
              {"orth", t.orth},
              {"rank", t.rank},
              {"major", t.major}};
}

json majorization_json(const loccgate::MajorizationReport& m) {
  return json{{"source_spectrum", m.source},
              {"target_average", m.target},
              {"prefix_margins", m.prefix_margins},
              {"min_margin", m.min_margin},
              {"holds", m.holds}};
}

json witness_report_json(const loccgate::WitnessReport& rep) {
  json cuts = json::array();
  for (const auto& c : rep.cuts) {
    json jc = majorization_json(c.majorization);
    jc["left"] = c.joint_cut.left;
    jc["right"] = c.joint_cut.right;
    jc["detector_left"] = c.detector_cut.left;
    jc["detector_right"] = c.detector_cut.right;
    cuts.push_back(std::move(jc));
  }
  return json{{"joint_state_norm", rep.joint_state_norm},
              {"cuts", std::move(cuts)},
              {"decisive_cut", rep.decisive},
              {"min_margin", rep.min_margin},
              {"stronger_target", rep.stronger_target},
              {"verdict", loccgate::to_string(rep.verdict)}};
}

// Report to --out or stdout, then the final single-token line on stdout.
void emit(const json& report, const std::string& out_path,
          const std::string& final_line) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << report.dump(2) << "\n";
  }
  std::cout << final_line << "\n";
}

loccgate::PairedCut cut_from_flag(const std::string& cut_flag,
                                  int state_parties, int detector_parties) {
  if (cut_flag.empty())
    return loccgate::default_paired_cut(state_parties, detector_parties);
  return loccgate::PairedCut{loccgate::parse_groups(cut_flag)};
}

json groups_json(const loccgate::PairedCut& cut) {
  json out = json::array();
  for (const auto& g : cut.groups) out.push_back(g);
  return out;
}

int run_check(const std::string& path, const std::string& probs_flag,
              const std::string& cut_flag, bool stronger,
              const CommonOpts& opts) {
  const auto file = loccgate::parse_problem_file(path);
  if (file.detectors.empty())
    throw InputError("check needs a \"detectors\" section in " + path);
  std::vector<double> probs = file.probs;
  if (!probs_flag.empty())
    probs = loccgate::parse_probs(probs_flag, file.states.size());
  if (probs.empty())
    throw InputError("check needs probabilities (file \"probs\" or --probs)");

  loccgate::WitnessProblem problem{
      loccgate::StateSet(file.states, opts.tol.orth), file.detectors, probs};
  const auto cut =
      cut_from_flag(cut_flag, static_cast<int>(file.dims.size()),
                    static_cast<int>(file.detector_dims.size()));
  const auto rep =
      loccgate::check_indistinguishable(problem, cut, opts.tol, stronger);

  json out{{"command", "check"},
           {"input", loccgate::problem_to_json(file)},
           {"input_path", path},
           {"probs", probs},
           {"cut_groups", groups_json(cut)},
           {"tolerances", tolerances_json(opts.tol)},
           {"report", witness_report_json(rep)}};
  emit(out, opts.out_path, loccgate::to_string(rep.verdict));
  return 0;
}

int run_proposition(const std::string& path, const CommonOpts& opts) {
  const auto file = loccgate::parse_problem_file(path);
  loccgate::BasisSpec basis{file.dims, file.states};
  const auto verdict = loccgate::check_full_basis(basis, opts.tol);

  json out{{"command", "proposition"},
           {"input_path", path},
           {"dims", file.dims},
           {"tolerances", tolerances_json(opts.tol)},
           {"any_entangled", verdict.any_entangled},
           {"witnessing_vector", verdict.witnessing_vector},
           {"product_residuals", verdict.product_residuals},
           {"verdict", loccgate::to_string(verdict.verdict)}};
  std::ostringstream extra;
  extra << "witnessing_vector: ";
  if (verdict.witnessing_vector >= 0)
    extra << verdict.witnessing_vector;
  else
    extra << "none";
  extra << "\n" << loccgate::to_string(verdict.verdict);
  emit(out, opts.out_path, extra.str());
  return 0;
}

int run_sweep(const std::string& family, const std::string& probs_flag,
              const std::string& grid_flag, const std::string& cut_flag,
              const CommonOpts& opts) {
  if (family != "a-family" && family != "a_family")
    throw InputError("only the a-family sweep is parameterized; got " +
                     family);
  const auto grid = loccgate::parse_grid(grid_flag);
  for (double a : grid)
    if (!(a > 0.0 && a < 1.0))
      throw InputError("grid values must lie strictly inside (0,1)");
  const auto probs = loccgate::parse_probs(
      probs_flag.empty() ? std::string("uniform") : probs_flag, 3);

  const auto detectors =
      loccgate::build_family(loccgate::FamilySpec::a_family(0.5)).detectors;
  const auto make_problem = [&](double a) {
    auto fam = loccgate::build_family(loccgate::FamilySpec::a_family(a));
    return loccgate::WitnessProblem{fam.states, detectors, probs};
  };
  const auto cut = cut_from_flag(cut_flag, 2, 2);
  // The family parameter lives in the open interval (0,1); probing just
  // inside the endpoints lets the bisection bracket a root past the grid.
  const auto sweep = loccgate::sweep_parameter(
      make_problem, grid, cut, opts.tol, /*stronger_target=*/false,
      {1e-9, 1.0 - 1e-9});

  json rows = json::array();
  for (std::size_t i = 0; i < sweep.grid.size(); ++i)
    rows.push_back(json{
        {"a", sweep.grid[i]},
        {"min_margin", sweep.reports[i].min_margin},
        {"verdict", loccgate::to_string(sweep.reports[i].verdict)}});
  json out{{"command", "sweep"},
           {"family", "a-family"},
           {"probs", probs},
           {"grid", grid_flag},
           {"cut_groups", groups_json(cut)},
           {"tolerances", tolerances_json(opts.tol)},
           {"rows", std::move(rows)},
           {"boundaries", sweep.boundaries}};
  emit(out, opts.out_path, "OK");
  return 0;
}

int run_search(const std::string& path, const loccgate::SearchConfig& config,
               const std::string& cut_flag, const CommonOpts& opts) {
  const auto file = loccgate::parse_problem_file(path);
  if (file.detectors.empty())
    throw InputError("search needs a \"detectors\" section in " + path);
  loccgate::StateSet states(file.states, opts.tol.orth);
  const auto cut =
      cut_from_flag(cut_flag, static_cast<int>(file.dims.size()),
                    static_cast<int>(file.detector_dims.size()));
  const auto result = loccgate::search_probabilities(states, file.detectors,
                                                     cut, config, opts.tol);

  json trace = json::array();
  for (const auto& [p, v] : result.trace)
    trace.push_back(json{{"probs", p}, {"violation", v}});
  json out{{"command", "search"},
           {"input", loccgate::problem_to_json(file)},
           {"input_path", path},
           {"cut_groups", groups_json(cut)},
           {"tolerances", tolerances_json(opts.tol)},
           {"resolution", config.grid_resolution},
           {"refine_iters", config.refine_iters},
           {"refine_shrink", config.refine_shrink},
           {"seed", config.seed},
           {"best_probs", result.best_probs},
           {"best_violation", result.best_violation},
           {"evaluations", result.evaluations},
           {"certifies", result.certifies},
           {"trace", std::move(trace)}};
  std::ostringstream extra;
  extra << "best_violation: " << result.best_violation << "\n"
        << (result.certifies ? "INDISTINGUISHABLE" : "INCONCLUSIVE");
  emit(out, opts.out_path, extra.str());
  return 0;
}

int run_oneway(const std::string& path, int party,
               const std::string& basis_path, const CommonOpts& opts) {
  const auto file = loccgate::parse_problem_file(path);
  const auto basis_file = loccgate::parse_problem_file(basis_path);
  if (basis_file.dims.size() != 1)
    throw InputError("basis file must describe a single party (dims [d])");
  std::vector<std::vector<loccgate::Amplitude>> basis;
  for (const auto& v : basis_file.states) basis.push_back(v.amps());

  loccgate::StateSet states(file.states, opts.tol.orth);
  const auto rep =
      loccgate::verify_one_way_protocol(states, party, basis, opts.tol);

  json outcomes = json::array();
  for (const auto& o : rep.outcomes)
    outcomes.push_back(json{{"outcome", o.outcome},
                            {"survivors", o.survivors},
                            {"residual_norms", o.residual_norms},
                            {"max_overlap", o.max_overlap}});
  const char* token =
      rep.distinguishes ? "DISTINGUISHABLE_BY_PROTOCOL" : "NOT_BY_THIS_PROTOCOL";
  json out{{"command", "oneway"},
           {"input_path", path},
           {"basis_path", basis_path},
           {"party", party},
           {"tolerances", tolerances_json(opts.tol)},
           {"outcomes", std::move(outcomes)},
           {"verdict", token}};
  emit(out, opts.out_path, token);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCC indistinguishability certification toolkit"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "detector-superposition test");
  std::string check_path, check_probs, check_cut;
  bool stronger = false;
  CommonOpts check_opts;
  check->add_option("file", check_path, "problem file")->required();
  check->add_option("--probs", check_probs,
                    "override probabilities (comma list, fractions ok, or "
                    "\"uniform\")");
  check->add_option("--cut", check_cut, "party groups, e.g. 0,2:1,3");
  check->add_flag("--stronger-target", stronger,
                  "target the kept pairs psi_i (x) phi_i instead of the "
                  "detectors alone");
  add_common_flags(check, check_opts);

  // proposition
  auto* prop = app.add_subcommand("proposition",
                                  "full orthonormal basis verdict");
  std::string prop_path;
  CommonOpts prop_opts;
  prop->add_option("file", prop_path, "basis file")->required();
  add_common_flags(prop, prop_opts);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "a-family parameter sweep");
  std::string sweep_family = "a-family", sweep_probs, sweep_grid, sweep_cut;
  CommonOpts sweep_opts;
  sweep->add_option("--family", sweep_family, "family name (a-family)");
  sweep->add_option("--probs", sweep_probs, "probabilities (default uniform)");
  sweep->add_option("--grid", sweep_grid, "lo:hi:step")->required();
  sweep->add_option("--cut", sweep_cut, "party groups, e.g. 0,2:1,3");
  add_common_flags(sweep, sweep_opts);

  // search
  auto* search = app.add_subcommand("search",
                                    "probability simplex violation search");
  std::string search_path, search_cut;
  loccgate::SearchConfig config;
  CommonOpts search_opts;
  search->add_option("file", search_path, "problem file")->required();
  search->add_option("--resolution", config.grid_resolution,
                     "simplex grid resolution");
  search->add_option("--seed", config.seed, "seed echoed into the report");
  search->add_option("--refine-iters", config.refine_iters,
                     "refinement rounds");
  search->add_option("--refine-shrink", config.refine_shrink,
                     "step shrink factor in (0,1)");
  search->add_option("--cut", search_cut, "party groups, e.g. 0,2:1,3");
  add_common_flags(search, search_opts);

  // oneway
  auto* oneway = app.add_subcommand(
      "oneway", "verify a one-round projective protocol");
  std::string oneway_path, oneway_basis;
  int oneway_party = 0;
  CommonOpts oneway_opts;
  oneway->add_option("file", oneway_path, "states file")->required();
  oneway->add_option("--party", oneway_party, "measuring party")->required();
  oneway->add_option("--basis-file", oneway_basis,
                     "orthonormal local basis file")->required();
  add_common_flags(oneway, oneway_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (check->parsed())
      return run_check(check_path, check_probs, check_cut, stronger,
                       check_opts);
    if (prop->parsed()) return run_proposition(prop_path, prop_opts);
    if (sweep->parsed())
      return run_sweep(sweep_family, sweep_probs, sweep_grid, sweep_cut,
                       sweep_opts);
    if (search->parsed())
      return run_search(search_path, config, search_cut, search_opts);
    if (oneway->parsed())
      return run_oneway(oneway_path, oneway_party, oneway_basis, oneway_opts);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
