#pragma once

// JSON file formats. One self-describing document shape covers state
// sets, witness problems, bases for the full-basis check, and local
// measurement bases:
//
//   {
//     "dims": [3, 3],
//     "states": [ {"name": "psi1", "amps": [[re, im], ...]}, ... ],
//     "detector_dims": [2, 2],          // optional, defaults to dims
//     "detectors": [ ... same shape ... ],  // optional
//     "probs": [0.16, 0.16, 0.68]       // optional
//   }
//
// Complex numbers are always [re, im] pairs. Serialized doubles use the
// shortest representation that parses back to the same value, so
// parse/serialize round-trips are exact.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loccgate/state.hpp"

namespace loccgate {

struct ProblemFile {
  std::vector<int> dims;
  std::vector<std::string> names;  // one per state, "" when unnamed
  std::vector<PureState> states;
  std::vector<int> detector_dims;  // equals dims unless overridden
  std::vector<std::string> detector_names;
  std::vector<PureState> detectors;  // may be empty
  std::vector<double> probs;         // may be empty
};

/// Parses and validates a problem/state file. InputError carries the
/// offending line for malformed JSON and a field path for semantic errors.
ProblemFile parse_problem_file(const std::filesystem::path& path);

/// Same, from an in-memory document.
ProblemFile parse_problem_json(const nlohmann::json& doc);

nlohmann::json problem_to_json(const ProblemFile& file);

nlohmann::json state_to_json(const PureState& state, const std::string& name);

/// Parses "p1,p2,..." where each element is a decimal or a "a/b" fraction;
/// the single token "uniform" yields (1/n, ..., 1/n).
std::vector<double> parse_probs(const std::string& text, std::size_t n);

/// Parses "0,2:1,3" (or more colon-separated groups) into party groups.
std::vector<std::vector<int>> parse_groups(const std::string& text);

/// Parses "lo:hi:step" into an inclusive grid.
std::vector<double> parse_grid(const std::string& text);

}  // namespace loccgate
