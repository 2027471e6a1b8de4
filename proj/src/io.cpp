#include "loccgate/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace loccgate {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::vector<int> read_dims(const json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) fail(key, "missing");
    return {};
  }
  const json& j = doc.at(key);
  if (!j.is_array() || j.empty()) fail(key, "must be a nonempty array");
  std::vector<int> dims;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long>() < 1)
      fail(key, "entries must be positive integers");
    dims.push_back(e.get<int>());
  }
  return dims;
}

Amplitude read_amp(const json& e, const std::string& where) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
      !e[1].is_number())
    fail(where, "amplitudes must be [re, im] pairs");
  const double re = e[0].get<double>();
  const double im = e[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    fail(where, "non-finite amplitude");
  return {re, im};
}

void read_state_list(const json& doc, const char* key,
                     const std::vector<int>& dims,
                     std::vector<std::string>& names,
                     std::vector<PureState>& states) {
  const json& list = doc.at(key);
  if (!list.is_array() || list.empty()) fail(key, "must be a nonempty array");
  const std::size_t total = checked_total_dim(dims);
  for (std::size_t s = 0; s < list.size(); ++s) {
    const std::string where = std::string(key) + "[" + std::to_string(s) + "]";
    const json& entry = list[s];
    if (!entry.is_object() || !entry.contains("amps"))
      fail(where, "must be an object with an \"amps\" array");
    names.push_back(entry.value("name", std::string{}));
    const json& amps_json = entry.at("amps");
    if (!amps_json.is_array() || amps_json.size() != total)
      fail(where, "amps must have exactly " + std::to_string(total) +
                      " entries for these dims");
    std::vector<Amplitude> amps;
    amps.reserve(total);
    for (const auto& e : amps_json) amps.push_back(read_amp(e, where));
    try {
      states.emplace_back(dims, std::move(amps));
    } catch (const InputError& err) {
      fail(where, err.what());
    }
  }
}

}  // namespace

ProblemFile parse_problem_json(const json& doc) {
  if (!doc.is_object()) throw InputError("document root must be an object");
  ProblemFile file;
  file.dims = read_dims(doc, "dims", /*required=*/true);
  if (!doc.contains("states")) fail("states", "missing");
  read_state_list(doc, "states", file.dims, file.names, file.states);

  file.detector_dims = read_dims(doc, "detector_dims", /*required=*/false);
  if (file.detector_dims.empty()) file.detector_dims = file.dims;
  if (doc.contains("detectors"))
    read_state_list(doc, "detectors", file.detector_dims,
                    file.detector_names, file.detectors);

  if (doc.contains("probs")) {
    const json& pj = doc.at("probs");
    if (!pj.is_array()) fail("probs", "must be an array");
    for (const auto& e : pj) {
      if (!e.is_number()) fail("probs", "entries must be numbers");
      file.probs.push_back(e.get<double>());
    }
  }
  return file;
}

ProblemFile parse_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    // Count lines up to the reported byte for a friendlier diagnostic.
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(err.byte, text.size());
    for (std::size_t i = 0; i < upto; ++i)
      if (text[i] == '\n') ++line;
    throw InputError(path.string() + ":" + std::to_string(line) +
                     ": malformed JSON at byte " + std::to_string(err.byte) +
                     ": " + err.what());
  }
  try {
    return parse_problem_json(doc);
  } catch (const InputError& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

json state_to_json(const PureState& state, const std::string& name) {
  json amps = json::array();
  for (const Amplitude& a : state.amps())
    amps.push_back(json::array({a.real(), a.imag()}));
  json out;
  if (!name.empty()) out["name"] = name;
  out["amps"] = std::move(amps);
  return out;
}

json problem_to_json(const ProblemFile& file) {
  json out;
  out["dims"] = file.dims;
  json states = json::array();
  for (std::size_t i = 0; i < file.states.size(); ++i)
    states.push_back(state_to_json(
        file.states[i], i < file.names.size() ? file.names[i] : ""));
  out["states"] = std::move(states);
  if (!file.detectors.empty()) {
    if (file.detector_dims != file.dims)
      out["detector_dims"] = file.detector_dims;
    json dets = json::array();
    for (std::size_t i = 0; i < file.detectors.size(); ++i)
      dets.push_back(state_to_json(
          file.detectors[i],
          i < file.detector_names.size() ? file.detector_names[i] : ""));
    out["detectors"] = std::move(dets);
  }
  if (!file.probs.empty()) out["probs"] = file.probs;
  return out;
}

std::vector<double> parse_probs(const std::string& text, std::size_t n) {
  if (text == "uniform") {
    if (n == 0) throw InputError("uniform probabilities need a known count");
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw InputError("empty probability token in: " + text);
    const auto slash = tok.find('/');
    try {
      if (slash != std::string::npos) {
        const double num = std::stod(tok.substr(0, slash));
        const double den = std::stod(tok.substr(slash + 1));
        if (den == 0.0) throw InputError("zero denominator in: " + tok);
        out.push_back(num / den);
      } else {
        out.push_back(std::stod(tok));
      }
    } catch (const std::exception&) {
      throw InputError("cannot parse probability: " + tok);
    }
  }
  if (out.empty()) throw InputError("no probabilities in: " + text);
  return out;
}

std::vector<std::vector<int>> parse_groups(const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ':')) {
    std::vector<int> g;
    std::stringstream gs(group);
    std::string tok;
    while (std::getline(gs, tok, ',')) {
      try {
        g.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("cannot parse party index: " + tok);
      }
    }
    if (g.empty()) throw InputError("empty group in cut: " + text);
    groups.push_back(std::move(g));
  }
  if (groups.size() < 2)
    throw InputError("cut needs at least two colon-separated groups");
  return groups;
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(text);
  ss >> lo >> c1 >> hi >> c2 >> step;
  if (!ss || c1 != ':' || c2 != ':')
    throw InputError("grid must be lo:hi:step, got: " + text);
  if (!(step > 0.0) || hi < lo) throw InputError("bad grid range: " + text);
  const long count = std::lround((hi - lo) / step);
  std::vector<double> grid;
  for (long i = 0; i <= count; ++i) {
    const double a = lo + static_cast<double>(i) * step;
    if (a <= hi + step * 1e-9) grid.push_back(a);
  }
  return grid;
}

}  // namespace loccgate
