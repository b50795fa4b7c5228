// Copyright 2026 The annealgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "annealgate/harness/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

YAML::Node parse_yaml(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("YAML syntax error: ") + e.what());
  }
}

template <class T>
T get(const YAML::Node& node, const std::string& what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("bad value for '" + what + "'");
  }
}

template <class T>
T get_or(const YAML::Node& parent, const std::string& key, T fallback) {
  const YAML::Node n = parent[key];
  return n ? get<T>(n, key) : fallback;
}

void reject_unknown(const YAML::Node& map, std::initializer_list<std::string_view> known, const std::string& where) {
  if (!map.IsMap()) throw ConfigError("'" + where + "' must be a mapping");
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

std::vector<double> read_grid(const YAML::Node& node, const std::string& what) {
  if (node.IsSequence()) return get<std::vector<double>>(node, what);
  if (node.IsScalar()) return {get<double>(node, what)};
  if (node.IsMap()) {
    reject_unknown(node, {"start", "stop", "step"}, what);
    if (!node["start"] || !node["stop"] || !node["step"]) {
      throw ConfigError("'" + what + "' range needs start, stop and step");
    }
    try {
      return linear_grid(get<double>(node["start"], what), get<double>(node["stop"], what),
                         get<double>(node["step"], what));
    } catch (const InvalidArgument& e) {
      throw ConfigError("'" + what + "': " + e.what());
    }
  }
  throw ConfigError("'" + what + "' must be a number, a list or a {start, stop, step} range");
}

CatalyticField catalytic_from_string(const std::string& s) {
  if (s == "uniform") return CatalyticField::Uniform;
  if (s == "inhomogeneous") return CatalyticField::Inhomogeneous;
  throw ConfigError("catalytic must be 'uniform' or 'inhomogeneous', got '" + s + "'");
}

const char* to_string(CatalyticField f) { return f == CatalyticField::Uniform ? "uniform" : "inhomogeneous"; }

PhaseFrame frame_from_string(const std::string& s) {
  if (s == "computational") return PhaseFrame::Computational;
  if (s == "idle") return PhaseFrame::Idle;
  throw ConfigError("frame must be 'computational' or 'idle', got '" + s + "'");
}

const char* to_string(PhaseFrame f) { return f == PhaseFrame::Computational ? "computational" : "idle"; }

// Shortest text that reads back to the same double.
std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

void emit_doubles(YAML::Emitter& out, const std::vector<double>& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double x : v) out << shortest(x);
  out << YAML::EndSeq;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::XRotation:
      return "x_rotation";
    case ExperimentKind::ControlledNot:
      return "cnot";
    case ExperimentKind::DWaveXRotation:
      return "dwave_x_rotation";
    case ExperimentKind::DWaveCnot:
      return "dwave_cnot";
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(std::string_view name) {
  for (auto k : {ExperimentKind::XRotation, ExperimentKind::ControlledNot, ExperimentKind::DWaveXRotation,
                 ExperimentKind::DWaveCnot}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw InvalidArgument("grid needs finite start <= stop and step > 0");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(n);
  // Decimal grids are built on integers so 0.1 steps land on the same doubles
  // as the literals -1.3, 0.7, ...
  for (int digits = 0; digits <= 9; ++digits) {
    const double scale = std::pow(10.0, digits);
    const double s0 = std::round(start * scale);
    const double ds = std::round(step * scale);
    if (std::abs(s0 - start * scale) > 1e-9 * scale || std::abs(ds - step * scale) > 1e-9 * scale) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] = (s0 + static_cast<double>(i) * ds) / scale;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

std::size_t ExperimentConfig::qubit_count() const {
  return (kind == ExperimentKind::XRotation || kind == ExperimentKind::DWaveXRotation) ? 1 : 2;
}

void ExperimentConfig::validate() const {
  if (name.empty()) throw ConfigError("experiment needs a name");
  if (h_z.empty()) throw ConfigError(name + ": h_z grid is empty");
  for (std::size_t i = 0; i < h_z.size(); ++i) {
    if (!std::isfinite(h_z[i])) throw ConfigError(name + ": h_z values must be finite");
    if (i > 0 && !(h_z[i] > h_z[i - 1])) throw ConfigError(name + ": h_z grid must be strictly increasing");
  }
  if (T.empty()) throw ConfigError(name + ": T list is empty");
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (!(T[i] > 0.0) || !std::isfinite(T[i])) throw ConfigError(name + ": T values must be positive");
    if (i > 0 && !(T[i] > T[i - 1])) throw ConfigError(name + ": T list must be strictly increasing");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError(name + ": dt must be positive");
  if (initial_states.empty()) throw ConfigError(name + ": no initial states");
  for (const auto& s : initial_states) {
    StateVector psi = StateVector::all_plus(1);
    try {
      psi = StateVector::from_label(s);
    } catch (const std::exception& e) {
      throw ConfigError(name + ": initial state '" + s + "': " + e.what());
    }
    if (psi.qubit_count() != qubit_count()) {
      throw ConfigError(name + ": initial state '" + s + "' has the wrong number of qubits");
    }
  }
  if (kind == ExperimentKind::ControlledNot && !(0.0 < a && a < b && b < 1.0)) {
    throw ConfigError(name + ": controlled-not needs 0 < a < b < 1");
  }
  if (kind == ExperimentKind::DWaveXRotation || kind == ExperimentKind::DWaveCnot) {
    const std::string plus(qubit_count(), '+');
    for (const auto& s : initial_states) {
      if (s != plus) throw ConfigError(name + ": the D-Wave emulator only starts from " + plus);
    }
    if (shots == 0) throw ConfigError(name + ": shots must be at least 1");
  }
}

ExperimentConfig parse_experiment(std::string_view yaml) {
  const YAML::Node root = parse_yaml(yaml);
  reject_unknown(root, {"experiment", "kind", "gate", "grid", "initial_states", "sampling", "output", "threads"},
                 "experiment config");
  ExperimentConfig cfg;
  if (!root["experiment"] || !root["kind"]) throw ConfigError("config needs 'experiment' and 'kind'");
  cfg.name = get<std::string>(root["experiment"], "experiment");
  cfg.kind = experiment_kind_from_string(get<std::string>(root["kind"], "kind"));
  if (const YAML::Node g = root["gate"]) {
    reject_unknown(g, {"a", "b", "catalytic"}, "gate");
    cfg.a = get_or(g, "a", cfg.a);
    cfg.b = get_or(g, "b", cfg.b);
    if (g["catalytic"]) cfg.catalytic = catalytic_from_string(get<std::string>(g["catalytic"], "catalytic"));
  }
  const YAML::Node grid = root["grid"];
  if (!grid) throw ConfigError("config needs a 'grid' section");
  reject_unknown(grid, {"h_z", "T", "dt"}, "grid");
  if (!grid["h_z"] || !grid["T"]) throw ConfigError("grid needs 'h_z' and 'T'");
  cfg.h_z = read_grid(grid["h_z"], "h_z");
  cfg.T = read_grid(grid["T"], "T");
  cfg.dt = get_or(grid, "dt", cfg.dt);
  if (const YAML::Node s = root["initial_states"]) {
    cfg.initial_states = s.IsSequence() ? get<std::vector<std::string>>(s, "initial_states")
                                        : std::vector<std::string>{get<std::string>(s, "initial_states")};
  } else {
    cfg.initial_states = {std::string(cfg.qubit_count(), '+')};
  }
  if (const YAML::Node s = root["sampling"]) {
    reject_unknown(s, {"shots", "seed"}, "sampling");
    cfg.shots = get_or(s, "shots", cfg.shots);
    cfg.seed = get_or(s, "seed", cfg.seed);
  }
  if (root["output"]) cfg.output = get<std::string>(root["output"], "output");
  cfg.threads = get_or(root, "threads", cfg.threads);
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  try {
    return parse_experiment(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string experiment_to_yaml(const ExperimentConfig& cfg) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "experiment" << YAML::Value << cfg.name;
  out << YAML::Key << "kind" << YAML::Value << std::string(to_string(cfg.kind));
  out << YAML::Key << "gate" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "a" << YAML::Value << shortest(cfg.a);
  out << YAML::Key << "b" << YAML::Value << shortest(cfg.b);
  out << YAML::Key << "catalytic" << YAML::Value << to_string(cfg.catalytic);
  out << YAML::EndMap;
  out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "h_z" << YAML::Value;
  emit_doubles(out, cfg.h_z);
  out << YAML::Key << "T" << YAML::Value;
  emit_doubles(out, cfg.T);
  out << YAML::Key << "dt" << YAML::Value << shortest(cfg.dt);
  out << YAML::EndMap;
  out << YAML::Key << "initial_states" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& s : cfg.initial_states) out << YAML::DoubleQuoted << s;
  out << YAML::EndSeq;
  out << YAML::Key << "sampling" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "shots" << YAML::Value << cfg.shots;
  out << YAML::Key << "seed" << YAML::Value << cfg.seed;
  out << YAML::EndMap;
  if (!cfg.output.empty()) out << YAML::Key << "output" << YAML::Value << cfg.output.string();
  out << YAML::Key << "threads" << YAML::Value << cfg.threads;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

ExperimentConfig preset(std::string_view name) {
  ExperimentConfig c;
  c.name = std::string(name);
  c.output = c.name + ".csv";
  if (name == "fig5") {
    c.kind = ExperimentKind::XRotation;
    c.h_z = linear_grid(-2.0, 2.0, 0.1);
    c.T = {2000.0};
    c.initial_states = {"+"};
  } else if (name == "fig6") {
    c.kind = ExperimentKind::ControlledNot;
    c.h_z = linear_grid(-1.0, 3.0, 0.25);
    c.T = {20000.0};
    c.initial_states = {"++", "+-", "-+", "--"};
  } else if (name == "fig-appendix-x") {
    c.kind = ExperimentKind::XRotation;
    c.h_z = linear_grid(-2.0, 2.0, 0.25);
    c.T = {2.0, 20.0, 200.0, 2000.0, 20000.0};
    c.initial_states = {"+"};
  } else if (name == "fig-appendix-cnot") {
    c.kind = ExperimentKind::ControlledNot;
    c.catalytic = CatalyticField::Inhomogeneous;
    c.h_z = linear_grid(-1.0, 3.0, 0.25);
    c.T = {2.0, 20.0, 200.0, 2000.0, 20000.0};
    c.initial_states = {"++", "+-", "-+", "--"};
  } else if (name == "dwave-xrot") {
    c.kind = ExperimentKind::DWaveXRotation;
    c.h_z = linear_grid(-2.0, 2.0, 0.25);
    c.T = {200.0};
    c.initial_states = {"+"};
    c.seed = 2024;
  } else if (name == "dwave-cnot") {
    c.kind = ExperimentKind::DWaveCnot;
    c.h_z = linear_grid(-1.0, 3.0, 0.25);
    c.T = {200.0};
    c.initial_states = {"++"};
    c.seed = 2024;
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  c.validate();
  return c;
}

std::vector<std::string> preset_names() {
  return {"fig5", "fig6", "fig-appendix-x", "fig-appendix-cnot", "dwave-xrot", "dwave-cnot"};
}

// --- gate programs ---------------------------------------------------------

GateProgram parse_program(std::string_view yaml) {
  const YAML::Node root = parse_yaml(yaml);
  reject_unknown(root, {"qubits", "idle_gap", "steps"}, "program");
  GateProgram prog;
  prog.qubits = get_or<std::size_t>(root, "qubits", 1);
  prog.idle_gap = get_or(root, "idle_gap", prog.idle_gap);
  if (const YAML::Node steps = root["steps"]) {
    if (!steps.IsSequence()) throw ConfigError("'steps' must be a list");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const YAML::Node s = steps[i];
      const std::string where = "step " + std::to_string(i);
      reject_unknown(s, {"gate", "qubits", "h_z", "a", "b", "T", "t", "periods", "frame", "catalytic"}, where);
      if (!s["gate"]) throw ConfigError(where + " needs 'gate'");
      GateSpec g;
      try {
        g.kind = gate_kind_from_string(get<std::string>(s["gate"], "gate"));
      } catch (const InvalidArgument& e) {
        throw ConfigError(where + ": " + e.what());
      }
      if (s["qubits"]) {
        g.qubits = s["qubits"].IsSequence() ? get<std::vector<std::size_t>>(s["qubits"], "qubits")
                                            : std::vector<std::size_t>{get<std::size_t>(s["qubits"], "qubits")};
      }
      g.h_z = get_or(s, "h_z", g.h_z);
      g.a = get_or(s, "a", g.a);
      g.b = get_or(s, "b", g.b);
      g.T = get_or(s, "T", g.T);
      g.duration = get_or(s, "t", g.duration);
      g.periods = get_or(s, "periods", g.periods);
      if (s["frame"]) g.frame = frame_from_string(get<std::string>(s["frame"], "frame"));
      if (s["catalytic"]) g.catalytic = catalytic_from_string(get<std::string>(s["catalytic"], "catalytic"));
      prog.steps.push_back(std::move(g));
    }
  }
  try {
    prog.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid program: ") + e.what());
  }
  return prog;
}

GateProgram load_program(const std::filesystem::path& path) {
  try {
    return parse_program(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string program_to_yaml(const GateProgram& prog) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "qubits" << YAML::Value << prog.qubits;
  out << YAML::Key << "idle_gap" << YAML::Value << shortest(prog.idle_gap);
  out << YAML::Key << "steps" << YAML::Value << YAML::BeginSeq;
  for (const GateSpec& g : prog.steps) {
    out << YAML::BeginMap;
    out << YAML::Key << "gate" << YAML::Value << std::string(to_string(g.kind));
    if (!g.qubits.empty()) {
      out << YAML::Key << "qubits" << YAML::Value << YAML::Flow << g.qubits;
    }
    switch (g.kind) {
      case GateKind::XRotation:
        out << YAML::Key << "h_z" << YAML::Value << shortest(g.h_z);
        out << YAML::Key << "T" << YAML::Value << shortest(g.T);
        break;
      case GateKind::ControlledNot:
        out << YAML::Key << "h_z" << YAML::Value << shortest(g.h_z);
        out << YAML::Key << "T" << YAML::Value << shortest(g.T);
        out << YAML::Key << "a" << YAML::Value << shortest(g.a);
        out << YAML::Key << "b" << YAML::Value << shortest(g.b);
        out << YAML::Key << "catalytic" << YAML::Value << to_string(g.catalytic);
        break;
      case GateKind::ZRotation:
        out << YAML::Key << "t" << YAML::Value << shortest(g.duration);
        out << YAML::Key << "frame" << YAML::Value << to_string(g.frame);
        break;
      case GateKind::Idle:
        out << YAML::Key << "periods" << YAML::Value << g.periods;
        break;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

// --- families and operators ------------------------------------------------

PartitionSpec parse_partition(std::string_view yaml) {
  const YAML::Node root = parse_yaml(yaml);
  reject_unknown(root, {"alphas", "domains"}, "partition");
  if (!root["alphas"] || !root["domains"]) throw ConfigError("partition needs 'alphas' and 'domains'");
  PartitionSpec p;
  p.alphas = get<std::vector<int>>(root["alphas"], "alphas");
  p.domains = get<std::vector<std::vector<std::size_t>>>(root["domains"], "domains");
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("invalid partition: ") + e.what());
  }
  return p;
}

PauliSum parse_operator(std::string_view yaml) {
  const YAML::Node root = parse_yaml(yaml);
  reject_unknown(root, {"qubits", "terms"}, "operator");
  if (!root["qubits"] || !root["terms"]) throw ConfigError("operator needs 'qubits' and 'terms'");
  const auto n = get<std::size_t>(root["qubits"], "qubits");
  const YAML::Node terms = root["terms"];
  try {
    if (terms.IsScalar()) return parse_pauli_sum(get<std::string>(terms, "terms"), n);
    if (terms.IsMap()) {
      std::vector<std::pair<std::string, double>> list;
      for (const auto& kv : terms) {
        list.emplace_back(kv.first.as<std::string>(), get<double>(kv.second, kv.first.as<std::string>()));
      }
      return pauli_sum_from_terms(list, n);
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("invalid operator: ") + e.what());
  }
  throw ConfigError("'terms' must be a string or a mapping");
}

PauliSum load_operator(const std::filesystem::path& path) {
  try {
    return parse_operator(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace annealgate
