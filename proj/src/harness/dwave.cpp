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

#include "annealgate/harness/dwave.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "annealgate/errors.hpp"
#include "json.hpp"

namespace annealgate {

using nlohmann::json;

void DWaveProblem::validate() const {
  if (h.empty() || h.size() > kMaxQubits) {
    throw InvalidArgument("D-Wave problem needs 1 to " + std::to_string(kMaxQubits) + " fields");
  }
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (!std::isfinite(h[j]) || std::abs(h[j]) > 1.0) {
      throw InvalidArgument("field h_" + std::to_string(j + 1) + " outside [-1, 1]");
    }
  }
  for (const auto& [ij, v] : J) {
    if (!(ij.first > ij.second) || ij.first >= h.size()) {
      throw InvalidArgument("coupling key (" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
                            ") must satisfy n >= i > j >= 1");
    }
    if (!std::isfinite(v) || std::abs(v) > 1.0) {
      throw InvalidArgument("coupling J_" + std::to_string(ij.first + 1) + std::to_string(ij.second + 1) +
                            " outside [-1, 1]");
    }
  }
  if (!(annealing_time > 0.0) || !std::isfinite(annealing_time)) {
    throw InvalidArgument("annealing time must be positive");
  }
  if (num_reads == 0) throw InvalidArgument("num_reads must be at least 1");
  if (anneal_schedule.empty()) throw InvalidArgument("anneal schedule needs at least one knot");
  for (std::size_t k = 0; k < anneal_schedule.size(); ++k) {
    const Knot& kn = anneal_schedule[k];
    if (!std::isfinite(kn.x) || !std::isfinite(kn.value)) throw InvalidArgument("schedule knots must be finite");
    if (kn.x < 0.0 || kn.x > annealing_time) throw InvalidArgument("schedule knot time outside [0, T]");
    if (k > 0 && !(kn.x > anneal_schedule[k - 1].x)) {
      throw InvalidArgument("schedule knots must be strictly time-sorted");
    }
  }
}

DWaveSchedule DWaveProblem::schedule() const {
  DWaveSchedule s;
  s.g = PiecewiseLinear(anneal_schedule);
  s.h = h;
  s.J = J;
  return s;
}

DWaveProblem dwave_xrot_problem(double h_z, double T, std::size_t reads) {
  DWaveProblem p;
  p.h = {1.0};
  p.anneal_schedule = {{0.0, 0.0}, {0.5 * T, h_z}, {T, 0.0}};
  p.annealing_time = T;
  p.num_reads = reads;
  p.validate();
  return p;
}

DWaveProblem dwave_cnot_problem(double h_z, double T, std::size_t reads) {
  DWaveProblem p;
  p.h = {1.0, 0.3};
  p.J = {{{1, 0}, 0.3}};
  p.anneal_schedule = {{0.0, 0.0}, {0.5 * T, h_z + 1.0}, {T, 1.0}};
  p.annealing_time = T;
  p.num_reads = reads;
  p.validate();
  return p;
}

std::string dwave_to_json(const DWaveProblem& p, int indent) {
  p.validate();
  json doc;
  doc["h"] = p.h;
  json couplings = json::object();
  for (const auto& [ij, v] : p.J) {
    couplings[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = v;
  }
  doc["J"] = couplings;
  json knots = json::array();
  for (const Knot& k : p.anneal_schedule) knots.push_back({k.x, k.value});
  doc["anneal_schedule"] = knots;
  doc["annealing_time"] = p.annealing_time;
  doc["num_reads"] = p.num_reads;
  return doc.dump(indent);
}

DWaveProblem dwave_from_json(const std::string& text) {
  DWaveProblem p;
  try {
    const json doc = json::parse(text);
    p.h = doc.at("h").get<std::vector<double>>();
    for (const auto& [key, value] : doc.at("J").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw ConfigError("coupling key '" + key + "' is not 'i,j'");
      const std::size_t i = std::stoul(key.substr(0, comma));
      const std::size_t j = std::stoul(key.substr(comma + 1));
      if (i == 0 || j == 0) throw ConfigError("coupling keys are one-based");
      p.J[{i - 1, j - 1}] = value.get<double>();
    }
    for (const auto& knot : doc.at("anneal_schedule")) {
      if (!knot.is_array() || knot.size() != 2) throw ConfigError("schedule knots must be [t, g] pairs");
      p.anneal_schedule.push_back({knot[0].get<double>(), knot[1].get<double>()});
    }
    p.annealing_time = doc.at("annealing_time").get<double>();
    p.num_reads = doc.at("num_reads").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed D-Wave document: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ConfigError(std::string("malformed D-Wave document: ") + e.what());
  }
  p.validate();
  return p;
}

void export_dwave(const DWaveProblem& p, const std::filesystem::path& path) {
  const std::string text = dwave_to_json(p);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text << '\n';
  if (!out) throw ConfigError("failed writing " + path.string());
}

DWaveProblem import_dwave(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return dwave_from_json(buf.str());
}

DWaveRun emulate_dwave(const DWaveProblem& p, std::uint64_t seed, double dt) {
  p.validate();
  const ControlSchedule sched = dwave(p.schedule(), p.annealing_time);
  EvolutionReport r = evolve(sched, StateVector::all_plus(p.qubit_count()), dt);
  Populations pops = populations(r.final_state);
  Counts counts = sample_measurements(r.final_state, p.num_reads, seed);
  return DWaveRun{std::move(r.final_state), std::move(pops), std::move(counts), r.norm_drift};
}

}  // namespace annealgate
