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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annealgate/evolution.hpp"
#include "annealgate/families.hpp"
#include "annealgate/gates.hpp"
#include "annealgate/operators.hpp"

namespace annealgate {

enum class ExperimentKind { XRotation, ControlledNot, DWaveXRotation, DWaveCnot };

std::string_view to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(std::string_view name);

/// One sweep: a gate (or D-Wave problem family) run over an h_z grid, a list
/// of anneal times and a list of initial states.
struct ExperimentConfig {
  std::string name;
  ExperimentKind kind = ExperimentKind::XRotation;

  // controlled-not parameters
  double a = 0.3;
  double b = 0.5;
  CatalyticField catalytic = CatalyticField::Uniform;

  std::vector<double> h_z;  // strictly increasing
  std::vector<double> T;    // positive
  double dt = kDefaultDt;
  std::vector<std::string> initial_states;

  // D-Wave sampling
  std::size_t shots = 2000;
  std::uint64_t seed = 1;

  std::filesystem::path output;
  std::size_t threads = 0;  // 0 = hardware concurrency

  std::size_t qubit_count() const;
  /// Throws ConfigError on a broken invariant.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig parse_experiment(std::string_view yaml);
ExperimentConfig load_experiment(const std::filesystem::path& path);
std::string experiment_to_yaml(const ExperimentConfig& cfg);

/// Built-in configurations: fig5, fig6, fig-appendix-x, fig-appendix-cnot,
/// dwave-xrot, dwave-cnot. The files under configs/ hold the same values.
ExperimentConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// start, start + step, ... up to stop (inclusive within 1e-9 * step).
std::vector<double> linear_grid(double start, double stop, double step);

GateProgram parse_program(std::string_view yaml);
GateProgram load_program(const std::filesystem::path& path);
std::string program_to_yaml(const GateProgram& prog);

PartitionSpec parse_partition(std::string_view yaml);

/// Operator document: {qubits: n, terms: "Z1*Z2: -1; X1: 0.5"} or with
/// terms given as a mapping {Z1*Z2: -1, X1: 0.5}.
PauliSum parse_operator(std::string_view yaml);
PauliSum load_operator(const std::filesystem::path& path);

}  // namespace annealgate
