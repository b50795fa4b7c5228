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
#include <utility>
#include <vector>

#include "annealgate/evolution.hpp"
#include "annealgate/schedules.hpp"

namespace annealgate {

/// Problem as submitted to a D-Wave style annealer: fields, couplings, the
/// g(t) longitudinal schedule and the read count. Couplings are keyed by
/// zero-based (i, j) with i > j; the JSON form uses one-based "i,j" keys.
struct DWaveProblem {
  std::vector<double> h;
  std::map<std::pair<std::size_t, std::size_t>, double> J;
  std::vector<Knot> anneal_schedule;  // (t, g) knots, t in [0, annealing_time]
  double annealing_time = 200.0;
  std::size_t num_reads = 2000;

  std::size_t qubit_count() const noexcept { return h.size(); }

  /// Throws InvalidArgument on |h_j| > 1, |J_ij| > 1, unsorted or out-of-range
  /// knots, bad keys, T <= 0 or zero reads.
  void validate() const;

  /// Linear A(s) = 1 - s, B(s) = s with g from the knots.
  DWaveSchedule schedule() const;

  friend bool operator==(const DWaveProblem&, const DWaveProblem&) = default;
};

/// Single-qubit rotation: h = [1], g knots (0,0), (T/2,h_z), (T,0).
DWaveProblem dwave_xrot_problem(double h_z, double T = 200.0, std::size_t reads = 2000);

/// Controlled-not: h = [1, 0.3], J_21 = 0.3, g knots (0,0), (T/2,h_z+1), (T,1).
DWaveProblem dwave_cnot_problem(double h_z, double T = 200.0, std::size_t reads = 2000);

std::string dwave_to_json(const DWaveProblem& p, int indent = 2);
DWaveProblem dwave_from_json(const std::string& text);

void export_dwave(const DWaveProblem& p, const std::filesystem::path& path);
DWaveProblem import_dwave(const std::filesystem::path& path);

struct DWaveRun {
  StateVector final_state;
  Populations populations;
  Counts counts;
  double norm_drift = 0.0;
};

/// Integrates the device Hamiltonian from |+...+> and samples num_reads
/// computational-basis measurements at t = T.
DWaveRun emulate_dwave(const DWaveProblem& p, std::uint64_t seed, double dt = kDefaultDt);

}  // namespace annealgate
