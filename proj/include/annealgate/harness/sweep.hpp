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
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "annealgate/harness/config.hpp"

namespace annealgate {

struct SweepRow {
  double h_z = 0.0;
  double T = 0.0;
  std::string initial_state;
  std::vector<double> values;  // one per SweepResult::columns entry
  std::string error;           // empty on success; values are NaN otherwise
  double norm_drift = 0.0;

  double value(const std::vector<std::string>& columns, const std::string& column) const;
};

struct SweepResult {
  std::string experiment;
  ExperimentKind kind = ExperimentKind::XRotation;
  std::vector<std::string> columns;  // value columns after h_z,T,initial_state
  std::vector<SweepRow> rows;        // h_z ascending, then T, then initial state
  double dt = kDefaultDt;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601; kept out of the CSV

  double value(std::size_t row, const std::string& column) const { return rows.at(row).value(columns, column); }
};

/// Value column names for an experiment kind on `qubits` qubits:
///   gates:  pop_<basis>_forward, pop_<pm>_reverse, oracle_<basis>_forward,
///           oracle_<pm>_reverse, max_deviation
///   D-Wave: pop_<basis>_forward, count_<basis>, oracle_<basis>_forward,
///           adiabatic_<basis>_forward, max_deviation
std::vector<std::string> sweep_columns(ExperimentKind kind, std::size_t qubits);

using SweepProgress = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every grid point, concurrently. A failing point is kept as a row with
/// NaN values and the error message; the sweep carries on.
SweepResult run_sweep(const ExperimentConfig& cfg, const SweepProgress& progress = {});

/// Header row and data rows; byte-identical for identical inputs.
std::string to_csv(const SweepResult& r);

/// Writes the CSV plus `<path>.meta.json` with dt, version, timestamp and
/// per-row errors. Throws ConfigError naming the path on I/O failure.
void emit_csv(const SweepResult& r, const std::filesystem::path& path);

/// Library version string baked in at build time.
std::string library_version();

}  // namespace annealgate
