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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annealgate/evolution.hpp"
#include "annealgate/operators.hpp"
#include "annealgate/schedules.hpp"
#include "annealgate/state.hpp"

namespace annealgate {

// --- anneal pipelines --------------------------------------------------------

/// Operators of a forward -> problem swap -> reverse gate.
struct GatePipeline {
  PauliSum drive;
  PauliSum problem;           // end point of the forward part, degenerate
  PauliSum modified_problem;  // start point of the reverse part
  PauliSum catalytic;
  double h_z = 0.0;
  double T = 0.0;

  std::size_t qubit_count() const noexcept { return drive.qubit_count(); }
  ControlSchedule forward_schedule() const;
  ControlSchedule reverse_schedule() const;
  /// Same gate acting on `placement` qubits of a larger register.
  GatePipeline embedded(std::size_t register_size, const std::vector<std::size_t>& placement) const;
};

/// Longitudinal field shape used as the controlled-not catalytic term.
enum class CatalyticField {
  Uniform,        // Z1 + Z2
  Inhomogeneous,  // Z1 + 0.3 Z2
};

inline constexpr double kInhomogeneousWeight = 0.3;

/// H_D = -X, H_P = -1, H~_P = Z, H_C = Z.
GatePipeline x_rotation_pipeline(double h_z, double T);

/// H_D = -X1 - X2/2, H_P = (Z1 + 1)(a Z2 + 1), H~_P = (b Z1 + 1)(a Z2 + 1).
/// Throws InvalidArgument unless 0 < a < b < 1 and T > 0.
GatePipeline cnot_pipeline(double a, double b, double h_z, double T,
                           CatalyticField field = CatalyticField::Uniform);

struct PipelineReport {
  EvolutionReport forward;
  EvolutionReport reverse;

  const StateVector& final_state() const noexcept { return reverse.final_state; }
  double norm_drift() const noexcept { return forward.norm_drift + reverse.norm_drift; }
  std::size_t steps() const noexcept { return forward.steps + reverse.steps; }
};

/// Largest off-diagonal magnitude of the forward end and reverse start
/// operators, and of their difference minus (H~_P - H_P). All three vanish
/// for a well-formed pipeline.
struct JunctionCheck {
  double forward_offdiagonal = 0.0;
  double reverse_offdiagonal = 0.0;
  double swap_residual = 0.0;
};
JunctionCheck check_junction(const GatePipeline& p);

/// Forward part, instantaneous swap H_P -> H~_P, reverse part. Throws
/// NumericalError if the junction operators are not diagonal (to 1e-12).
PipelineReport run_pipeline(const GatePipeline& p, const StateVector& psi0, double dt = kDefaultDt);

PipelineReport x_rotation(double h_z, double T, double dt, const StateVector& psi0);
PipelineReport cnot(double a, double b, double h_z, double T, double dt, const StateVector& psi0,
                    CatalyticField field = CatalyticField::Uniform);

// --- phase gates ---------------------------------------------------------------

/// Axis of the phase rotation e^{i sigma t}. Computational uses sigma^z; Idle
/// uses sigma^x, which is diagonal in the |+-> frame the anneal gates end in.
enum class PhaseFrame { Computational, Idle };

/// Applies e^{+i sigma t} on `qubit` exactly: in the computational frame
/// a|up> + b|down> -> a e^{it}|up> + b e^{-it}|down>.
StateVector z_rotation(const StateVector& psi, double t, std::size_t qubit,
                       PhaseFrame frame = PhaseFrame::Computational);

/// Constant H = -Z_qubit over [0, t]; evolving under it reproduces z_rotation.
ControlSchedule z_rotation_schedule(std::size_t qubits, std::size_t qubit, double t);

/// Evolves for t = 2 pi m / k under H_idle = -(k/2) sum_j X_j (gap k).
/// Exact, not integrated. Throws for k <= 0.
StateVector idle(const StateVector& psi, unsigned m, double k);

// --- programs --------------------------------------------------------------------

enum class GateKind { XRotation, ControlledNot, ZRotation, Idle };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

struct GateSpec {
  GateKind kind = GateKind::XRotation;
  double h_z = 0.0;
  double a = 0.3;
  double b = 0.5;
  double T = 2000.0;
  double duration = 0.0;        // ZRotation angle t
  unsigned periods = 0;         // Idle multiple m of 2 pi / k
  std::vector<std::size_t> qubits;  // target qubits; control first for ControlledNot
  PhaseFrame frame = PhaseFrame::Computational;
  CatalyticField catalytic = CatalyticField::Uniform;

  /// Throws InvalidArgument on parameter or arity violations.
  void validate() const;
  /// Qubits the step acts on, with defaults filled in ({0} or {0, 1}).
  std::vector<std::size_t> targets() const;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

struct GateProgram {
  std::size_t qubits = 1;
  std::vector<GateSpec> steps;
  double idle_gap = 2.0;  // energy gap k of the idling Hamiltonian

  void validate() const;

  friend bool operator==(const GateProgram&, const GateProgram&) = default;
};

/// Runs each step in order. Anneal gates act only on their target qubits;
/// other qubits see no Hamiltonian during the gate. The report's norm drift is
/// the sum over steps and `steps` counts integrator steps.
/// Throws ProgramError carrying the index of the first failing step.
EvolutionReport run_program(const GateProgram& prog, const StateVector& psi0, double dt = kDefaultDt);

// --- relative phase calibration ----------------------------------------------------

struct PhaseCalibration {
  /// arg<-|out> - arg<+|out> on the target qubit, wrapped to (-pi, pi].
  double theta = 0.0;
  /// Idle-frame z_rotation angle that cancels theta, in [0, pi).
  double compensation = 0.0;
  GateSpec gate;
  std::string method;
  /// Phase of each |+-> basis amplitude relative to the all-plus amplitude;
  /// NaN where the amplitude is below the calibration floor.
  std::vector<std::pair<std::string, double>> basis_phases;
};

inline constexpr double kCalibrationFloor = 1e-6;

/// Runs the gate on |+> (|++> for ControlledNot) and extracts theta. Throws
/// CalibrationError if either amplitude defining theta is below 1e-6.
PhaseCalibration calibrate_relative_phase(const GateSpec& gate, double dt = kDefaultDt);

/// theta of an output state for the transverse pair (index_plus, index_minus).
/// Throws CalibrationError on a vanishing amplitude.
double relative_phase(const StateVector& out, std::size_t index_plus, std::size_t index_minus);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

}  // namespace annealgate
