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

#include "annealgate/gates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

constexpr double kJunctionTolerance = 1e-12;

double max_offdiagonal(const Eigen::MatrixXcd& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

std::size_t bit_of(std::size_t qubits, std::size_t qubit) { return std::size_t{1} << (qubits - 1 - qubit); }

void check_qubit(const StateVector& psi, std::size_t qubit) {
  if (qubit >= psi.qubit_count()) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " outside a " + std::to_string(psi.qubit_count()) +
                          "-qubit register");
  }
}

// Unitary maps keep whatever norm error the input carried.
StateVector rewrap(Eigen::VectorXcd v) { return StateVector(std::move(v), kMaxNormDrift); }

// e^{i theta X} on one qubit.
void apply_x_phase(Eigen::VectorXcd& v, std::size_t qubits, std::size_t qubit, double theta) {
  const std::size_t mask = bit_of(qubits, qubit);
  const double c = std::cos(theta);
  const cplx is{0.0, std::sin(theta)};
  for (std::size_t i = 0; i < static_cast<std::size_t>(v.size()); ++i) {
    if (i & mask) continue;
    const auto lo = static_cast<Eigen::Index>(i);
    const auto hi = static_cast<Eigen::Index>(i | mask);
    const cplx a = v[lo];
    const cplx b = v[hi];
    v[lo] = c * a + is * b;
    v[hi] = is * a + c * b;
  }
}

}  // namespace

// --- pipelines -------------------------------------------------------------

ControlSchedule GatePipeline::forward_schedule() const { return forward(drive, problem, catalytic, h_z, T); }

ControlSchedule GatePipeline::reverse_schedule() const { return reverse(drive, modified_problem, T); }

GatePipeline GatePipeline::embedded(std::size_t register_size, const std::vector<std::size_t>& placement) const {
  return GatePipeline{drive.embedded(register_size, placement),
                      problem.embedded(register_size, placement),
                      modified_problem.embedded(register_size, placement),
                      catalytic.embedded(register_size, placement),
                      h_z,
                      T};
}

GatePipeline x_rotation_pipeline(double h_z, double T) {
  if (!std::isfinite(h_z)) throw InvalidArgument("h_z must be finite");
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("anneal time T must be positive");
  return GatePipeline{PauliSum::single(1, 0, Pauli::X, -1.0), PauliSum::identity(1, -1.0),
                      PauliSum::single(1, 0, Pauli::Z), PauliSum::single(1, 0, Pauli::Z), h_z, T};
}

GatePipeline cnot_pipeline(double a, double b, double h_z, double T, CatalyticField field) {
  if (!(0.0 < a && a < b && b < 1.0)) {
    throw InvalidArgument("controlled-not needs 0 < a < b < 1");
  }
  if (!std::isfinite(h_z)) throw InvalidArgument("h_z must be finite");
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("anneal time T must be positive");
  const auto z1 = PauliSum::single(2, 0, Pauli::Z);
  const auto z2 = PauliSum::single(2, 1, Pauli::Z);
  const auto one = PauliSum::identity(2);
  const double w2 = field == CatalyticField::Uniform ? 1.0 : kInhomogeneousWeight;
  return GatePipeline{PauliSum::single(2, 0, Pauli::X, -1.0) + PauliSum::single(2, 1, Pauli::X, -0.5),
                      ((z1 + one) * (a * z2 + one)).simplified(),
                      ((b * z1 + one) * (a * z2 + one)).simplified(),
                      (z1 + w2 * z2).simplified(),
                      h_z,
                      T};
}

JunctionCheck check_junction(const GatePipeline& p) {
  const ControlSchedule fwd = p.forward_schedule();
  const ControlSchedule rev = p.reverse_schedule();
  const Eigen::MatrixXcd end = build_matrix(sample(fwd, fwd.total_time()));
  const Eigen::MatrixXcd start = build_matrix(sample(rev, 0.0));
  const Eigen::MatrixXcd swap = build_matrix(p.modified_problem - p.problem);
  return JunctionCheck{max_offdiagonal(end), max_offdiagonal(start), (start - end - swap).cwiseAbs().maxCoeff()};
}

PipelineReport run_pipeline(const GatePipeline& p, const StateVector& psi0, double dt) {
  const JunctionCheck j = check_junction(p);
  if (j.forward_offdiagonal > kJunctionTolerance || j.reverse_offdiagonal > kJunctionTolerance ||
      j.swap_residual > kJunctionTolerance) {
    throw NumericalError("pipeline junction operators are not diagonal; the problem swap would not commute");
  }
  EvolutionReport fwd = evolve(p.forward_schedule(), psi0, dt);
  EvolutionReport rev = evolve(p.reverse_schedule(), fwd.final_state, dt);
  return PipelineReport{std::move(fwd), std::move(rev)};
}

PipelineReport x_rotation(double h_z, double T, double dt, const StateVector& psi0) {
  if (psi0.qubit_count() != 1) throw InvalidArgument("X-rotation acts on a single qubit");
  return run_pipeline(x_rotation_pipeline(h_z, T), psi0, dt);
}

PipelineReport cnot(double a, double b, double h_z, double T, double dt, const StateVector& psi0,
                    CatalyticField field) {
  if (psi0.qubit_count() != 2) throw InvalidArgument("controlled-not acts on two qubits");
  return run_pipeline(cnot_pipeline(a, b, h_z, T, field), psi0, dt);
}

// --- phase gates -----------------------------------------------------------

StateVector z_rotation(const StateVector& psi, double t, std::size_t qubit, PhaseFrame frame) {
  check_qubit(psi, qubit);
  if (!std::isfinite(t)) throw InvalidArgument("rotation time must be finite");
  const std::size_t n = psi.qubit_count();
  Eigen::VectorXcd v = psi.amplitudes();
  if (frame == PhaseFrame::Idle) {
    apply_x_phase(v, n, qubit, t);
    return rewrap(std::move(v));
  }
  const std::size_t mask = bit_of(n, qubit);
  const cplx up = std::polar(1.0, t);
  const cplx down = std::polar(1.0, -t);
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    v[static_cast<Eigen::Index>(i)] *= (i & mask) ? down : up;
  }
  return rewrap(std::move(v));
}

ControlSchedule z_rotation_schedule(std::size_t qubits, std::size_t qubit, double t) {
  if (qubit >= qubits) throw InvalidArgument("qubit index outside the register");
  return constant(PauliSum::single(qubits, qubit, Pauli::Z, -1.0), t);
}

StateVector idle(const StateVector& psi, unsigned m, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("idling gap k must be positive");
  const double t = 2.0 * std::numbers::pi * m / k;
  const double theta = 0.5 * k * t;
  Eigen::VectorXcd v = psi.amplitudes();
  for (std::size_t q = 0; q < psi.qubit_count(); ++q) apply_x_phase(v, psi.qubit_count(), q, theta);
  return rewrap(std::move(v));
}

// --- programs --------------------------------------------------------------

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::XRotation:
      return "x_rotation";
    case GateKind::ControlledNot:
      return "cnot";
    case GateKind::ZRotation:
      return "z_rotation";
    case GateKind::Idle:
      return "idle";
  }
  return "unknown";
}

GateKind gate_kind_from_string(std::string_view name) {
  if (name == "x_rotation" || name == "XRotation") return GateKind::XRotation;
  if (name == "cnot" || name == "ControlledNot") return GateKind::ControlledNot;
  if (name == "z_rotation" || name == "ZRotation") return GateKind::ZRotation;
  if (name == "idle" || name == "Idle") return GateKind::Idle;
  throw InvalidArgument("unknown gate kind '" + std::string(name) + "'");
}

std::vector<std::size_t> GateSpec::targets() const {
  if (!qubits.empty()) return qubits;
  if (kind == GateKind::ControlledNot) return {0, 1};
  return {0};
}

void GateSpec::validate() const {
  auto arity = [&](std::size_t expected) {
    if (!qubits.empty() && qubits.size() != expected) {
      throw InvalidArgument(std::string(to_string(kind)) + " takes " + std::to_string(expected) + " qubit(s)");
    }
  };
  auto anneal_time = [&] {
    if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("anneal time T must be positive");
    if (!std::isfinite(h_z)) throw InvalidArgument("h_z must be finite");
  };
  switch (kind) {
    case GateKind::XRotation:
      arity(1);
      anneal_time();
      break;
    case GateKind::ControlledNot:
      arity(2);
      anneal_time();
      if (!(0.0 < a && a < b && b < 1.0)) throw InvalidArgument("controlled-not needs 0 < a < b < 1");
      if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw InvalidArgument("controlled-not control and target must differ");
      }
      break;
    case GateKind::ZRotation:
      arity(1);
      if (!std::isfinite(duration)) throw InvalidArgument("z-rotation duration must be finite");
      break;
    case GateKind::Idle:
      if (!qubits.empty()) throw InvalidArgument("idle acts on the whole register; drop the qubit list");
      break;
  }
}

void GateProgram::validate() const {
  if (qubits == 0 || qubits > kMaxQubits) {
    throw InvalidArgument("program register must hold 1 to " + std::to_string(kMaxQubits) + " qubits");
  }
  if (!(idle_gap > 0.0) || !std::isfinite(idle_gap)) throw InvalidArgument("idle gap k must be positive");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      steps[i].validate();
      for (std::size_t q : steps[i].targets()) {
        if (q >= qubits) throw InvalidArgument("qubit " + std::to_string(q) + " outside the register");
      }
    } catch (const InvalidArgument& e) {
      throw ProgramError(i, e.what());
    }
  }
}

EvolutionReport run_program(const GateProgram& prog, const StateVector& psi0, double dt) {
  prog.validate();
  if (psi0.qubit_count() != prog.qubits) {
    throw InvalidArgument("initial state does not match the program register");
  }
  StateVector psi = psi0;
  double drift = 0.0;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < prog.steps.size(); ++i) {
    const GateSpec& g = prog.steps[i];
    try {
      const std::vector<std::size_t> targets = g.targets();
      switch (g.kind) {
        case GateKind::XRotation:
        case GateKind::ControlledNot: {
          GatePipeline p = g.kind == GateKind::XRotation ? x_rotation_pipeline(g.h_z, g.T)
                                                         : cnot_pipeline(g.a, g.b, g.h_z, g.T, g.catalytic);
          if (prog.qubits != p.qubit_count()) p = p.embedded(prog.qubits, targets);
          PipelineReport r = run_pipeline(p, psi, dt);
          drift += r.norm_drift();
          steps += r.steps();
          psi = r.final_state();
          break;
        }
        case GateKind::ZRotation:
          psi = z_rotation(psi, g.duration, targets.front(), g.frame);
          break;
        case GateKind::Idle:
          psi = idle(psi, g.periods, prog.idle_gap);
          break;
      }
    } catch (const std::exception& e) {
      throw ProgramError(i, e.what());
    }
  }
  return EvolutionReport{psi, drift, steps, dt};
}

// --- calibration -----------------------------------------------------------

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

double relative_phase(const StateVector& out, std::size_t index_plus, std::size_t index_minus) {
  const Eigen::VectorXcd x = to_transverse_basis(out.amplitudes());
  const cplx ap = x[static_cast<Eigen::Index>(index_plus)];
  const cplx am = x[static_cast<Eigen::Index>(index_minus)];
  if (std::abs(ap) < kCalibrationFloor || std::abs(am) < kCalibrationFloor) {
    throw CalibrationError("relative phase undefined: an output amplitude is below " +
                           std::to_string(kCalibrationFloor));
  }
  return wrap_phase(std::arg(am) - std::arg(ap));
}

PhaseCalibration calibrate_relative_phase(const GateSpec& gate, double dt) {
  gate.validate();
  PhaseCalibration cal;
  cal.gate = gate;
  StateVector out = StateVector::all_plus(1);
  if (gate.kind == GateKind::XRotation) {
    out = x_rotation(gate.h_z, gate.T, dt, StateVector::all_plus(1)).final_state();
    cal.method = "x_rotation pipeline on |+>, dt = " + std::to_string(dt);
  } else if (gate.kind == GateKind::ControlledNot) {
    out = cnot(gate.a, gate.b, gate.h_z, gate.T, dt, StateVector::all_plus(2), gate.catalytic).final_state();
    cal.method = "cnot pipeline on |++>, target pair {++, +-}, dt = " + std::to_string(dt);
  } else {
    throw InvalidArgument("only x_rotation and cnot gates need phase calibration");
  }
  // Target qubit is the last one, so its |+> / |-> amplitudes sit at indices
  // 0 and 1 with every other qubit in |+>.
  cal.theta = relative_phase(out, 0, 1);
  double t = 0.5 * cal.theta;
  if (t < 0.0) t += std::numbers::pi;
  cal.compensation = t;

  const Eigen::VectorXcd x = to_transverse_basis(out.amplitudes());
  const std::size_t n = out.qubit_count();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double phase = std::abs(x[i]) < kCalibrationFloor ? std::numeric_limits<double>::quiet_NaN()
                                                            : wrap_phase(std::arg(x[i]) - std::arg(x[0]));
    cal.basis_phases.emplace_back(transverse_label(static_cast<std::size_t>(i), n), phase);
  }
  return cal;
}

}  // namespace annealgate
