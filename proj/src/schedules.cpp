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

#include "annealgate/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "annealgate/errors.hpp"

namespace annealgate {

// --- PiecewiseLinear -------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.empty()) {
    throw InvalidArgument("waveform needs at least one knot");
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i].x) || !std::isfinite(knots_[i].value)) {
      throw InvalidArgument("waveform knots must be finite");
    }
    if (i > 0 && !(knots_[i].x > knots_[i - 1].x)) {
      throw InvalidArgument("waveform knots must be strictly increasing");
    }
  }
}

PiecewiseLinear PiecewiseLinear::constant(double value, double x0, double x1) {
  return PiecewiseLinear({{x0, value}, {x1, value}});
}

PiecewiseLinear PiecewiseLinear::ramp(double x0, double value0, double x1, double value1) {
  return PiecewiseLinear({{x0, value0}, {x1, value1}});
}

double PiecewiseLinear::operator()(double x) const {
  if (x <= knots_.front().x) return knots_.front().value;
  if (x >= knots_.back().x) return knots_.back().value;
  const auto hi = std::upper_bound(knots_.begin(), knots_.end(), x, [](double v, const Knot& k) { return v < k.x; });
  const auto lo = hi - 1;
  if (x == lo->x) return lo->value;
  return lo->value + (hi->value - lo->value) * ((x - lo->x) / (hi->x - lo->x));
}

double PiecewiseLinear::slope(double x, bool from_left) const {
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const Knot& lo = knots_[i - 1];
    const Knot& hi = knots_[i];
    const bool inside = from_left ? (x > lo.x && x <= hi.x) : (x >= lo.x && x < hi.x);
    if (inside) return (hi.value - lo.value) / (hi.x - lo.x);
  }
  return 0.0;
}

PiecewiseLinear PiecewiseLinear::rescaled(double factor) const {
  if (!(factor > 0.0)) {
    throw InvalidArgument("rescale factor must be positive");
  }
  std::vector<Knot> k = knots_;
  for (auto& knot : k) knot.x *= factor;
  return PiecewiseLinear(std::move(k));
}

// --- Waveform --------------------------------------------------------------

Waveform::Waveform(PiecewiseLinear f) : factors_{std::move(f)} {}

Waveform::Waveform(std::vector<PiecewiseLinear> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw InvalidArgument("waveform needs at least one factor");
  }
}

double Waveform::operator()(double t) const {
  double v = 1.0;
  for (const auto& f : factors_) v *= f(t);
  return v;
}

double Waveform::derivative(double t, bool from_left) const {
  double total = 0.0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    double term = factors_[k].slope(t, from_left);
    for (std::size_t m = 0; m < factors_.size(); ++m) {
      if (m != k) term *= factors_[m](t);
    }
    total += term;
  }
  return total;
}

std::vector<double> Waveform::breakpoints() const {
  std::vector<double> out;
  for (const auto& f : factors_) {
    for (const auto& k : f.knots()) out.push_back(k.x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- ControlSchedule -------------------------------------------------------

ControlSchedule::ControlSchedule(std::vector<ScheduleBlock> blocks, double total_time)
    : blocks_(std::move(blocks)), total_time_(total_time), qubits_(0) {
  if (!(total_time_ > 0.0) || !std::isfinite(total_time_)) {
    throw InvalidArgument("schedule duration must be positive and finite");
  }
  if (blocks_.empty()) {
    throw InvalidArgument("schedule needs at least one block");
  }
  qubits_ = blocks_.front().op.qubit_count();
  for (const auto& b : blocks_) {
    if (b.op.qubit_count() != qubits_) {
      throw InvalidArgument("schedule blocks act on different register sizes");
    }
  }
}

std::vector<double> ControlSchedule::weights(double t) const {
  std::vector<double> w;
  w.reserve(blocks_.size());
  for (const auto& b : blocks_) w.push_back(b.waveform(t));
  return w;
}

std::vector<double> ControlSchedule::weight_derivatives(double t, bool from_left) const {
  std::vector<double> w;
  w.reserve(blocks_.size());
  for (const auto& b : blocks_) w.push_back(b.waveform.derivative(t, from_left));
  return w;
}

std::vector<double> ControlSchedule::breakpoints() const {
  std::vector<double> out{0.0, total_time_};
  for (const auto& b : blocks_) {
    for (double x : b.waveform.breakpoints()) {
      if (x > 0.0 && x < total_time_) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PauliSum sample(const ControlSchedule& sched, double t) {
  if (!(t >= 0.0 && t <= sched.total_time())) {
    throw InvalidArgument("sample time " + std::to_string(t) + " outside [0, T]");
  }
  PauliSum out(sched.qubit_count());
  for (const auto& b : sched.blocks()) {
    out += b.op * b.waveform(t);
  }
  return out.simplified();
}

PauliSum sample_derivative(const ControlSchedule& sched, double t, bool from_left) {
  if (!(t >= 0.0 && t <= sched.total_time())) {
    throw InvalidArgument("sample time " + std::to_string(t) + " outside [0, T]");
  }
  PauliSum out(sched.qubit_count());
  for (const auto& b : sched.blocks()) {
    out += b.op * b.waveform.derivative(t, from_left);
  }
  return out.simplified();
}

// --- constructors ----------------------------------------------------------

namespace {

void check_same_register(const PauliSum& a, const PauliSum& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw InvalidArgument("drive and problem Hamiltonians act on different register sizes");
  }
}

}  // namespace

ControlSchedule conventional(const PauliSum& drive, const PauliSum& problem, double total_time) {
  check_same_register(drive, problem);
  return ControlSchedule({{drive, PiecewiseLinear::ramp(0.0, 1.0, total_time, 0.0)},
                          {problem, PiecewiseLinear::ramp(0.0, 0.0, total_time, 1.0)}},
                         total_time);
}

ControlSchedule forward(const PauliSum& drive, const PauliSum& problem, const PauliSum& catalytic, double h_z,
                        double total_time) {
  check_same_register(drive, problem);
  check_same_register(drive, catalytic);
  if (!std::isfinite(h_z)) {
    throw InvalidArgument("catalytic amplitude must be finite");
  }
  if (!(total_time > 0.0)) {
    throw InvalidArgument("anneal time must be positive");
  }
  PiecewiseLinear pulse({{0.0, 0.0}, {0.5 * total_time, 0.5 * h_z}, {total_time, 0.0}});
  return ControlSchedule({{drive, PiecewiseLinear::ramp(0.0, 1.0, total_time, 0.0)},
                          {problem, PiecewiseLinear::ramp(0.0, 0.0, total_time, 1.0)},
                          {catalytic, std::move(pulse)}},
                         total_time);
}

ControlSchedule reverse(const PauliSum& drive, const PauliSum& modified_problem, double total_time) {
  check_same_register(drive, modified_problem);
  return ControlSchedule({{drive, PiecewiseLinear::ramp(0.0, 0.0, total_time, 1.0)},
                          {modified_problem, PiecewiseLinear::ramp(0.0, 1.0, total_time, 0.0)}},
                         total_time);
}

ControlSchedule constant(const PauliSum& op, double duration) {
  return ControlSchedule({{op, PiecewiseLinear::constant(1.0, 0.0, duration)}}, duration);
}

ControlSchedule dwave(const DWaveSchedule& spec, double total_time) {
  if (!(total_time > 0.0)) {
    throw InvalidArgument("annealing time must be positive");
  }
  if (spec.A(1.0) != 0.0 || spec.B(0.0) != 0.0) {
    throw InvalidArgument("D-Wave schedule must satisfy A(1) = 0 and B(0) = 0");
  }
  const std::size_t n = spec.h.size();
  if (n == 0 || n > kMaxQubits) {
    throw InvalidArgument("D-Wave problem needs between 1 and 12 fields");
  }
  PauliSum transverse = PauliSum::uniform_field(n, Pauli::X, -0.5);
  PauliSum longitudinal(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(spec.h[j])) throw InvalidArgument("field h_j must be finite");
    longitudinal += PauliSum::single(n, j, Pauli::Z, 0.5 * spec.h[j]);
  }
  PauliSum coupling(n);
  for (const auto& [ij, value] : spec.J) {
    const auto [i, j] = ij;
    if (!(i > j) || i >= n) {
      throw InvalidArgument("coupling keys must satisfy n > i > j");
    }
    if (!std::isfinite(value)) throw InvalidArgument("coupling J_ij must be finite");
    coupling += PauliSum::single(n, i, Pauli::Z) * PauliSum::single(n, j, Pauli::Z) * (0.5 * value);
  }
  const PiecewiseLinear a_t = spec.A.rescaled(total_time);
  const PiecewiseLinear b_t = spec.B.rescaled(total_time);
  std::vector<ScheduleBlock> blocks{{transverse, a_t}, {longitudinal, Waveform({b_t, spec.g})}};
  if (!coupling.empty()) {
    blocks.push_back({coupling, b_t});
  }
  return ControlSchedule(std::move(blocks), total_time);
}

PiecewiseLinear load_knots_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open knot table " + path.string());
  }
  std::vector<Knot> knots;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x = 0.0;
    double v = 0.0;
    if (!(row >> x >> v)) {
      if (knots.empty() && !header_seen) {
        header_seen = true;
        continue;
      }
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected 'x,value'");
    }
    knots.push_back({x, v});
  }
  try {
    return PiecewiseLinear(std::move(knots));
  } catch (const InvalidArgument& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace annealgate
