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

#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include "annealgate/operators.hpp"

namespace annealgate {

/// Knot (x, value) of a piecewise-linear function.
struct Knot {
  double x;
  double value;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Continuous piecewise-linear function through strictly increasing knots.
/// Outside the knot range the end values are held.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<Knot> knots);

  static PiecewiseLinear constant(double value, double x0 = 0.0, double x1 = 1.0);

  /// value0 at x0 rising (or falling) linearly to value1 at x1.
  static PiecewiseLinear ramp(double x0, double value0, double x1, double value1);

  double operator()(double x) const;
  const std::vector<Knot>& knots() const noexcept { return knots_; }

  /// One-sided derivative at x (left when `from_left`); zero where the end
  /// values are held.
  double slope(double x, bool from_left) const;

  /// Same function with every abscissa multiplied by `factor` (> 0).
  PiecewiseLinear rescaled(double factor) const;

 private:
  std::vector<Knot> knots_;
};

/// Product of piecewise-linear factors, all defined over time t. A single
/// factor is the common case; D-Wave schedules need B(s) * g(t).
class Waveform {
 public:
  Waveform(PiecewiseLinear f);  // NOLINT(google-explicit-constructor)
  explicit Waveform(std::vector<PiecewiseLinear> factors);

  double operator()(double t) const;
  const std::vector<PiecewiseLinear>& factors() const noexcept { return factors_; }

  /// One-sided derivative by the product rule.
  double derivative(double t, bool from_left) const;

  /// Union of the factors' knot abscissae.
  std::vector<double> breakpoints() const;

 private:
  std::vector<PiecewiseLinear> factors_;
};

struct ScheduleBlock {
  PauliSum op;
  Waveform waveform;
};

/// H(t) = sum_i waveform_i(t) * block_i on [0, T].
class ControlSchedule {
 public:
  ControlSchedule(std::vector<ScheduleBlock> blocks, double total_time);

  std::size_t qubit_count() const noexcept { return qubits_; }
  double total_time() const noexcept { return total_time_; }
  const std::vector<ScheduleBlock>& blocks() const noexcept { return blocks_; }

  /// Waveform values at t, one per block.
  std::vector<double> weights(double t) const;

  /// One-sided time derivatives of the waveforms at t.
  std::vector<double> weight_derivatives(double t, bool from_left) const;

  /// Sorted breakpoints in [0, T] including both ends; integrators must not
  /// step across these.
  std::vector<double> breakpoints() const;

 private:
  std::vector<ScheduleBlock> blocks_;
  double total_time_;
  std::size_t qubits_;
};

/// Operator H(t), simplified. Throws if t lies outside [0, T].
PauliSum sample(const ControlSchedule& sched, double t);

/// dH/dt at t from one side, simplified. Throws if t lies outside [0, T].
PauliSum sample_derivative(const ControlSchedule& sched, double t, bool from_left);

/// (1 - t/T) H_D + (t/T) H_P.
ControlSchedule conventional(const PauliSum& drive, const PauliSum& problem, double total_time);

/// Conventional anneal plus the catalytic pulse h_z * H_C, rising as (t/T) h_z
/// up to T/2 and falling as (1 - t/T) h_z afterwards.
ControlSchedule forward(const PauliSum& drive, const PauliSum& problem, const PauliSum& catalytic, double h_z,
                        double total_time);

/// (t/T) H_D + (1 - t/T) H~_P: starts at the modified problem, ends at the drive.
ControlSchedule reverse(const PauliSum& drive, const PauliSum& modified_problem, double total_time);

/// Time-independent H over [0, duration].
ControlSchedule constant(const PauliSum& op, double duration);

/// D-Wave style schedule
///   H(t) = -A(s)/2 sum_j X_j + B(s)/2 (g(t) sum_j h_j Z_j + sum_{i>j} J_ij Z_i Z_j),
/// s = t/T. A and B are functions of s on [0, 1]; g is a function of t.
struct DWaveSchedule {
  PiecewiseLinear A = PiecewiseLinear::ramp(0.0, 1.0, 1.0, 0.0);
  PiecewiseLinear B = PiecewiseLinear::ramp(0.0, 0.0, 1.0, 1.0);
  PiecewiseLinear g = PiecewiseLinear::constant(1.0);
  std::vector<double> h;
  /// Couplings keyed by zero-based (i, j) with i > j.
  std::map<std::pair<std::size_t, std::size_t>, double> J;
};

ControlSchedule dwave(const DWaveSchedule& spec, double total_time);

/// Reads "x,value" rows (x is s or t); blank lines, '#' comments and a
/// non-numeric header row are skipped.
PiecewiseLinear load_knots_csv(const std::filesystem::path& path);

}  // namespace annealgate
