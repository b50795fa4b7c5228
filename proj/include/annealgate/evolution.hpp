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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "annealgate/schedules.hpp"
#include "annealgate/state.hpp"

namespace annealgate {

inline constexpr double kDefaultDt = 0.01;

/// Integration aborts once | ||psi|| - 1 | exceeds this.
inline constexpr double kMaxNormDrift = 1e-6;

struct EvolutionReport {
  StateVector final_state;
  double norm_drift = 0.0;  // | ||psi_final|| - 1 |
  std::size_t steps = 0;
  double dt = 0.0;
};

/// Integrates d(psi)/dt = -i H(t) psi over [0, T] with the two-stage
/// Gauss-Legendre collocation scheme (order 4, norm-preserving for Hermitian
/// H). Steps never straddle a schedule breakpoint; the last step of each
/// segment is shortened to land on it exactly. No renormalisation is applied.
EvolutionReport evolve(const ControlSchedule& sched, const StateVector& psi0, double dt = kDefaultDt);

/// Values indexed by basis state, with labels in index order.
template <class T>
struct BasisMap {
  std::vector<std::string> labels;
  std::vector<T> values;

  std::size_t size() const noexcept { return values.size(); }
  const T& at(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return values[i];
    }
    throw std::out_of_range("no basis label '" + std::string(label) + "'");
  }
};

using Populations = BasisMap<double>;
using Counts = BasisMap<std::size_t>;

/// |amplitude|^2 per computational basis state, labelled with arrows.
Populations populations(const StateVector& psi);

/// Probabilities in the |+-> product basis, labelled "+-".
Populations transverse_populations(const StateVector& psi);

/// <phi|psi>
cplx overlap(const StateVector& psi, const StateVector& phi);

/// Draws `shots` computational-basis outcomes from populations(psi).
/// Reproducible for a fixed seed.
Counts sample_measurements(const StateVector& psi, std::size_t shots, std::uint64_t seed);

}  // namespace annealgate
