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

#include <array>
#include <cstddef>
#include <optional>

#include "annealgate/operators.hpp"
#include "annealgate/schedules.hpp"
#include "annealgate/state.hpp"

namespace annealgate {

/// Two orthonormal degenerate kets and the perturbation's matrix elements
/// V_nm = <n|V|m> between them.
struct DegeneratePair {
  StateVector ket1;
  StateVector ket2;
  cplx v11;
  cplx v22;
  cplx v12;
  cplx v21;
};

/// First-order energies and the eigenvectors of the 2x2 secular problem,
/// expressed as amplitudes on (|1>, |2>).
struct PerturbationResult {
  double e_plus = 0.0;
  double e_minus = 0.0;
  std::array<cplx, 2> c_plus{};
  std::array<cplx, 2> c_minus{};
  /// Computational basis indices of |1> and |2> when each is a single basis
  /// state (always the case for generic_first_order on Ising H0).
  std::optional<std::array<std::size_t, 2>> basis_indices;

  /// |c_{+,k}|^2 and |c_{-,k}|^2 for k = 1, 2.
  std::array<double, 2> plus_populations() const;
  std::array<double, 2> minus_populations() const;
};

/// Solves the 2x2 secular problem. Amplitudes are phase-fixed so the |1>
/// component is real and non-negative (the |2> component when c1 vanishes).
/// Throws NumericalError when V12 = 0 and V11 = V22 (the ratio is undefined).
PerturbationResult first_order(const DegeneratePair& pair);

/// First-order degenerate perturbation theory from operators: finds the
/// two-fold ground space of H0, aligns it with computational basis states and
/// evaluates V inside it. |1> is the lower basis index unless
/// `first_index` names the one that should come first.
/// Throws InvalidArgument unless the ground space is exactly two-dimensional.
PerturbationResult generic_first_order(const PauliSum& h0, const PauliSum& v, double tol = kDegeneracyTolerance,
                                       std::optional<std::size_t> first_index = std::nullopt);

/// Pairs the ground space of H0 with V's matrix elements, without solving.
DegeneratePair degenerate_pair(const PauliSum& h0, const PauliSum& v, double tol = kDegeneracyTolerance,
                               std::optional<std::size_t> first_index = std::nullopt);

/// Closed-form X-rotation populations for H0 = -1, V = -X + h_z Z with
/// |1> = up, |2> = down.
struct XRotationPopulations {
  double up_plus;
  double down_plus;
  double up_minus;
  double down_minus;
};
XRotationPopulations xrot_populations(double h_z);

/// Closed-form controlled-not populations, K = 2a(1+h_z) +- sqrt(K0^2 + 1),
/// c1^2 = 1/(K^2+1), c2^2 = K^2/(K^2+1). Here |1> = down-down and
/// |2> = down-up; `a` is both the problem parameter and the catalytic weight
/// on the second qubit.
struct CnotPopulations {
  double c1_plus;
  double c2_plus;
  double c1_minus;
  double c2_minus;
};
CnotPopulations cnot_populations(double a, double h_z);

/// Rank of psi among the eigenstates of h (0 = ground), or nullopt unless
/// psi is a non-degenerate eigenstate.
std::optional<std::size_t> eigenstate_rank(const PauliSum& h, const StateVector& psi,
                                           double tol = kDegeneracyTolerance);

/// Adiabatic prediction for a run of `sched` that starts in the rank-`rank`
/// eigenstate of H(0): the rank-`rank` eigenstate of H(T). A two-fold ground
/// level of H(T) is resolved by first-order perturbation theory with
/// V = -T dH/dt just before T, lower branch first. Throws InvalidArgument
/// when any other level of H(T) is degenerate.
StateVector adiabatic_end_state(const ControlSchedule& sched, std::size_t rank, double tol = kDegeneracyTolerance);

}  // namespace annealgate
