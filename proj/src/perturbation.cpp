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

#include "annealgate/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

std::array<double, 2> squares(const std::array<cplx, 2>& c) { return {std::norm(c[0]), std::norm(c[1])}; }

// Null vector of [[V11 - E, V12], [V21, V22 - E]], using whichever row is
// better conditioned, normalised and phase-fixed.
std::array<cplx, 2> eigenvector(const DegeneratePair& p, double e) {
  const cplx d1 = e - p.v11;
  const cplx d2 = e - p.v22;
  std::array<cplx, 2> c;
  if (std::abs(d1) + std::abs(p.v12) >= std::abs(d2) + std::abs(p.v21)) {
    c = {p.v12, d1};  // row 1: (V11 - E) c1 + V12 c2 = 0
  } else {
    c = {d2, p.v21};  // row 2: V21 c1 + (V22 - E) c2 = 0
  }
  const double n = std::sqrt(std::norm(c[0]) + std::norm(c[1]));
  c[0] /= n;
  c[1] /= n;
  const cplx& ref = std::abs(c[0]) > 1e-14 ? c[0] : c[1];
  const cplx phase = std::conj(ref) / std::abs(ref);
  c[0] *= phase;
  c[1] *= phase;
  if (std::abs(c[0]) > 1e-14) c[0] = std::abs(c[0]);
  else c[1] = std::abs(c[1]);
  return c;
}

cplx matrix_element(const Eigen::MatrixXcd& v, const StateVector& bra, const StateVector& ket) {
  return bra.amplitudes().dot(v * ket.amplitudes());
}

}  // namespace

std::array<double, 2> PerturbationResult::plus_populations() const { return squares(c_plus); }
std::array<double, 2> PerturbationResult::minus_populations() const { return squares(c_minus); }

PerturbationResult first_order(const DegeneratePair& pair) {
  if (pair.ket1.qubit_count() != pair.ket2.qubit_count()) {
    throw InvalidArgument("degenerate kets live on different registers");
  }
  if (std::abs(pair.ket1.amplitudes().dot(pair.ket2.amplitudes())) > 1e-10) {
    throw InvalidArgument("degenerate kets are not orthogonal");
  }
  const double scale = std::max({1.0, std::abs(pair.v11), std::abs(pair.v22), std::abs(pair.v12)});
  if (std::abs(pair.v21 - std::conj(pair.v12)) > 1e-12 * scale || std::abs(pair.v11.imag()) > 1e-12 * scale ||
      std::abs(pair.v22.imag()) > 1e-12 * scale) {
    throw InvalidArgument("perturbation matrix elements are not Hermitian");
  }
  const double v11 = pair.v11.real();
  const double v22 = pair.v22.real();
  if (std::abs(pair.v12) <= 1e-14 * scale && std::abs(v11 - v22) <= 1e-14 * scale) {
    throw NumericalError("perturbation is fully degenerate (V12 = 0, V11 = V22); amplitudes are undefined");
  }
  const double root = std::sqrt((v11 - v22) * (v11 - v22) + 4.0 * std::norm(pair.v12));
  PerturbationResult r;
  r.e_plus = 0.5 * ((v11 + v22) + root);
  r.e_minus = 0.5 * ((v11 + v22) - root);
  r.c_plus = eigenvector(pair, r.e_plus);
  r.c_minus = eigenvector(pair, r.e_minus);
  return r;
}

namespace {

struct AlignedPair {
  DegeneratePair pair;
  std::optional<std::array<std::size_t, 2>> indices;
};

AlignedPair align(const PauliSum& h0, const PauliSum& v, double tol, std::optional<std::size_t> first_index) {
  if (h0.qubit_count() != v.qubit_count()) {
    throw InvalidArgument("H0 and V act on different register sizes");
  }
  const std::vector<StateVector> ground = ground_space(h0, tol);
  if (ground.size() != 2) {
    throw InvalidArgument("H0 ground space is " + std::to_string(ground.size()) + "-fold, expected 2-fold");
  }
  // Diagonal of the ground projector; computational states inside the space
  // show up as entries equal to one.
  const std::size_t dim = ground.front().dimension();
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < dim; ++i) {
    const double p = std::norm(ground[0][i]) + std::norm(ground[1][i]);
    if (p > 1.0 - 1e-8) inside.push_back(i);
  }
  std::vector<StateVector> kets = ground;
  std::optional<std::array<std::size_t, 2>> indices;
  if (inside.size() == 2) {
    std::array<std::size_t, 2> idx{inside[0], inside[1]};
    if (first_index && *first_index == idx[1]) std::swap(idx[0], idx[1]);
    kets = {StateVector::basis(h0.qubit_count(), idx[0]), StateVector::basis(h0.qubit_count(), idx[1])};
    indices = idx;
  }
  if (first_index && !indices) {
    throw InvalidArgument("ground space is not spanned by computational states; cannot order it by index");
  }
  if (first_index && (*indices)[0] != *first_index) {
    throw InvalidArgument("basis index " + std::to_string(*first_index) + " is not in the ground space");
  }
  const Eigen::MatrixXcd m = build_matrix(v);
  return {DegeneratePair{kets[0], kets[1], matrix_element(m, kets[0], kets[0]), matrix_element(m, kets[1], kets[1]),
                        matrix_element(m, kets[0], kets[1]), matrix_element(m, kets[1], kets[0])},
          indices};
}

}  // namespace

DegeneratePair degenerate_pair(const PauliSum& h0, const PauliSum& v, double tol,
                               std::optional<std::size_t> first_index) {
  return align(h0, v, tol, first_index).pair;
}

PerturbationResult generic_first_order(const PauliSum& h0, const PauliSum& v, double tol,
                                       std::optional<std::size_t> first_index) {
  const AlignedPair aligned = align(h0, v, tol, first_index);
  PerturbationResult r = first_order(aligned.pair);
  r.basis_indices = aligned.indices;
  return r;
}

XRotationPopulations xrot_populations(double h_z) {
  if (!std::isfinite(h_z)) {
    throw InvalidArgument("h_z must be finite");
  }
  const double root = std::sqrt(1.0 + h_z * h_z);
  const double up_plus = 1.0 / (1.0 + (root - h_z) * (root - h_z));
  const double up_minus = 1.0 / (1.0 + (-root - h_z) * (-root - h_z));
  return {up_plus, 1.0 - up_plus, up_minus, 1.0 - up_minus};
}

CnotPopulations cnot_populations(double a, double h_z) {
  if (!(a > 0.0) || !std::isfinite(h_z)) {
    throw InvalidArgument("cnot_populations needs a > 0 and finite h_z");
  }
  const double k0 = 2.0 * a * (1.0 + h_z);
  const double root = std::sqrt(k0 * k0 + 1.0);
  const double kp = k0 + root;
  const double km = k0 - root;
  const double c1p = 1.0 / (kp * kp + 1.0);
  const double c1m = 1.0 / (km * km + 1.0);
  return {c1p, 1.0 - c1p, c1m, 1.0 - c1m};
}

std::optional<std::size_t> eigenstate_rank(const PauliSum& h, const StateVector& psi, double tol) {
  if (h.qubit_count() != psi.qubit_count()) {
    throw InvalidArgument("state and operator act on different register sizes");
  }
  const Spectrum s = eigen_decompose(h, tol);
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    if (std::norm(s.eigenvectors[k].amplitudes().dot(psi.amplitudes())) < 1.0 - 1e-9) continue;
    const bool below = k > 0 && s.eigenvalues[k] - s.eigenvalues[k - 1] <= tol;
    const bool above = k + 1 < s.eigenvalues.size() && s.eigenvalues[k + 1] - s.eigenvalues[k] <= tol;
    if (below || above) return std::nullopt;
    return k;
  }
  return std::nullopt;
}

StateVector adiabatic_end_state(const ControlSchedule& sched, std::size_t rank, double tol) {
  const double T = sched.total_time();
  const PauliSum h0 = sample(sched, T);
  const Spectrum s = eigen_decompose(h0, tol);
  if (rank >= s.eigenvalues.size()) {
    throw InvalidArgument("rank " + std::to_string(rank) + " exceeds the spectrum");
  }
  const std::size_t first_distinct = s.ground_degeneracy == 2 ? 2 : 1;
  if (s.ground_degeneracy > 2) {
    throw InvalidArgument("end Hamiltonian has a " + std::to_string(s.ground_degeneracy) + "-fold ground level");
  }
  for (std::size_t k = first_distinct; k + 1 < s.eigenvalues.size(); ++k) {
    if (s.eigenvalues[k + 1] - s.eigenvalues[k] <= tol) {
      throw InvalidArgument("end Hamiltonian has a degenerate excited level");
    }
  }
  if (s.ground_degeneracy == 1 || rank >= 2) return s.eigenvectors[rank];

  const PauliSum v = sample_derivative(sched, T, true) * -T;
  const DegeneratePair pair = degenerate_pair(h0, v, tol);
  const PerturbationResult r = first_order(pair);
  const auto& c = rank == 0 ? r.c_minus : r.c_plus;
  return StateVector(c[0] * pair.ket1.amplitudes() + c[1] * pair.ket2.amplitudes());
}

}  // namespace annealgate
