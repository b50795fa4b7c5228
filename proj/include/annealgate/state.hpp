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

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace annealgate {

using cplx = std::complex<double>;

/// Largest register handled anywhere in the library (dense 2^n matrices).
inline constexpr std::size_t kMaxQubits = 12;

/// Norm tolerance enforced when a StateVector is constructed.
inline constexpr double kStateNormTolerance = 1e-8;

/// Basis convention used throughout: |up> is the +1 eigenstate of sigma^z and
/// maps to bit 0; qubit 0 is the most significant bit, so index 0 is
/// |up up ... up>.
///
/// A StateVector always holds 2^n amplitudes with unit norm (within the
/// tolerance given at construction).
class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes, double norm_tolerance = kStateNormTolerance);

  /// Computational basis state |index>.
  static StateVector basis(std::size_t qubits, std::size_t index);

  /// Product state from a label: one character (or arrow) per qubit out of
  /// u/d/0/1/↑/↓ (computational) or +/- (transverse). Mixed labels are allowed.
  static StateVector from_label(std::string_view label);

  /// |++...+>, the ground state of a uniform transverse field.
  static StateVector all_plus(std::size_t qubits);

  std::size_t qubit_count() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amps_.norm(); }

 private:
  Eigen::VectorXcd amps_;
  std::size_t qubits_;
};

/// Register size for a vector length, or throws if it is not a power of two.
std::size_t qubits_for_dimension(std::size_t dimension);

/// "↑↓..." label of a computational basis index.
std::string basis_label(std::size_t index, std::size_t qubits);

/// ASCII variant ("up_down") used for CSV column names.
std::string basis_label_ascii(std::size_t index, std::size_t qubits);

/// Label of a transverse product basis index ("+-"), bit 0 -> '+'.
std::string transverse_label(std::size_t index, std::size_t qubits);

/// ASCII variant ("plus_minus").
std::string transverse_label_ascii(std::size_t index, std::size_t qubits);

/// Applies the Hadamard on every qubit, mapping amplitudes in the |+->
/// product basis onto computational indices (|+> -> bit 0).
Eigen::VectorXcd to_transverse_basis(const Eigen::VectorXcd& amplitudes);

}  // namespace annealgate
