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
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "annealgate/state.hpp"

namespace annealgate {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Weighted tensor product of single-qubit Paulis, one factor per qubit.
class PauliString {
 public:
  PauliString(std::vector<Pauli> factors, double coefficient);

  /// coefficient * P on `qubit` of an n-qubit register, identity elsewhere.
  static PauliString single(std::size_t qubits, std::size_t qubit, Pauli p, double coefficient = 1.0);
  static PauliString identity(std::size_t qubits, double coefficient = 1.0);

  std::size_t qubit_count() const noexcept { return factors_.size(); }
  const std::vector<Pauli>& factors() const noexcept { return factors_; }
  Pauli factor(std::size_t qubit) const { return factors_.at(qubit); }
  double coefficient() const noexcept { return coefficient_; }
  bool is_diagonal() const noexcept;

  /// Bit mask of qubits carrying X or Y (the basis flips the string applies).
  std::size_t flip_mask() const noexcept;

  /// "Z1*Z2" style key with 1-based qubit indices; "I" for the identity.
  std::string key() const;

  bool same_factors(const PauliString& other) const noexcept { return factors_ == other.factors_; }

 private:
  std::vector<Pauli> factors_;
  double coefficient_;
};

/// Hermitian operator on n qubits stored as a real-weighted sum of Pauli strings.
class PauliSum {
 public:
  explicit PauliSum(std::size_t qubits);
  PauliSum(std::size_t qubits, std::vector<PauliString> terms);

  static PauliSum identity(std::size_t qubits, double coefficient = 1.0);
  static PauliSum single(std::size_t qubits, std::size_t qubit, Pauli p, double coefficient = 1.0);

  /// Sum over all qubits of coefficient * P_q.
  static PauliSum uniform_field(std::size_t qubits, Pauli p, double coefficient = 1.0);

  std::size_t qubit_count() const noexcept { return qubits_; }
  const std::vector<PauliString>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// True when every term is built from I and Z only.
  bool is_diagonal() const noexcept;

  /// Like terms merged, exact zeros dropped, terms sorted by factor pattern.
  PauliSum simplified() const;

  /// Maps qubit q of this operator onto qubit placement[q] of a larger register.
  PauliSum embedded(std::size_t register_size, const std::vector<std::size_t>& placement) const;

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator*=(double scale);

  friend PauliSum operator+(PauliSum lhs, const PauliSum& rhs) { return lhs += rhs; }
  friend PauliSum operator-(PauliSum lhs, const PauliSum& rhs) { return lhs += rhs * -1.0; }
  friend PauliSum operator*(PauliSum lhs, double s) { return lhs *= s; }
  friend PauliSum operator*(double s, PauliSum rhs) { return rhs *= s; }

  /// Operator product. Throws if the product is not Hermitian (an imaginary
  /// coefficient survives after merging).
  friend PauliSum operator*(const PauliSum& lhs, const PauliSum& rhs);

  std::string to_string() const;

 private:
  std::size_t qubits_;
  std::vector<PauliString> terms_;
};

/// PauliSum compiled for fast application: terms grouped by flip mask, each
/// group holding the per-basis-state phase*coefficient vector.
class CompiledOperator {
 public:
  explicit CompiledOperator(const PauliSum& op);

  std::size_t dimension() const noexcept { return dim_; }

  /// out += scale * (op * in)
  void apply_add(const cplx* in, cplx* out, double scale) const;

  struct Group {
    std::size_t mask;
    std::vector<cplx> weights;
  };
  const std::vector<Group>& groups() const noexcept { return groups_; }

 private:
  std::size_t dim_;
  std::vector<Group> groups_;
};

/// Dense 2^n x 2^n matrix of the operator.
Eigen::MatrixXcd build_matrix(const PauliSum& op);

/// Default absolute tolerance for grouping degenerate eigenvalues.
inline constexpr double kDegeneracyTolerance = 1e-9;

struct Spectrum {
  std::vector<double> eigenvalues;        // ascending
  std::vector<StateVector> eigenvectors;  // orthonormal, phase fixed
  std::size_t ground_degeneracy = 0;
  double degeneracy_tolerance = kDegeneracyTolerance;
};

/// Exact spectrum. Each eigenvector's largest-magnitude component (lowest
/// index on ties) is made real-positive so results are deterministic.
Spectrum eigen_decompose(const PauliSum& op, double tol = kDegeneracyTolerance);

/// Orthonormal basis of the eigenspace within `tol` of the lowest eigenvalue.
std::vector<StateVector> ground_space(const PauliSum& op, double tol = kDegeneracyTolerance);

/// Parses a term list such as "Z1*Z2: -1.0; X1: 0.5; I: 2" (1-based qubits,
/// terms separated by ';', ',' or newlines).
PauliSum parse_pauli_sum(std::string_view text, std::size_t qubits);

/// Builds from (key, coefficient) pairs as they appear in a config mapping.
PauliSum pauli_sum_from_terms(const std::vector<std::pair<std::string, double>>& terms, std::size_t qubits);

}  // namespace annealgate
