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
#include <string>
#include <vector>

#include "annealgate/operators.hpp"
#include "annealgate/state.hpp"

namespace annealgate {

/// Disjoint domains covering sites 0..N-1 plus a sign per site. For the
/// product and combined families the last domain is the field domain; the
/// others are squared.
struct PartitionSpec {
  std::vector<std::vector<std::size_t>> domains;
  std::vector<int> alphas;

  std::size_t site_count() const noexcept { return alphas.size(); }

  /// Throws InvalidArgument unless the domains partition 0..N-1 and every
  /// sign is +1 or -1. Empty domains are allowed.
  void validate() const;

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// -(sum_i alpha_i Z_i)^2, expanded into a constant plus ZZ terms.
PauliSum two_state_entangled(const std::vector<int>& alphas);

/// -(sum_{i in A} alpha_i Z_i)^2 + sum_{i in B} alpha_i Z_i with
/// domains = {A, B}. Throws InvalidArgument for an empty A.
PauliSum two_state_product(const PartitionSpec& spec);

/// -sum_{j<=K} (sum_{i in A_j} alpha_i Z_i)^2 - sum_{i in A_{K+1}} alpha_i Z_i.
/// Needs K >= 1 squared domains, each non-empty.
PauliSum combined_family(const PartitionSpec& spec);

/// Computational basis indices of the advertised ground states.
std::vector<std::size_t> entangled_ground_indices(const std::vector<int>& alphas);
std::vector<std::size_t> product_ground_indices(const PartitionSpec& spec);
std::vector<std::size_t> combined_ground_indices(const PartitionSpec& spec);

struct GroundSpaceReport {
  bool matches = false;
  std::size_t expected_dimension = 0;
  std::size_t actual_dimension = 0;
  /// Frobenius norm of P_expected - P_ground; NaN when the dimensions differ.
  double projector_distance = 0.0;
  std::string message;
};

/// Compares span(expected) with the exact ground eigenspace of H. Dimension
/// mismatches and non-orthonormal inputs are reported, not thrown.
GroundSpaceReport verify_ground_space(const PauliSum& h, const std::vector<StateVector>& expected,
                                      double tol = 1e-10);

}  // namespace annealgate
