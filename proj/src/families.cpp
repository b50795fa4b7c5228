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

#include "annealgate/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

void check_alphas(const std::vector<int>& alphas) {
  if (alphas.empty() || alphas.size() > kMaxQubits) {
    throw InvalidArgument("family needs 1 to " + std::to_string(kMaxQubits) + " sites");
  }
  for (int a : alphas) {
    if (a != 1 && a != -1) throw InvalidArgument("site signs must be +1 or -1");
  }
}

// -(sum_{i in domain} alpha_i Z_i)^2 on an n-site register.
PauliSum negative_square(std::size_t n, const std::vector<std::size_t>& domain, const std::vector<int>& alphas) {
  PauliSum h = PauliSum::identity(n, -static_cast<double>(domain.size()));
  for (std::size_t x = 0; x < domain.size(); ++x) {
    for (std::size_t y = x + 1; y < domain.size(); ++y) {
      const std::size_t i = domain[x];
      const std::size_t j = domain[y];
      std::vector<Pauli> f(n, Pauli::I);
      f[i] = Pauli::Z;
      f[j] = Pauli::Z;
      h += PauliSum(n, {PauliString(std::move(f), -2.0 * alphas[i] * alphas[j])});
    }
  }
  return h;
}

PauliSum field(std::size_t n, const std::vector<std::size_t>& domain, const std::vector<int>& alphas, double sign) {
  PauliSum h(n);
  for (std::size_t i : domain) h += PauliSum::single(n, i, Pauli::Z, sign * alphas[i]);
  return h;
}

// Basis bit for spin value s = +1 (up, bit 0) or -1 (down, bit 1).
std::size_t spin_bits(std::size_t n, const std::vector<int>& spins) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (spins[i] < 0) idx |= std::size_t{1} << (n - 1 - i);
  }
  return idx;
}

}  // namespace

void PartitionSpec::validate() const {
  check_alphas(alphas);
  std::vector<int> seen(alphas.size(), 0);
  for (const auto& d : domains) {
    for (std::size_t i : d) {
      if (i >= alphas.size()) throw InvalidArgument("domain site " + std::to_string(i) + " has no sign");
      if (seen[i]++) throw InvalidArgument("site " + std::to_string(i) + " appears in two domains");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidArgument("domains do not cover every site");
  }
}

PauliSum two_state_entangled(const std::vector<int>& alphas) {
  check_alphas(alphas);
  if (alphas.size() < 2) throw InvalidArgument("entangled family needs at least two sites");
  std::vector<std::size_t> all(alphas.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return negative_square(alphas.size(), all, alphas).simplified();
}

PauliSum two_state_product(const PartitionSpec& spec) {
  spec.validate();
  if (spec.domains.size() != 2) throw InvalidArgument("product family needs exactly two domains (A, B)");
  if (spec.domains[0].empty()) {
    throw InvalidArgument("product family needs a non-empty squared domain A; without it the ground state is unique");
  }
  const std::size_t n = spec.site_count();
  return (negative_square(n, spec.domains[0], spec.alphas) + field(n, spec.domains[1], spec.alphas, 1.0)).simplified();
}

PauliSum combined_family(const PartitionSpec& spec) {
  spec.validate();
  if (spec.domains.size() < 2) throw InvalidArgument("combined family needs K >= 1 squared domains plus a field domain");
  const std::size_t n = spec.site_count();
  const std::size_t k = spec.domains.size() - 1;
  PauliSum h(n);
  for (std::size_t j = 0; j < k; ++j) {
    if (spec.domains[j].empty()) throw InvalidArgument("squared domain " + std::to_string(j + 1) + " is empty");
    h += negative_square(n, spec.domains[j], spec.alphas);
  }
  h += field(n, spec.domains[k], spec.alphas, -1.0);
  return h.simplified();
}

std::vector<std::size_t> entangled_ground_indices(const std::vector<int>& alphas) {
  check_alphas(alphas);
  std::vector<int> flipped(alphas.size());
  std::transform(alphas.begin(), alphas.end(), flipped.begin(), [](int a) { return -a; });
  std::vector<std::size_t> out{spin_bits(alphas.size(), alphas), spin_bits(alphas.size(), flipped)};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> product_ground_indices(const PartitionSpec& spec) {
  spec.validate();
  const std::size_t n = spec.site_count();
  std::vector<std::size_t> out;
  for (int sign : {1, -1}) {
    std::vector<int> spins(n);
    for (std::size_t i : spec.domains.at(0)) spins[i] = sign * spec.alphas[i];
    for (std::size_t i : spec.domains.at(1)) spins[i] = -spec.alphas[i];
    out.push_back(spin_bits(n, spins));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> combined_ground_indices(const PartitionSpec& spec) {
  spec.validate();
  const std::size_t n = spec.site_count();
  const std::size_t k = spec.domains.size() - 1;
  std::vector<std::size_t> out;
  for (std::size_t choice = 0; choice < (std::size_t{1} << k); ++choice) {
    std::vector<int> spins(n);
    for (std::size_t j = 0; j < k; ++j) {
      const int sign = (choice >> j) & 1 ? -1 : 1;
      for (std::size_t i : spec.domains[j]) spins[i] = sign * spec.alphas[i];
    }
    for (std::size_t i : spec.domains[k]) spins[i] = spec.alphas[i];
    out.push_back(spin_bits(n, spins));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroundSpaceReport verify_ground_space(const PauliSum& h, const std::vector<StateVector>& expected, double tol) {
  GroundSpaceReport r;
  const std::vector<StateVector> ground = ground_space(h);
  r.actual_dimension = ground.size();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.qubit_count());

  Eigen::MatrixXcd e(dim, static_cast<Eigen::Index>(expected.size()));
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (expected[k].qubit_count() != h.qubit_count()) {
      r.projector_distance = std::numeric_limits<double>::quiet_NaN();
      r.message = "expected state " + std::to_string(k) + " has the wrong register size";
      return r;
    }
    e.col(static_cast<Eigen::Index>(k)) = expected[k].amplitudes();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(e);
  qr.setThreshold(1e-10);
  r.expected_dimension = expected.empty() ? 0 : static_cast<std::size_t>(qr.rank());
  if (r.expected_dimension != r.actual_dimension) {
    r.projector_distance = std::numeric_limits<double>::quiet_NaN();
    r.message = "dimension mismatch: expected " + std::to_string(r.expected_dimension) + ", ground space is " +
                std::to_string(r.actual_dimension) + "-fold";
    return r;
  }
  const Eigen::MatrixXcd q =
      Eigen::MatrixXcd(qr.householderQ()).leftCols(static_cast<Eigen::Index>(r.expected_dimension));
  Eigen::MatrixXcd g(dim, static_cast<Eigen::Index>(ground.size()));
  for (std::size_t k = 0; k < ground.size(); ++k) g.col(static_cast<Eigen::Index>(k)) = ground[k].amplitudes();
  r.projector_distance = (q * q.adjoint() - g * g.adjoint()).norm();
  r.matches = r.projector_distance <= tol;
  r.message = r.matches ? "ground space matches" : "projector distance " + std::to_string(r.projector_distance);
  return r;
}

}  // namespace annealgate
