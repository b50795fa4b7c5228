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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "annealgate/errors.hpp"
#include "annealgate/evolution.hpp"
#include "annealgate/families.hpp"
#include "oracles.hpp"

namespace ag = annealgate;

namespace {

std::vector<ag::StateVector> basis_states(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<ag::StateVector> out;
  for (std::size_t i : indices) out.push_back(ag::StateVector::basis(n, i));
  return out;
}

// Spin value of site i in basis index `index` (+1 up, -1 down).
int spin(std::size_t index, std::size_t i, std::size_t n) { return ((index >> (n - 1 - i)) & 1U) ? -1 : 1; }

// Diagonal energies evaluated straight from the defining expression.
std::vector<double> product_energies(const ag::PartitionSpec& p, double field_sign) {
  const std::size_t n = p.site_count();
  std::vector<double> e(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < e.size(); ++idx) {
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < p.domains.size(); ++j) {
      double s = 0.0;
      for (std::size_t i : p.domains[j]) s += p.alphas[i] * spin(idx, i, n);
      total -= s * s;
    }
    for (std::size_t i : p.domains.back()) total += field_sign * p.alphas[i] * spin(idx, i, n);
    e[idx] = total;
  }
  return e;
}

std::vector<std::size_t> argmin_set(const std::vector<double>& e) {
  const double lo = *std::min_element(e.begin(), e.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] - lo < 1e-9) out.push_back(i);
  }
  return out;
}

ag::PartitionSpec random_partition(std::size_t n, std::size_t k, std::mt19937& rng) {
  // K squared domains, each non-empty, plus a field domain that may be empty
  std::vector<std::size_t> sites(n);
  std::iota(sites.begin(), sites.end(), 0);
  std::shuffle(sites.begin(), sites.end(), rng);
  ag::PartitionSpec p;
  p.domains.assign(k + 1, {});
  for (std::size_t j = 0; j < k; ++j) p.domains[j].push_back(sites[j]);
  std::uniform_int_distribution<std::size_t> pick(0, k);
  for (std::size_t s = k; s < n; ++s) p.domains[pick(rng)].push_back(sites[s]);
  for (auto& d : p.domains) std::sort(d.begin(), d.end());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) p.alphas.push_back(coin(rng) ? 1 : -1);
  return p;
}

TEST(Entangled, AllAlignedThreeSites) {
  const ag::PauliSum h = ag::two_state_entangled({1, 1, 1});
  EXPECT_EQ(ag::entangled_ground_indices({1, 1, 1}), (std::vector<std::size_t>{0, 7}));
  EXPECT_TRUE(ag::verify_ground_space(h, basis_states(3, {0, 7})).matches);
}

TEST(Entangled, OppositeSigns) {
  const ag::PauliSum h = ag::two_state_entangled({1, -1});
  EXPECT_EQ(ag::entangled_ground_indices({1, -1}), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(ag::verify_ground_space(h, basis_states(2, {1, 2})).matches);
}

TEST(Entangled, TwoSiteSpectrumKeepsConstant) {
  const ag::Spectrum s = ag::eigen_decompose(ag::two_state_entangled({1, 1}));
  const std::vector<double> expect{-4, -4, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(s.eigenvalues[i], expect[i], 1e-12);
  // squared sums expand to a constant plus ZZ terms only
  const ag::PauliSum h = ag::two_state_entangled({1, -1, 1});
  for (const auto& t : h.terms()) {
    const auto z = std::count(t.factors().begin(), t.factors().end(), ag::Pauli::Z);
    EXPECT_TRUE(z == 0 || z == 2) << t.key();
  }
}

TEST(Entangled, SignFlipInvariant) {
  std::mt19937 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 7;
    std::vector<int> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng() % 2 ? 1 : -1;
      b[i] = -a[i];
    }
    EXPECT_EQ((ag::build_matrix(ag::two_state_entangled(a)) - ag::build_matrix(ag::two_state_entangled(b)))
                  .cwiseAbs()
                  .maxCoeff(),
              0.0);
  }
}

TEST(Entangled, RejectsBadSigns) {
  EXPECT_THROW(ag::two_state_entangled({1}), ag::InvalidArgument);
  EXPECT_THROW(ag::two_state_entangled({1, 2}), ag::InvalidArgument);
}

TEST(Product, TwoSites) {
  const ag::PartitionSpec p{{{0}, {1}}, {1, 1}};
  EXPECT_EQ(ag::product_ground_indices(p), (std::vector<std::size_t>{1, 3}));  // ud, dd
  EXPECT_TRUE(ag::verify_ground_space(ag::two_state_product(p), basis_states(2, {1, 3})).matches);
}

TEST(Product, ThirdsExample) {
  // first third squared, middle third field with +1, last third field with -1
  const ag::PartitionSpec p{{{0, 1}, {2, 3, 4, 5}}, {1, 1, 1, 1, -1, -1}};
  const auto idx = ag::product_ground_indices(p);
  ASSERT_EQ(idx.size(), 2u);
  for (std::size_t i : idx) {
    EXPECT_EQ(spin(i, 0, 6), spin(i, 1, 6));
    EXPECT_EQ(spin(i, 2, 6), -1);
    EXPECT_EQ(spin(i, 3, 6), -1);
    EXPECT_EQ(spin(i, 4, 6), 1);
    EXPECT_EQ(spin(i, 5, 6), 1);
  }
  EXPECT_EQ(idx, argmin_set(product_energies(p, +1.0)));
  EXPECT_TRUE(ag::verify_ground_space(ag::two_state_product(p), basis_states(6, idx)).matches);
}

TEST(Product, EmptyFieldDomainIsEntangled) {
  const ag::PartitionSpec p{{{0, 1, 2}, {}}, {1, -1, 1}};
  EXPECT_EQ((ag::build_matrix(ag::two_state_product(p)) - ag::build_matrix(ag::two_state_entangled(p.alphas)))
                .cwiseAbs()
                .maxCoeff(),
            0.0);
}

TEST(Product, RejectsMalformedPartitions) {
  EXPECT_THROW(ag::two_state_product({{{}, {0, 1}}, {1, 1}}), ag::InvalidArgument);
  EXPECT_THROW(ag::two_state_product({{{0}, {1}, {2}}, {1, 1, 1}}), ag::InvalidArgument);
  EXPECT_THROW(ag::two_state_product({{{0, 1}, {1}}, {1, 1}}), ag::InvalidArgument);
  EXPECT_THROW(ag::two_state_product({{{0}, {}}, {1, 1}}), ag::InvalidArgument);
  EXPECT_THROW(ag::two_state_product({{{0}, {1}}, {1, 0}}), ag::InvalidArgument);
}

TEST(Combined, TwoSquaredDomainsGiveFourFold) {
  const ag::PartitionSpec p{{{0, 1}, {2, 3}, {4}}, {1, 1, 1, 1, 1}};
  const ag::PauliSum h = ag::combined_family(p);
  EXPECT_EQ(ag::eigen_decompose(h).ground_degeneracy, 4u);
  const auto idx = ag::combined_ground_indices(p);
  EXPECT_EQ(idx.size(), 4u);
  EXPECT_EQ(idx, argmin_set(product_energies(p, -1.0)));
  EXPECT_TRUE(ag::verify_ground_space(h, basis_states(5, idx)).matches);
}

TEST(Combined, SingleSquaredDomainIsProductWithFlippedField) {
  const ag::PartitionSpec p{{{0, 2}, {1, 3}}, {1, -1, -1, 1}};
  ag::PartitionSpec flipped = p;
  for (std::size_t i : p.domains[1]) flipped.alphas[i] = -flipped.alphas[i];
  EXPECT_LT((ag::build_matrix(ag::combined_family(p)) - ag::build_matrix(ag::two_state_product(flipped)))
                .cwiseAbs()
                .maxCoeff(),
            1e-14);
}

TEST(Combined, RejectsMissingSquaredDomain) {
  EXPECT_THROW(ag::combined_family({{{0, 1}}, {1, 1}}), ag::InvalidArgument);
  EXPECT_THROW(ag::combined_family({{{0}, {}, {1}}, {1, 1}}), ag::InvalidArgument);
}

TEST(Families, AdvertisedGroundSpacesUpToEightSites) {
  std::mt19937 rng(2026);
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<int> alphas(n);
    for (auto& a : alphas) a = rng() % 2 ? 1 : -1;
    const auto e = ag::verify_ground_space(ag::two_state_entangled(alphas),
                                           basis_states(n, ag::entangled_ground_indices(alphas)));
    EXPECT_TRUE(e.matches) << n << " " << e.message;
    EXPECT_EQ(e.actual_dimension, 2u);

    const ag::PartitionSpec prod = random_partition(n, 1, rng);
    const auto idx = ag::product_ground_indices(prod);
    EXPECT_EQ(idx, argmin_set(product_energies(prod, +1.0)));
    const auto pr = ag::verify_ground_space(ag::two_state_product(prod), basis_states(n, idx));
    EXPECT_TRUE(pr.matches) << n << " " << pr.message;
    EXPECT_LE(pr.projector_distance, 1e-10);

    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
      const ag::PartitionSpec c = random_partition(n, k, rng);
      const auto cidx = ag::combined_ground_indices(c);
      EXPECT_EQ(cidx.size(), std::size_t{1} << k);
      EXPECT_EQ(cidx, argmin_set(product_energies(c, -1.0)));
      const auto cr = ag::verify_ground_space(ag::combined_family(c), basis_states(n, cidx));
      EXPECT_TRUE(cr.matches) << n << " K=" << k << " " << cr.message;
      EXPECT_EQ(cr.actual_dimension, std::size_t{1} << k);
      EXPECT_LE(cr.projector_distance, 1e-10);
    }
  }
}

TEST(Verify, DimensionMismatchIsReported) {
  const ag::PauliSum h = ag::two_state_entangled({1, 1, 1, 1});
  EXPECT_TRUE(ag::verify_ground_space(h, basis_states(4, {0, 15})).matches);
  const auto r = ag::verify_ground_space(h, basis_states(4, {0}));
  EXPECT_FALSE(r.matches);
  EXPECT_EQ(r.expected_dimension, 1u);
  EXPECT_EQ(r.actual_dimension, 2u);
  EXPECT_TRUE(std::isnan(r.projector_distance));
  EXPECT_FALSE(r.message.empty());
}

TEST(Verify, AcceptsAnyBasisOfTheSpan) {
  const ag::PauliSum h = ag::two_state_entangled({1, 1, 1});
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd ghz_p = Eigen::VectorXcd::Zero(8), ghz_m = Eigen::VectorXcd::Zero(8);
  ghz_p[0] = s;
  ghz_p[7] = s;
  ghz_m[0] = s;
  ghz_m[7] = -s;
  EXPECT_TRUE(ag::verify_ground_space(h, {ag::StateVector(ghz_p), ag::StateVector(ghz_m)}).matches);
}

TEST(Verify, WrongSpanFails) {
  const ag::PauliSum h = ag::two_state_entangled({1, 1});
  const auto r = ag::verify_ground_space(h, basis_states(2, {0, 1}));
  EXPECT_FALSE(r.matches);
  EXPECT_GT(r.projector_distance, 1.0);
}

TEST(Families, EntangledAnnealEndsInGroundSpace) {
  const ag::PauliSum h = ag::two_state_entangled({1, 1, 1});
  const auto s = ag::conventional(ag::PauliSum::uniform_field(3, ag::Pauli::X, -1.0), h, 2000.0);
  const auto r = ag::evolve(s, ag::StateVector::all_plus(3));
  const auto p = ag::populations(r.final_state);
  EXPECT_GE(p.values[0] + p.values[7], 0.98);
  EXPECT_LE(r.norm_drift, 1e-8);
}

}  // namespace
