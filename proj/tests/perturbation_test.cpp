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

#include <cmath>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "annealgate/errors.hpp"
#include "annealgate/perturbation.hpp"
#include "oracles.hpp"

namespace ag = annealgate;

namespace {

using cplx = std::complex<double>;

ag::DegeneratePair pair_of(cplx v11, cplx v22, cplx v12) {
  return {ag::StateVector::from_label("u"), ag::StateVector::from_label("d"), v11, v22, v12, std::conj(v12)};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ag::PauliSum xrot_v(double h) { return ag::parse_pauli_sum("X1: -1; Z1: " + num(h), 1); }

// (Z1 + 1)(a Z2 + 1)
ag::PauliSum cnot_h0(double a) {
  return ag::parse_pauli_sum("Z1*Z2: " + num(a) + "; Z1: 1; Z2: " + num(a) + "; I: 1", 2);
}

// drive -X1 - X2/2 plus (1 + h)(Z1 + c Z2)
ag::PauliSum cnot_v(double c, double h) {
  return ag::parse_pauli_sum("X1: -1; X2: -0.5; Z1: " + num(1 + h) + "; Z2: " + num(c * (1 + h)), 2);
}

constexpr std::size_t kDownDown = 3;

void expect_unit_and_orthogonal(const ag::PerturbationResult& r) {
  EXPECT_NEAR(std::norm(r.c_plus[0]) + std::norm(r.c_plus[1]), 1.0, 1e-12);
  EXPECT_NEAR(std::norm(r.c_minus[0]) + std::norm(r.c_minus[1]), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(std::conj(r.c_plus[0]) * r.c_minus[0] + std::conj(r.c_plus[1]) * r.c_minus[1]), 0.0, 1e-12);
}

TEST(FirstOrder, SymmetricPair) {
  const auto r = ag::first_order(pair_of(0.0, 0.0, -1.0));
  EXPECT_NEAR(r.e_plus, 1.0, 1e-15);
  EXPECT_NEAR(r.e_minus, -1.0, 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(r.c_plus[0] - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.c_plus[1] + s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.c_minus[0] - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.c_minus[1] - s), 0.0, 1e-15);
}

TEST(FirstOrder, LongitudinalPair) {
  for (double h : {-2.0, -0.3, 0.0, 0.5, 1.7}) {
    const auto r = ag::first_order(pair_of(h, -h, -1.0));
    EXPECT_NEAR(r.e_plus, std::sqrt(1 + h * h), 1e-14);
    EXPECT_NEAR(r.e_minus, -std::sqrt(1 + h * h), 1e-14);
    expect_unit_and_orthogonal(r);
  }
}

TEST(FirstOrder, ControlledNotEnergies) {
  for (double a : {0.3, 1.0}) {
    for (double h = -2.0; h <= 3.0; h += 0.5) {
      const auto r = ag::first_order(pair_of(-(1 + a) * (1 + h), (a - 1) * (1 + h), -0.5));
      const double k = 2 * a * (1 + h);
      EXPECT_NEAR(r.e_plus, 0.5 * (-2 * (1 + h) + std::sqrt(k * k + 1)), 1e-13);
      EXPECT_NEAR(r.e_minus, 0.5 * (-2 * (1 + h) - std::sqrt(k * k + 1)), 1e-13);
    }
  }
}

TEST(FirstOrder, AgreesWithDirectDiagonalization) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int rep = 0; rep < 200; ++rep) {
    const cplx v11 = u(rng), v22 = u(rng), v12(u(rng), rep % 2 ? u(rng) : 0.0);
    const auto r = ag::first_order(pair_of(v11, v22, v12));
    const auto o = oracle::diagonalize2(v11, v12, v22);
    EXPECT_NEAR(r.e_plus, o.e_high, 1e-12);
    EXPECT_NEAR(r.e_minus, o.e_low, 1e-12);
    oracle::Vec cp(2), cm(2);
    cp << r.c_plus[0], r.c_plus[1];
    cm << r.c_minus[0], r.c_minus[1];
    EXPECT_NEAR(oracle::fidelity(cp, o.v_high), 1.0, 1e-12);
    EXPECT_NEAR(oracle::fidelity(cm, o.v_low), 1.0, 1e-12);
    // phase convention: first amplitude real and non-negative
    EXPECT_NEAR(r.c_plus[0].imag(), 0.0, 1e-15);
    EXPECT_GE(r.c_plus[0].real(), 0.0);
    expect_unit_and_orthogonal(r);
  }
}

TEST(FirstOrder, DiagonalPerturbationKeepsBasis) {
  const auto r = ag::first_order(pair_of(-1.0, 2.0, 0.0));
  EXPECT_NEAR(r.e_plus, 2.0, 1e-15);
  EXPECT_NEAR(r.plus_populations()[1], 1.0, 1e-15);
  EXPECT_NEAR(r.minus_populations()[0], 1.0, 1e-15);
}

TEST(FirstOrder, FullyDegenerateThrows) {
  EXPECT_THROW(ag::first_order(pair_of(0.4, 0.4, 0.0)), ag::NumericalError);
}

TEST(FirstOrder, NonHermitianPairThrows) {
  ag::DegeneratePair p = pair_of(0.0, 0.0, -1.0);
  p.v21 = 2.0;
  EXPECT_ANY_THROW(ag::first_order(p));
}

TEST(GenericFirstOrder, XRotationAtZeroField) {
  const auto r = ag::generic_first_order(ag::PauliSum::identity(1, -1.0), xrot_v(0.0));
  const auto o = oracle::diagonalize2(0.0, -1.0, 0.0);
  EXPECT_NEAR(std::abs(std::abs(r.c_minus[0]) - std::abs(o.v_low[0])), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.c_minus[0]), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(r.c_minus[1]), 1.0 / std::sqrt(2.0), 1e-12);
  ASSERT_TRUE(r.basis_indices.has_value());
  EXPECT_EQ((*r.basis_indices)[0], 0u);
}

TEST(GenericFirstOrder, ControlledNotMatrixElements) {
  const double a = 0.3, h = 0.0;
  const auto pair = ag::degenerate_pair(cnot_h0(a), cnot_v(a, h), ag::kDegeneracyTolerance, kDownDown);
  EXPECT_NEAR(std::abs(pair.v11 - cplx(-(1 + a) * (1 + h))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(pair.v22 - cplx((a - 1) * (1 + h))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(pair.v12 - cplx(-0.5)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(pair.v21 - cplx(-0.5)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(pair.ket1[kDownDown]), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(pair.ket2[2]), 1.0, 1e-12);

  const auto generic = ag::generic_first_order(cnot_h0(a), cnot_v(a, h), ag::kDegeneracyTolerance, kDownDown);
  const auto direct = ag::first_order(pair_of(-(1 + a) * (1 + h), (a - 1) * (1 + h), -0.5));
  EXPECT_NEAR(generic.e_plus, direct.e_plus, 1e-12);
  EXPECT_NEAR(generic.e_minus, direct.e_minus, 1e-12);
  for (int k = 0; k < 2; ++k) {
    EXPECT_NEAR(std::abs(generic.c_plus[k] - direct.c_plus[k]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(generic.c_minus[k] - direct.c_minus[k]), 0.0, 1e-12);
  }
}

TEST(GenericFirstOrder, DefaultOrderIsAscendingIndex) {
  const auto r = ag::generic_first_order(cnot_h0(0.3), cnot_v(0.3, 0.2));
  ASSERT_TRUE(r.basis_indices.has_value());
  EXPECT_EQ((*r.basis_indices)[0], 2u);
  EXPECT_EQ((*r.basis_indices)[1], 3u);
}

TEST(GenericFirstOrder, RequiresTwoFoldGround) {
  EXPECT_THROW(ag::generic_first_order(ag::PauliSum::single(1, 0, ag::Pauli::Z), xrot_v(0.0)), ag::InvalidArgument);
  EXPECT_THROW(ag::generic_first_order(ag::PauliSum::identity(2), ag::PauliSum::uniform_field(2, ag::Pauli::X)),
               ag::InvalidArgument);
}

TEST(OracleClosure, XRotationGrid) {
  for (int i = -20; i <= 30; ++i) {
    const double h = 0.1 * i;
    const auto r = ag::generic_first_order(ag::PauliSum::identity(1, -1.0), xrot_v(h));
    const auto c = ag::xrot_populations(h);
    EXPECT_NEAR(r.plus_populations()[0], c.up_plus, 1e-10) << h;
    EXPECT_NEAR(r.plus_populations()[1], c.down_plus, 1e-10) << h;
    EXPECT_NEAR(r.minus_populations()[0], c.up_minus, 1e-10) << h;
    EXPECT_NEAR(r.minus_populations()[1], c.down_minus, 1e-10) << h;
    EXPECT_NEAR(r.e_plus, std::sqrt(1 + h * h), 1e-12);
  }
}

TEST(OracleClosure, ControlledNotGrid) {
  for (double c : {1.0, 0.3}) {
    for (int i = -20; i <= 30; ++i) {
      const double h = 0.1 * i;
      const auto r = ag::generic_first_order(cnot_h0(0.3), cnot_v(c, h), ag::kDegeneracyTolerance, kDownDown);
      const auto k = ag::cnot_populations(c, h);
      EXPECT_NEAR(r.plus_populations()[0], k.c1_plus, 1e-10) << c << " " << h;
      EXPECT_NEAR(r.plus_populations()[1], k.c2_plus, 1e-10) << c << " " << h;
      EXPECT_NEAR(r.minus_populations()[0], k.c1_minus, 1e-10) << c << " " << h;
      EXPECT_NEAR(r.minus_populations()[1], k.c2_minus, 1e-10) << c << " " << h;
    }
  }
}

TEST(ClosedForm, XRotationValues) {
  const auto z = ag::xrot_populations(0.0);
  EXPECT_DOUBLE_EQ(z.up_plus, 0.5);
  EXPECT_DOUBLE_EQ(z.down_plus, 0.5);
  EXPECT_DOUBLE_EQ(z.up_minus, 0.5);
  EXPECT_DOUBLE_EQ(z.down_minus, 0.5);
  const double u = std::sqrt(2.0) - 1.0;
  EXPECT_NEAR(ag::xrot_populations(1.0).up_plus, 1.0 / (1.0 + u * u), 1e-15);
  EXPECT_NEAR(ag::xrot_populations(1.0).up_plus, 0.853553, 1e-6);
}

TEST(ClosedForm, XRotationMirror) {
  for (double h : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(ag::xrot_populations(-h).up_plus, ag::xrot_populations(h).down_plus, 1e-14) << h;
  }
}

TEST(ClosedForm, ControlledNotValues) {
  const auto a1 = ag::cnot_populations(1.0, 0.0);
  const double kp = 2.0 + std::sqrt(5.0);
  EXPECT_NEAR(a1.c1_plus, 1.0 / (kp * kp + 1.0), 1e-15);
  EXPECT_NEAR(a1.c1_plus, 0.0528, 1e-4);
  const auto a3 = ag::cnot_populations(0.3, -1.0);
  EXPECT_NEAR(a3.c1_plus, 0.5, 1e-15);
  EXPECT_NEAR(a3.c1_minus, 0.5, 1e-15);
  EXPECT_THROW(ag::cnot_populations(0.0, 0.0), ag::InvalidArgument);
}

TEST(ClosedForm, PopulationsSumToOne) {
  for (int i = -30; i <= 30; ++i) {
    const double h = 0.1 * i;
    const auto x = ag::xrot_populations(h);
    EXPECT_NEAR(x.up_plus + x.down_plus, 1.0, 1e-12);
    EXPECT_NEAR(x.up_minus + x.down_minus, 1.0, 1e-12);
    EXPECT_NEAR(x.up_plus, x.down_minus, 1e-12);  // orthogonal pair
    const auto c = ag::cnot_populations(0.3, h);
    EXPECT_NEAR(c.c1_plus + c.c2_plus, 1.0, 1e-12);
    EXPECT_NEAR(c.c1_minus + c.c2_minus, 1.0, 1e-12);
  }
}

// Lowest two eigenvalues of H0 + eps V against E0 + eps E1; the residual is
// second order in eps.
TEST(ExactDiagonalization, FirstOrderResidualScalesQuadratically) {
  const ag::PauliSum h0 = cnot_h0(0.3);
  const ag::PauliSum v = cnot_v(0.3, 0.4);
  const auto r = ag::generic_first_order(h0, v);
  auto residual = [&](double eps) {
    const auto s = ag::eigen_decompose(h0 + eps * v);
    return std::max(std::abs(s.eigenvalues[0] - eps * r.e_minus), std::abs(s.eigenvalues[1] - eps * r.e_plus));
  };
  const double r1 = residual(1e-3);
  const double r2 = residual(1e-4);
  const double slope = std::log10(r1 / r2);
  EXPECT_NEAR(slope, 2.0, 0.2);
}

TEST(EigenstateRank, FindsNonDegenerateLevels) {
  const ag::PauliSum z = ag::PauliSum::single(1, 0, ag::Pauli::Z);
  EXPECT_EQ(ag::eigenstate_rank(z, ag::StateVector::from_label("d")), std::optional<std::size_t>(0));
  EXPECT_EQ(ag::eigenstate_rank(z, ag::StateVector::from_label("u")), std::optional<std::size_t>(1));
  EXPECT_FALSE(ag::eigenstate_rank(z, ag::StateVector::from_label("+")).has_value());
  EXPECT_FALSE(ag::eigenstate_rank(ag::PauliSum::identity(1), ag::StateVector::from_label("u")).has_value());
}

TEST(AdiabaticEndState, ResolvesDegenerateEndWithFirstOrderTheory) {
  // Forward X-rotation: the catalytic pulse is back to zero at T, so the
  // end-point perturbation is -T dH/dt = -X + h Z.
  const double h = 0.8;
  const auto s = ag::forward(ag::PauliSum::single(1, 0, ag::Pauli::X, -1.0), ag::PauliSum::identity(1, -1.0),
                             ag::PauliSum::single(1, 0, ag::Pauli::Z), h, 100.0);
  const auto end = ag::adiabatic_end_state(s, 0);
  const auto c = ag::xrot_populations(h);
  EXPECT_NEAR(std::norm(end[0]), c.up_minus, 1e-10);
  EXPECT_NEAR(std::norm(end[1]), c.down_minus, 1e-10);
}

TEST(AdiabaticEndState, NonDegenerateEndIsEigenvector) {
  const auto s = ag::conventional(ag::PauliSum::single(1, 0, ag::Pauli::X, -1.0),
                                  ag::PauliSum::single(1, 0, ag::Pauli::Z, -1.0), 10.0);
  EXPECT_NEAR(std::norm(ag::adiabatic_end_state(s, 0)[0]), 1.0, 1e-14);
  EXPECT_NEAR(std::norm(ag::adiabatic_end_state(s, 1)[1]), 1.0, 1e-14);
}

}  // namespace
