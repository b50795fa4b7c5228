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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "annealgate/errors.hpp"
#include "annealgate/gates.hpp"
#include "annealgate/perturbation.hpp"
#include "oracles.hpp"

namespace ag = annealgate;

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const double kR = 1.0 / std::sqrt(2.0);

ag::StateVector random_state(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(1 << n);
  for (auto& x : v) x = cplx(g(rng), g(rng));
  return ag::StateVector(v.normalized());
}

TEST(Pipelines, JunctionOperatorsAreDiagonal) {
  for (const auto& p : {ag::x_rotation_pipeline(0.7, 10.0), ag::cnot_pipeline(0.3, 0.5, 1.2, 10.0),
                        ag::cnot_pipeline(0.3, 0.5, -0.4, 10.0, ag::CatalyticField::Inhomogeneous)}) {
    const ag::JunctionCheck j = ag::check_junction(p);
    EXPECT_EQ(j.forward_offdiagonal, 0.0);
    EXPECT_EQ(j.reverse_offdiagonal, 0.0);
    EXPECT_LT(j.swap_residual, 1e-12);
  }
}

TEST(Pipelines, ControlledNotParameterChecks) {
  EXPECT_THROW(ag::cnot_pipeline(0.5, 0.3, 0.0, 10.0), ag::InvalidArgument);
  EXPECT_THROW(ag::cnot_pipeline(0.0, 0.5, 0.0, 10.0), ag::InvalidArgument);
  EXPECT_THROW(ag::cnot_pipeline(0.3, 1.0, 0.0, 10.0), ag::InvalidArgument);
  EXPECT_THROW(ag::cnot_pipeline(0.3, 0.5, 0.0, 0.0), ag::InvalidArgument);
  EXPECT_THROW(ag::x_rotation_pipeline(std::nan(""), 10.0), ag::InvalidArgument);
}

TEST(Pipelines, ControlledNotOperators) {
  const auto p = ag::cnot_pipeline(0.3, 0.5, 0.0, 10.0);
  const oracle::Mat drive = -oracle::string_matrix("XI") - 0.5 * oracle::string_matrix("IX");
  const oracle::Mat problem = (oracle::string_matrix("ZI") + oracle::string_matrix("II")) *
                              (0.3 * oracle::string_matrix("IZ") + oracle::string_matrix("II"));
  const oracle::Mat modified = (0.5 * oracle::string_matrix("ZI") + oracle::string_matrix("II")) *
                               (0.3 * oracle::string_matrix("IZ") + oracle::string_matrix("II"));
  EXPECT_TRUE(ag::build_matrix(p.drive).isApprox(drive, 1e-14));
  EXPECT_TRUE(ag::build_matrix(p.problem).isApprox(problem, 1e-14));
  EXPECT_TRUE(ag::build_matrix(p.modified_problem).isApprox(modified, 1e-14));
  const auto q = ag::cnot_pipeline(0.3, 0.5, 0.0, 10.0, ag::CatalyticField::Inhomogeneous);
  EXPECT_TRUE(ag::build_matrix(q.catalytic)
                  .isApprox(oracle::string_matrix("ZI") + 0.3 * oracle::string_matrix("IZ"), 1e-14));
}

TEST(XRotation, BalancedAtZeroAmplitude) {
  const auto r = ag::x_rotation(0.0, 2000.0, 0.01, ag::StateVector::from_label("+"));
  const auto p = ag::populations(r.forward.final_state);
  EXPECT_NEAR(p.values[0], 0.5, 0.02);
  EXPECT_NEAR(p.values[1], 0.5, 0.02);
  EXPECT_LE(r.norm_drift(), 1e-8);
}

TEST(XRotation, ForwardFollowsOracleAtUnitAmplitude) {
  const auto r = ag::x_rotation(1.0, 2000.0, 0.01, ag::StateVector::from_label("+"));
  const auto p = ag::populations(r.forward.final_state);
  const auto c = ag::xrot_populations(1.0);
  EXPECT_NEAR(std::max(p.values[0], p.values[1]), 1.0 / (1.0 + std::pow(std::sqrt(2.0) - 1.0, 2)), 0.05);
  EXPECT_NEAR(p.values[0], c.up_minus, 0.05);
  EXPECT_NEAR(p.values[1], c.down_minus, 0.05);
  // reverse part maps the forward populations onto the transverse poles
  const auto t = ag::transverse_populations(r.final_state());
  EXPECT_NEAR(t.at("+"), p.values[1], 0.02);
  EXPECT_NEAR(t.at("-"), p.values[0], 0.02);
}

TEST(XRotation, ReverseMapsGroundToGround) {
  const auto p = ag::x_rotation_pipeline(0.0, 2000.0);
  const auto down = ag::evolve(p.reverse_schedule(), ag::StateVector::from_label("d"));
  const auto up = ag::evolve(p.reverse_schedule(), ag::StateVector::from_label("u"));
  EXPECT_GE(ag::transverse_populations(down.final_state).at("+"), 0.999);
  EXPECT_GE(ag::transverse_populations(up.final_state).at("-"), 0.999);
}

TEST(XRotation, RejectsWrongRegister) {
  EXPECT_THROW(ag::x_rotation(0.0, 10.0, 0.01, ag::StateVector::from_label("++")), ag::InvalidArgument);
  EXPECT_THROW(ag::cnot(0.3, 0.5, 0.0, 10.0, 0.01, ag::StateVector::from_label("+")), ag::InvalidArgument);
}

TEST(ControlledNot, MinusControlLeavesStateAlone) {
  const auto r = ag::cnot(0.3, 0.5, 1.0, 20000.0, 0.01, ag::StateVector::from_label("--"));
  EXPECT_GE(ag::transverse_populations(r.final_state()).at("--"), 0.99);
  EXPECT_LE(r.norm_drift(), 1e-8);
}

TEST(ZRotation, MatchesPhaseFormula) {
  std::mt19937 rng(8);
  for (double t : {0.0, 0.3, kPi / 4, 2.0, -1.1}) {
    const ag::StateVector psi = random_state(2, rng);
    for (std::size_t q = 0; q < 2; ++q) {
      const ag::StateVector out = ag::z_rotation(psi, t, q);
      for (std::size_t i = 0; i < 4; ++i) {
        const bool down = (i >> (1 - q)) & 1U;
        const cplx expect = psi[i] * std::exp(cplx(0.0, down ? -t : t));
        EXPECT_LT(std::abs(out[i] - expect), 1e-12);
      }
    }
  }
}

TEST(ZRotation, Examples) {
  const ag::StateVector up = ag::StateVector::from_label("u");
  const ag::StateVector r = ag::z_rotation(up, kPi, 0);
  EXPECT_LT(std::abs(r[0] + 1.0), 1e-15);
  const ag::StateVector plus = ag::StateVector::from_label("+");
  const ag::StateVector q = ag::z_rotation(plus, kPi / 4, 0);
  EXPECT_LT(std::abs(q[1] / q[0] - std::exp(cplx(0, -kPi / 2))), 1e-15);
  EXPECT_TRUE(ag::z_rotation(plus, 0.0, 0).amplitudes().isApprox(plus.amplitudes()));
  EXPECT_THROW(ag::z_rotation(plus, 1.0, 1), ag::InvalidArgument);
}

TEST(ZRotation, IdleFrameRotatesAboutX) {
  std::mt19937 rng(4);
  const ag::StateVector psi = random_state(2, rng);
  const double t = 0.77;
  const oracle::Mat u = oracle::on_qubit(oracle::propagator(-oracle::pauli('X'), t), 1, 2);
  EXPECT_LT((ag::z_rotation(psi, t, 1, ag::PhaseFrame::Idle).amplitudes() - u * psi.amplitudes()).norm(), 1e-12);
}

TEST(ZRotation, ScheduleEvolutionAgrees) {
  std::mt19937 rng(9);
  const ag::StateVector psi = random_state(2, rng);
  for (double t : {0.5, 2.5, 10.0}) {
    const auto r = ag::evolve(ag::z_rotation_schedule(2, 1, t), psi);
    EXPECT_LT((r.final_state.amplitudes() - ag::z_rotation(psi, t, 1).amplitudes()).norm(), 1e-8) << t;
  }
  EXPECT_THROW(ag::z_rotation_schedule(2, 2, 1.0), ag::InvalidArgument);
}

TEST(Idle, PeriodicInTwoPiOverGap) {
  std::mt19937 rng(10);
  const ag::StateVector psi = random_state(1, rng);
  EXPECT_TRUE(ag::idle(psi, 0, 2.0).amplitudes().isApprox(psi.amplitudes()));
  for (unsigned m : {1u, 3u}) {
    EXPECT_GE(oracle::fidelity(ag::idle(psi, m, 2.0).amplitudes(), psi.amplitudes()), 1.0 - 1e-8) << m;
  }
  EXPECT_THROW(ag::idle(psi, 1, 0.0), ag::InvalidArgument);
}

TEST(Idle, MatchesPropagator) {
  std::mt19937 rng(12);
  const ag::StateVector psi = random_state(2, rng);
  const double k = 1.3;
  const unsigned m = 2;
  const oracle::Mat h = -(k / 2) * (oracle::string_matrix("XI") + oracle::string_matrix("IX"));
  const oracle::Vec expect = oracle::propagator(h, 2 * kPi * m / k) * psi.amplitudes();
  EXPECT_LT((ag::idle(psi, m, k).amplitudes() - expect).norm(), 1e-12);
}

TEST(Program, EmptyProgramIsIdentity) {
  ag::GateProgram prog;
  const ag::StateVector psi = ag::StateVector::from_label("+");
  EXPECT_TRUE(ag::run_program(prog, psi).final_state.amplitudes().isApprox(psi.amplitudes()));
}

TEST(Program, ZRotationsCompose) {
  ag::GateSpec z;
  z.kind = ag::GateKind::ZRotation;
  z.duration = kPi / 2;
  ag::GateProgram two{1, {z, z}};
  z.duration = kPi;
  ag::GateProgram one{1, {z}};
  const ag::StateVector psi = ag::StateVector::from_label("+");
  EXPECT_LT((ag::run_program(two, psi).final_state.amplitudes() - ag::run_program(one, psi).final_state.amplitudes())
                .norm(),
            1e-14);
}

TEST(Program, CalibratedRotationKeepsBalance) {
  ag::GateSpec x;
  x.kind = ag::GateKind::XRotation;
  x.h_z = 0.0;
  x.T = 2000.0;
  const ag::PhaseCalibration cal = ag::calibrate_relative_phase(x);
  ag::GateSpec z;
  z.kind = ag::GateKind::ZRotation;
  z.duration = cal.compensation;
  z.frame = ag::PhaseFrame::Idle;
  const auto r = ag::run_program({1, {x, z}}, ag::StateVector::from_label("+"));
  const auto t = ag::transverse_populations(r.final_state);
  EXPECT_NEAR(t.at("+"), 0.5, 0.02);
  EXPECT_NEAR(t.at("-"), 0.5, 0.02);
  EXPECT_NEAR(ag::relative_phase(r.final_state, 0, 1), 0.0, 1e-9);
}

TEST(Program, AnnealGateActsOnlyOnTargets) {
  ag::GateSpec x;
  x.kind = ag::GateKind::XRotation;
  x.h_z = 0.6;
  x.T = 20.0;
  x.qubits = {1};
  const auto r = ag::run_program({2, {x}}, ag::StateVector::from_label("d+"), 0.01);
  const auto single = ag::x_rotation(0.6, 20.0, 0.01, ag::StateVector::from_label("+"));
  oracle::Vec down(2);
  down << 0, 1;
  const oracle::Vec expect = oracle::kron(down, single.final_state().amplitudes());
  EXPECT_LT((r.final_state.amplitudes() - expect).norm(), 1e-10);
  EXPECT_EQ(r.steps, single.steps());
}

TEST(Program, ErrorsCarryStepIndex) {
  ag::GateSpec ok;
  ok.kind = ag::GateKind::ZRotation;
  ok.duration = 0.1;
  ag::GateSpec bad = ok;
  bad.qubits = {3};
  try {
    ag::run_program({2, {ok, bad}}, ag::StateVector::from_label("++"));
    FAIL() << "expected ProgramError";
  } catch (const ag::ProgramError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
  ag::GateSpec cnot;
  cnot.kind = ag::GateKind::ControlledNot;
  cnot.qubits = {0, 0};
  EXPECT_THROW(ag::run_program({2, {ok, ok, cnot}}, ag::StateVector::from_label("++")), ag::ProgramError);
  EXPECT_THROW(ag::run_program({2, {}}, ag::StateVector::from_label("+")), ag::InvalidArgument);
}

TEST(GateSpec, KindNamesRoundTrip) {
  for (auto k : {ag::GateKind::XRotation, ag::GateKind::ControlledNot, ag::GateKind::ZRotation, ag::GateKind::Idle}) {
    EXPECT_EQ(ag::gate_kind_from_string(ag::to_string(k)), k);
  }
  EXPECT_THROW(ag::gate_kind_from_string("hadamard"), ag::InvalidArgument);
  ag::GateSpec idle;
  idle.kind = ag::GateKind::Idle;
  idle.qubits = {0};
  EXPECT_THROW(idle.validate(), ag::InvalidArgument);
  ag::GateSpec c;
  c.kind = ag::GateKind::ControlledNot;
  EXPECT_EQ(c.targets(), (std::vector<std::size_t>{0, 1}));
}

TEST(Calibration, RelativePhaseDefinition) {
  const ag::StateVector zero(ag::StateVector::from_label("u"));  // (|+> + |->)/sqrt2
  EXPECT_NEAR(ag::relative_phase(zero, 0, 1), 0.0, 1e-15);
  Eigen::VectorXcd x(2);
  x << kR * cplx(1, 0), kR * cplx(0, 1);  // transverse amplitudes (1, i)/sqrt2
  oracle::Mat h(2, 2);
  h << kR, kR, kR, -kR;
  const ag::StateVector quarter(h * x);
  EXPECT_NEAR(ag::relative_phase(quarter, 0, 1), kPi / 2, 1e-14);
  EXPECT_THROW(ag::relative_phase(ag::StateVector::from_label("+"), 0, 1), ag::CalibrationError);
}

TEST(Calibration, XRotationIsReproducible) {
  ag::GateSpec x;
  x.h_z = 1.0;
  x.T = 2000.0;
  const auto a = ag::calibrate_relative_phase(x);
  const auto b = ag::calibrate_relative_phase(x);
  EXPECT_TRUE(std::isfinite(a.theta));
  EXPECT_NEAR(a.theta, b.theta, 1e-6);
  EXPECT_GE(a.compensation, 0.0);
  EXPECT_LT(a.compensation, kPi);
  // compensating in the idle frame removes the phase
  const auto out = ag::x_rotation(1.0, 2000.0, 0.01, ag::StateVector::from_label("+")).final_state();
  const auto fixed = ag::z_rotation(out, a.compensation, 0, ag::PhaseFrame::Idle);
  EXPECT_NEAR(ag::relative_phase(fixed, 0, 1), 0.0, 1e-9);
  ASSERT_EQ(a.basis_phases.size(), 2u);
  EXPECT_EQ(a.basis_phases[0].first, "+");
  EXPECT_EQ(a.basis_phases[0].second, 0.0);
}

TEST(Calibration, RejectsPhaseGates) {
  ag::GateSpec z;
  z.kind = ag::GateKind::ZRotation;
  EXPECT_THROW(ag::calibrate_relative_phase(z), ag::InvalidArgument);
}

TEST(Calibration, WrapPhase) {
  EXPECT_DOUBLE_EQ(ag::wrap_phase(kPi), kPi);
  EXPECT_DOUBLE_EQ(ag::wrap_phase(-kPi), kPi);
  EXPECT_NEAR(ag::wrap_phase(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(ag::wrap_phase(0.25), 0.25, 1e-15);
}

}  // namespace
