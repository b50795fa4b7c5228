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

#include "annealgate/evolution.hpp"

#include <cmath>
#include <random>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

// Two-stage Gauss-Legendre tableau.
const double kSqrt3 = std::sqrt(3.0);
const double kC1 = 0.5 - kSqrt3 / 6.0;
const double kC2 = 0.5 + kSqrt3 / 6.0;
const double kA11 = 0.25;
const double kA12 = 0.25 - kSqrt3 / 6.0;
const double kA21 = 0.25 + kSqrt3 / 6.0;
const double kA22 = 0.25;
// b^T A^{-1}: psi_{n+1} = psi_n + kD1 Z1 + kD2 Z2.
const double kD1 = -kSqrt3;
const double kD2 = kSqrt3;

// Lagrange weights of the collocation quadratic through nodes {0, c1, c2},
// evaluated at 1 + c1 and 1 + c2; used to predict the next step's stages.
struct Extrapolation {
  double w[2][3];
};

Extrapolation make_extrapolation() {
  const double nodes[3] = {0.0, kC1, kC2};
  const double targets[2] = {1.0 + kC1, 1.0 + kC2};
  Extrapolation e{};
  for (int t = 0; t < 2; ++t) {
    for (int k = 0; k < 3; ++k) {
      double l = 1.0;
      for (int m = 0; m < 3; ++m) {
        if (m != k) l *= (targets[t] - nodes[m]) / (nodes[k] - nodes[m]);
      }
      e.w[t][k] = l;
    }
  }
  return e;
}

constexpr int kMaxStageIterations = 60;
constexpr double kStageTolerance = 1e-16;
constexpr double kStageAcceptable = 1e-12;

class Integrator {
 public:
  explicit Integrator(const ControlSchedule& sched) : sched_(sched), dim_(std::size_t{1} << sched.qubit_count()) {
    for (const auto& b : sched.blocks()) ops_.emplace_back(b.op);
    y1_.resize(dim_);
    y2_.resize(dim_);
    f1_.resize(dim_);
    f2_.resize(dim_);
    z1_.resize(dim_);
    z2_.resize(dim_);
    z1n_.resize(dim_);
    z2n_.resize(dim_);
  }

  // out = -i H(w) in
  void apply_h(const std::vector<double>& w, const cplx* in, cplx* out) const {
    std::fill(out, out + dim_, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < ops_.size(); ++k) ops_[k].apply_add(in, out, w[k]);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = cplx{out[i].imag(), -out[i].real()};
  }

  // Advances psi by h from time t. `warm` says z1_/z2_ hold a prediction.
  void step(std::vector<cplx>& psi, double t, double h, bool warm) {
    const auto w1 = sched_.weights(t + kC1 * h);
    const auto w2 = sched_.weights(t + kC2 * h);
    if (!warm) {
      std::fill(z1_.begin(), z1_.end(), cplx{0.0, 0.0});
      std::fill(z2_.begin(), z2_.end(), cplx{0.0, 0.0});
    }
    double delta = 0.0;
    int it = 0;
    for (; it < kMaxStageIterations; ++it) {
      for (std::size_t i = 0; i < dim_; ++i) {
        y1_[i] = psi[i] + z1_[i];
        y2_[i] = psi[i] + z2_[i];
      }
      apply_h(w1, y1_.data(), f1_.data());
      apply_h(w2, y2_.data(), f2_.data());
      delta = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        z1n_[i] = h * (kA11 * f1_[i] + kA12 * f2_[i]);
        z2n_[i] = h * (kA21 * f1_[i] + kA22 * f2_[i]);
        delta += std::norm(z1n_[i] - z1_[i]) + std::norm(z2n_[i] - z2_[i]);
      }
      z1_.swap(z1n_);
      z2_.swap(z2n_);
      delta = std::sqrt(delta);
      if (delta <= kStageTolerance) break;
    }
    if (!(delta <= kStageAcceptable)) {
      throw NumericalError("implicit stage iteration did not converge at t = " + std::to_string(t) +
                           "; reduce dt");
    }
    std::vector<cplx>& next = y1_;  // reuse as scratch for psi_{n+1}
    for (std::size_t i = 0; i < dim_; ++i) next[i] = psi[i] + kD1 * z1_[i] + kD2 * z2_[i];
    // Predict next stages from the collocation quadratic through psi, Y1, Y2.
    for (std::size_t i = 0; i < dim_; ++i) {
      const cplx p0 = psi[i];
      const cplx s1 = p0 + z1_[i];
      const cplx s2 = p0 + z2_[i];
      const cplx u1 = extrap_.w[0][0] * p0 + extrap_.w[0][1] * s1 + extrap_.w[0][2] * s2;
      const cplx u2 = extrap_.w[1][0] * p0 + extrap_.w[1][1] * s1 + extrap_.w[1][2] * s2;
      z1_[i] = u1 - next[i];
      z2_[i] = u2 - next[i];
    }
    psi.swap(next);
  }

 private:
  const ControlSchedule& sched_;
  std::size_t dim_;
  std::vector<CompiledOperator> ops_;
  std::vector<cplx> y1_, y2_, f1_, f2_, z1_, z2_, z1n_, z2n_;
  Extrapolation extrap_ = make_extrapolation();
};

double norm_of(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace

EvolutionReport evolve(const ControlSchedule& sched, const StateVector& psi0, double dt) {
  const double total = sched.total_time();
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidArgument("time step must be positive");
  }
  if (dt > total) {
    throw InvalidArgument("time step exceeds the schedule duration");
  }
  if (psi0.qubit_count() != sched.qubit_count()) {
    throw InvalidArgument("initial state and schedule act on different register sizes");
  }

  Integrator integrator(sched);
  std::vector<cplx> psi(psi0.amplitudes().data(), psi0.amplitudes().data() + psi0.dimension());
  const auto breaks = sched.breakpoints();

  std::size_t steps = 0;
  for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
    const double a = breaks[seg];
    const double b = breaks[seg + 1];
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / dt - 1e-9));
    bool warm = false;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = a + static_cast<double>(k) * dt;
      const double h = (k + 1 == n) ? b - t : dt;
      // The predictor assumes equal steps; restart it after a short step.
      integrator.step(psi, t, h, warm && h == dt);
      warm = true;
      ++steps;
      if ((steps & 0xFFF) == 0) {
        const double drift = std::abs(norm_of(psi) - 1.0);
        if (drift > kMaxNormDrift) {
          throw NumericalError("norm drift " + std::to_string(drift) + " at t = " + std::to_string(t + h) +
                               " exceeds budget; reduce dt");
        }
      }
    }
  }

  const double drift = std::abs(norm_of(psi) - 1.0);
  if (drift > kMaxNormDrift) {
    throw NumericalError("norm drift " + std::to_string(drift) + " exceeds budget; reduce dt");
  }
  Eigen::VectorXcd out = Eigen::Map<const Eigen::VectorXcd>(psi.data(), static_cast<Eigen::Index>(psi.size()));
  return EvolutionReport{StateVector(std::move(out), kMaxNormDrift), drift, steps, dt};
}

Populations populations(const StateVector& psi) {
  Populations p;
  const std::size_t n = psi.qubit_count();
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    p.labels.push_back(basis_label(i, n));
    p.values.push_back(std::norm(psi[i]));
  }
  return p;
}

Populations transverse_populations(const StateVector& psi) {
  const Eigen::VectorXcd x = to_transverse_basis(psi.amplitudes());
  Populations p;
  const std::size_t n = psi.qubit_count();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    p.labels.push_back(transverse_label(static_cast<std::size_t>(i), n));
    p.values.push_back(std::norm(x[i]));
  }
  return p;
}

cplx overlap(const StateVector& psi, const StateVector& phi) {
  if (psi.qubit_count() != phi.qubit_count()) {
    throw InvalidArgument("overlap of states on different register sizes");
  }
  return phi.amplitudes().dot(psi.amplitudes());  // Eigen's dot conjugates the left operand
}

Counts sample_measurements(const StateVector& psi, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw InvalidArgument("shot count must be at least 1");
  }
  const Populations p = populations(psi);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(p.values.begin(), p.values.end());
  Counts c;
  c.labels = p.labels;
  c.values.assign(p.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) ++c.values[dist(rng)];
  return c;
}

}  // namespace annealgate
