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

#include "annealgate/harness/spectrum_report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace annealgate {

namespace {

SpectrumReport diagonal_report(const PauliSum& h, double tol) {
  const Eigen::MatrixXcd m = build_matrix(h);
  const std::size_t n = h.qubit_count();
  std::vector<std::size_t> order(static_cast<std::size_t>(m.rows()));
  std::iota(order.begin(), order.end(), 0);
  auto energy = [&](std::size_t i) { return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real(); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return energy(x) < energy(y); });
  SpectrumReport r;
  for (std::size_t k = 0; k < order.size();) {
    std::size_t end = k + 1;
    while (end < order.size() && energy(order[end]) - energy(order[k]) <= tol) ++end;
    std::vector<std::size_t> members(order.begin() + static_cast<std::ptrdiff_t>(k),
                                     order.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(members.begin(), members.end());
    SpectrumLevel level;
    level.energy = energy(order[k]);
    level.degeneracy = members.size();
    for (std::size_t i : members) level.labels.push_back(basis_label(i, n));
    r.levels.push_back(std::move(level));
    k = end;
  }
  return r;
}

}  // namespace

SpectrumReport spectrum_report(const PauliSum& h, double tol) {
  if (h.is_diagonal()) return diagonal_report(h, tol);
  const Spectrum s = eigen_decompose(h, tol);
  const std::size_t n = h.qubit_count();
  SpectrumReport r;
  for (std::size_t k = 0; k < s.eigenvalues.size();) {
    std::size_t end = k + 1;
    while (end < s.eigenvalues.size() && s.eigenvalues[end] - s.eigenvalues[k] <= tol) ++end;
    Eigen::VectorXd weight = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.eigenvectors[k].dimension()));
    for (std::size_t m = k; m < end; ++m) weight += s.eigenvectors[m].amplitudes().cwiseAbs2();
    const double top = weight.maxCoeff();
    SpectrumLevel level;
    level.energy = s.eigenvalues[k];
    level.degeneracy = end - k;
    for (Eigen::Index i = 0; i < weight.size(); ++i) {
      if (weight[i] >= 0.5 * top) level.labels.push_back(basis_label(static_cast<std::size_t>(i), n));
    }
    r.levels.push_back(std::move(level));
    k = end;
  }
  return r;
}

std::string SpectrumReport::to_text() const {
  std::string out = "  energy           deg  states\n";
  char buf[64];
  for (const auto& level : levels) {
    std::snprintf(buf, sizeof buf, "  %-+16.12g %3zu  ", level.energy, level.degeneracy);
    out += buf;
    for (std::size_t i = 0; i < level.labels.size(); ++i) {
      out += (i ? ", |" : "|") + level.labels[i] + "⟩";
    }
    out += '\n';
  }
  return out;
}

}  // namespace annealgate
