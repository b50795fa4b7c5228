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

namespace annealgate {

struct SpectrumLevel {
  double energy = 0.0;
  std::size_t degeneracy = 1;
  /// Computational basis states carrying the level's weight, ascending index.
  std::vector<std::string> labels;
};

struct SpectrumReport {
  std::vector<SpectrumLevel> levels;  // ascending energy

  std::size_t ground_degeneracy() const { return levels.empty() ? 0 : levels.front().degeneracy; }
  std::string to_text() const;
};

/// Energy levels with their dominant basis states. Diagonal operators are read
/// off the diagonal directly, so their energies carry no eigensolver rounding.
SpectrumReport spectrum_report(const PauliSum& h, double tol = kDegeneracyTolerance);

}  // namespace annealgate
