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

#include "annealgate/state.hpp"

#include <cmath>
#include <vector>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

enum class LocalState { Up, Down, Plus, Minus };

std::vector<LocalState> parse_label(std::string_view label) {
  std::vector<LocalState> out;
  std::size_t i = 0;
  while (i < label.size()) {
    const unsigned char c = static_cast<unsigned char>(label[i]);
    if (c == 0xE2 && i + 2 < label.size()) {
      const unsigned char c1 = static_cast<unsigned char>(label[i + 1]);
      const unsigned char c2 = static_cast<unsigned char>(label[i + 2]);
      if (c1 == 0x86 && c2 == 0x91) {
        out.push_back(LocalState::Up);
      } else if (c1 == 0x86 && c2 == 0x93) {
        out.push_back(LocalState::Down);
      } else if (c1 == 0x88 && c2 == 0x92) {  // U+2212 minus sign
        out.push_back(LocalState::Minus);
      } else {
        throw InvalidArgument("unrecognised character in state label '" + std::string(label) + "'");
      }
      i += 3;
      continue;
    }
    switch (c) {
      case 'u': case 'U': case '0': out.push_back(LocalState::Up); break;
      case 'd': case 'D': case '1': out.push_back(LocalState::Down); break;
      case '+': case 'p': case 'P': out.push_back(LocalState::Plus); break;
      case '-': case 'm': case 'M': out.push_back(LocalState::Minus); break;
      case ' ': case '|': case '>': break;
      default:
        throw InvalidArgument("unrecognised character in state label '" + std::string(label) + "'");
    }
    ++i;
  }
  return out;
}

}  // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes, double norm_tolerance)
    : amps_(std::move(amplitudes)), qubits_(qubits_for_dimension(static_cast<std::size_t>(amps_.size()))) {
  if (!amps_.allFinite()) {
    throw InvalidArgument("state amplitudes must be finite");
  }
  const double drift = std::abs(amps_.norm() - 1.0);
  if (drift > norm_tolerance) {
    throw InvalidArgument("state is not normalised (|norm - 1| = " + std::to_string(drift) + ")");
  }
}

StateVector StateVector::basis(std::size_t qubits, std::size_t index) {
  if (qubits == 0 || qubits > kMaxQubits) {
    throw InvalidArgument("register size must be in [1, 12]");
  }
  const std::size_t dim = std::size_t{1} << qubits;
  if (index >= dim) {
    throw InvalidArgument("basis index out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::from_label(std::string_view label) {
  const auto local = parse_label(label);
  if (local.empty() || local.size() > kMaxQubits) {
    throw InvalidArgument("state label must name between 1 and 12 qubits");
  }
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (LocalState s : local) {
    Eigen::Vector2cd q;
    switch (s) {
      case LocalState::Up: q << 1.0, 0.0; break;
      case LocalState::Down: q << 0.0, 1.0; break;
      case LocalState::Plus: q << r, r; break;
      case LocalState::Minus: q << r, -r; break;
    }
    Eigen::VectorXcd next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * q[0];
      next[2 * i + 1] = v[i] * q[1];
    }
    v = std::move(next);
  }
  return StateVector(std::move(v));
}

StateVector StateVector::all_plus(std::size_t qubits) {
  if (qubits == 0 || qubits > kMaxQubits) {
    throw InvalidArgument("register size must be in [1, 12]");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  return StateVector(Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

std::size_t qubits_for_dimension(std::size_t dimension) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dimension) {
    ++n;
  }
  if ((std::size_t{1} << n) != dimension || n == 0 || n > kMaxQubits) {
    throw InvalidArgument("state dimension must be 2^n with 1 <= n <= 12");
  }
  return n;
}

std::string basis_label(std::size_t index, std::size_t qubits) {
  std::string s;
  for (std::size_t q = 0; q < qubits; ++q) {
    const bool down = (index >> (qubits - 1 - q)) & 1U;
    s += down ? "↓" : "↑";
  }
  return s;
}

std::string basis_label_ascii(std::size_t index, std::size_t qubits) {
  std::string s;
  for (std::size_t q = 0; q < qubits; ++q) {
    if (q) s += '_';
    s += ((index >> (qubits - 1 - q)) & 1U) ? "down" : "up";
  }
  return s;
}

std::string transverse_label(std::size_t index, std::size_t qubits) {
  std::string s;
  for (std::size_t q = 0; q < qubits; ++q) {
    s += ((index >> (qubits - 1 - q)) & 1U) ? '-' : '+';
  }
  return s;
}

std::string transverse_label_ascii(std::size_t index, std::size_t qubits) {
  std::string s;
  for (std::size_t q = 0; q < qubits; ++q) {
    if (q) s += '_';
    s += ((index >> (qubits - 1 - q)) & 1U) ? "minus" : "plus";
  }
  return s;
}

Eigen::VectorXcd to_transverse_basis(const Eigen::VectorXcd& amplitudes) {
  Eigen::VectorXcd v = amplitudes;
  const double r = 1.0 / std::sqrt(2.0);
  const auto dim = v.size();
  for (Eigen::Index stride = 1; stride < dim; stride <<= 1) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & stride) continue;
      const cplx a = v[i];
      const cplx b = v[i | stride];
      v[i] = r * (a + b);
      v[i | stride] = r * (a - b);
    }
  }
  return v;
}

}  // namespace annealgate
