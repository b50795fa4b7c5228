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

#include "annealgate/operators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "annealgate/errors.hpp"

namespace annealgate {

namespace {

void check_register(std::size_t qubits) {
  if (qubits == 0 || qubits > kMaxQubits) {
    throw InvalidArgument("register size " + std::to_string(qubits) + " outside [1, 12]");
  }
}

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

// Single-qubit product a*b = phase * result.
std::pair<cplx, Pauli> multiply(Pauli a, Pauli b) {
  const cplx i{0.0, 1.0};
  if (a == Pauli::I) return {1.0, b};
  if (b == Pauli::I) return {1.0, a};
  if (a == b) return {1.0, Pauli::I};
  if (a == Pauli::X && b == Pauli::Y) return {i, Pauli::Z};
  if (a == Pauli::Y && b == Pauli::Z) return {i, Pauli::X};
  if (a == Pauli::Z && b == Pauli::X) return {i, Pauli::Y};
  if (a == Pauli::Y && b == Pauli::X) return {-i, Pauli::Z};
  if (a == Pauli::Z && b == Pauli::Y) return {-i, Pauli::X};
  return {-i, Pauli::Y};  // X*Z
}

// Phase picked up by basis state |index> under the string (before the flip).
cplx basis_phase(const PauliString& s, std::size_t index) {
  const std::size_t n = s.qubit_count();
  cplx phase = s.coefficient();
  for (std::size_t q = 0; q < n; ++q) {
    const bool bit = (index >> (n - 1 - q)) & 1U;
    switch (s.factor(q)) {
      case Pauli::I:
      case Pauli::X:
        break;
      case Pauli::Y:
        phase *= bit ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
        break;
      case Pauli::Z:
        if (bit) phase = -phase;
        break;
    }
  }
  return phase;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

PauliString parse_key(std::string_view key, double coefficient, std::size_t qubits) {
  std::vector<Pauli> factors(qubits, Pauli::I);
  std::vector<bool> seen(qubits, false);
  key = trim(key);
  if (key.empty()) {
    throw ConfigError("empty Pauli term");
  }
  if (key == "I" || key == "1") {
    return PauliString(std::move(factors), coefficient);
  }
  std::size_t pos = 0;
  while (pos < key.size()) {
    while (pos < key.size() && (key[pos] == '*' || std::isspace(static_cast<unsigned char>(key[pos])))) ++pos;
    if (pos >= key.size()) break;
    Pauli p;
    switch (std::toupper(static_cast<unsigned char>(key[pos]))) {
      case 'I': p = Pauli::I; break;
      case 'X': p = Pauli::X; break;
      case 'Y': p = Pauli::Y; break;
      case 'Z': p = Pauli::Z; break;
      default:
        throw ConfigError("bad Pauli factor in '" + std::string(key) + "'");
    }
    ++pos;
    std::size_t qubit = 0;
    const auto [ptr, ec] = std::from_chars(key.data() + pos, key.data() + key.size(), qubit);
    if (ec != std::errc{} || qubit == 0 || qubit > qubits) {
      throw ConfigError("bad qubit index in '" + std::string(key) + "' (1-based, register of " +
                        std::to_string(qubits) + ")");
    }
    pos = static_cast<std::size_t>(ptr - key.data());
    if (seen[qubit - 1]) {
      throw ConfigError("qubit repeated in '" + std::string(key) + "'");
    }
    seen[qubit - 1] = true;
    factors[qubit - 1] = p;
  }
  return PauliString(std::move(factors), coefficient);
}

}  // namespace

// --- PauliString -----------------------------------------------------------

PauliString::PauliString(std::vector<Pauli> factors, double coefficient)
    : factors_(std::move(factors)), coefficient_(coefficient) {
  check_register(factors_.size());
  if (!std::isfinite(coefficient_)) {
    throw InvalidArgument("Pauli coefficient must be finite");
  }
}

PauliString PauliString::single(std::size_t qubits, std::size_t qubit, Pauli p, double coefficient) {
  check_register(qubits);
  if (qubit >= qubits) {
    throw InvalidArgument("qubit index out of range");
  }
  std::vector<Pauli> f(qubits, Pauli::I);
  f[qubit] = p;
  return PauliString(std::move(f), coefficient);
}

PauliString PauliString::identity(std::size_t qubits, double coefficient) {
  check_register(qubits);
  return PauliString(std::vector<Pauli>(qubits, Pauli::I), coefficient);
}

bool PauliString::is_diagonal() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](Pauli p) { return p == Pauli::I || p == Pauli::Z; });
}

std::size_t PauliString::flip_mask() const noexcept {
  const std::size_t n = factors_.size();
  std::size_t mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (factors_[q] == Pauli::X || factors_[q] == Pauli::Y) {
      mask |= std::size_t{1} << (n - 1 - q);
    }
  }
  return mask;
}

std::string PauliString::key() const {
  std::string s;
  for (std::size_t q = 0; q < factors_.size(); ++q) {
    if (factors_[q] == Pauli::I) continue;
    if (!s.empty()) s += '*';
    s += pauli_char(factors_[q]);
    s += std::to_string(q + 1);
  }
  return s.empty() ? "I" : s;
}

// --- PauliSum --------------------------------------------------------------

PauliSum::PauliSum(std::size_t qubits) : qubits_(qubits) { check_register(qubits); }

PauliSum::PauliSum(std::size_t qubits, std::vector<PauliString> terms) : qubits_(qubits), terms_(std::move(terms)) {
  check_register(qubits);
  for (const auto& t : terms_) {
    if (t.qubit_count() != qubits_) {
      throw InvalidArgument("Pauli term register size does not match the sum");
    }
  }
}

PauliSum PauliSum::identity(std::size_t qubits, double coefficient) {
  return PauliSum(qubits, {PauliString::identity(qubits, coefficient)});
}

PauliSum PauliSum::single(std::size_t qubits, std::size_t qubit, Pauli p, double coefficient) {
  return PauliSum(qubits, {PauliString::single(qubits, qubit, p, coefficient)});
}

PauliSum PauliSum::uniform_field(std::size_t qubits, Pauli p, double coefficient) {
  PauliSum out(qubits);
  for (std::size_t q = 0; q < qubits; ++q) {
    out.terms_.push_back(PauliString::single(qubits, q, p, coefficient));
  }
  return out;
}

bool PauliSum::is_diagonal() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const PauliString& t) { return t.is_diagonal(); });
}

PauliSum PauliSum::simplified() const {
  std::map<std::vector<Pauli>, double> merged;
  for (const auto& t : terms_) {
    merged[t.factors()] += t.coefficient();
  }
  PauliSum out(qubits_);
  for (const auto& [factors, c] : merged) {
    if (c != 0.0) {
      out.terms_.emplace_back(factors, c);
    }
  }
  return out;
}

PauliSum PauliSum::embedded(std::size_t register_size, const std::vector<std::size_t>& placement) const {
  check_register(register_size);
  if (placement.size() != qubits_) {
    throw InvalidArgument("placement must name one target qubit per operator qubit");
  }
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (placement[i] >= register_size) {
      throw InvalidArgument("placement target out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (placement[i] == placement[j]) throw InvalidArgument("placement targets must be distinct");
    }
  }
  PauliSum out(register_size);
  for (const auto& t : terms_) {
    std::vector<Pauli> f(register_size, Pauli::I);
    for (std::size_t q = 0; q < qubits_; ++q) {
      f[placement[q]] = t.factor(q);
    }
    out.terms_.emplace_back(std::move(f), t.coefficient());
  }
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  if (rhs.qubits_ != qubits_) {
    throw InvalidArgument("cannot add Pauli sums on different register sizes");
  }
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  for (auto& t : terms_) {
    t = PauliString(t.factors(), t.coefficient() * scale);
  }
  return *this;
}

PauliSum operator*(const PauliSum& lhs, const PauliSum& rhs) {
  if (lhs.qubits_ != rhs.qubits_) {
    throw InvalidArgument("cannot multiply Pauli sums on different register sizes");
  }
  std::map<std::vector<Pauli>, cplx> acc;
  double scale = 0.0;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      cplx phase = a.coefficient() * b.coefficient();
      std::vector<Pauli> f(lhs.qubits_);
      for (std::size_t q = 0; q < lhs.qubits_; ++q) {
        const auto [ph, p] = multiply(a.factor(q), b.factor(q));
        phase *= ph;
        f[q] = p;
      }
      acc[f] += phase;
      scale = std::max(scale, std::abs(phase));
    }
  }
  PauliSum out(lhs.qubits_);
  for (const auto& [f, c] : acc) {
    if (std::abs(c.imag()) > 1e-12 * std::max(1.0, scale)) {
      throw InvalidArgument("operator product is not Hermitian");
    }
    if (c.real() != 0.0) {
      out.terms_.emplace_back(f, c.real());
    }
  }
  return out;
}

std::string PauliSum::to_string() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << "; ";
    first = false;
    os << t.key() << ": " << t.coefficient();
  }
  return os.str();
}

// --- CompiledOperator ------------------------------------------------------

CompiledOperator::CompiledOperator(const PauliSum& op) : dim_(std::size_t{1} << op.qubit_count()) {
  std::map<std::size_t, std::size_t> index_of_mask;
  for (const auto& t : op.terms()) {
    const std::size_t mask = t.flip_mask();
    auto [it, inserted] = index_of_mask.try_emplace(mask, groups_.size());
    if (inserted) {
      groups_.push_back(Group{mask, std::vector<cplx>(dim_, cplx{0.0, 0.0})});
    }
    auto& w = groups_[it->second].weights;
    for (std::size_t b = 0; b < dim_; ++b) {
      w[b] += basis_phase(t, b);
    }
  }
}

void CompiledOperator::apply_add(const cplx* in, cplx* out, double scale) const {
  if (scale == 0.0) return;
  for (const auto& g : groups_) {
    const cplx* w = g.weights.data();
    const std::size_t m = g.mask;
    for (std::size_t b = 0; b < dim_; ++b) {
      out[b ^ m] += scale * (w[b] * in[b]);
    }
  }
}

// --- dense algebra ---------------------------------------------------------

Eigen::MatrixXcd build_matrix(const PauliSum& op) {
  check_register(op.qubit_count());
  for (const auto& t : op.terms()) {
    if (!std::isfinite(t.coefficient())) throw InvalidArgument("non-finite coefficient");
  }
  const CompiledOperator compiled(op);
  const auto dim = static_cast<Eigen::Index>(compiled.dimension());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& g : compiled.groups()) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      m(b ^ static_cast<Eigen::Index>(g.mask), b) += g.weights[static_cast<std::size_t>(b)];
    }
  }
  return m;
}

Spectrum eigen_decompose(const PauliSum& op, double tol) {
  const Eigen::MatrixXcd m = build_matrix(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success || !solver.eigenvalues().allFinite()) {
    throw NumericalError("Hermitian eigensolver failed");
  }
  Spectrum s;
  s.degeneracy_tolerance = tol;
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    Eigen::VectorXcd v = vectors.col(k);
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      // first index wins ties up to rounding
      if (std::abs(v[i]) > best + 1e-12) {
        best = std::abs(v[i]);
        pivot = i;
      }
    }
    v *= std::conj(v[pivot]) / std::abs(v[pivot]);
    v[pivot] = std::abs(v[pivot]);
    s.eigenvalues.push_back(values[k]);
    s.eigenvectors.emplace_back(v.normalized());
  }
  const double e0 = s.eigenvalues.front();
  s.ground_degeneracy = static_cast<std::size_t>(
      std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [&](double e) { return e - e0 <= tol; }));
  return s;
}

std::vector<StateVector> ground_space(const PauliSum& op, double tol) {
  Spectrum s = eigen_decompose(op, tol);
  s.eigenvectors.resize(s.ground_degeneracy, s.eigenvectors.front());
  return std::move(s.eigenvectors);
}

// --- parsing ---------------------------------------------------------------

PauliSum parse_pauli_sum(std::string_view text, std::size_t qubits) {
  check_register(qubits);
  PauliSum out(qubits);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";,\n", start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("Pauli term '" + std::string(item) + "' is missing ': coefficient'");
    }
    const std::string coeff_text(trim(item.substr(colon + 1)));
    double c = 0.0;
    try {
      std::size_t used = 0;
      c = std::stod(coeff_text, &used);
      if (used != coeff_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("bad coefficient '" + coeff_text + "'");
    }
    out += PauliSum(qubits, {parse_key(item.substr(0, colon), c, qubits)});
  }
  return out;
}

PauliSum pauli_sum_from_terms(const std::vector<std::pair<std::string, double>>& terms, std::size_t qubits) {
  check_register(qubits);
  PauliSum out(qubits);
  for (const auto& [key, c] : terms) {
    out += PauliSum(qubits, {parse_key(key, c, qubits)});
  }
  return out;
}

}  // namespace annealgate
