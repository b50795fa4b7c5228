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

#include "annealgate/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include "annealgate/errors.hpp"
#include "annealgate/gates.hpp"
#include "annealgate/harness/dwave.hpp"
#include "annealgate/perturbation.hpp"
#include "json.hpp"

#ifndef ANNEALGATE_VERSION
#define ANNEALGATE_VERSION "unknown"
#endif

namespace annealgate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_dwave(ExperimentKind k) { return k == ExperimentKind::DWaveXRotation || k == ExperimentKind::DWaveCnot; }

std::vector<double> squared(const Eigen::VectorXcd& v) {
  std::vector<double> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = std::norm(v[i]);
  return out;
}

double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = std::abs(x[i] - y[i]);
    if (std::isnan(d)) return kNaN;
    worst = std::max(worst, d);
  }
  return worst;
}

// Adiabatic prediction for the forward part (computational populations) and
// the reverse part (transverse populations).
struct GateOracle {
  std::vector<double> forward;
  std::vector<double> reverse;
};

GateOracle gate_oracle(const GatePipeline& p, const StateVector& psi0) {
  const std::size_t dim = psi0.dimension();
  GateOracle o{std::vector<double>(dim, kNaN), std::vector<double>(dim, kNaN)};
  const ControlSchedule fwd = p.forward_schedule();
  const ControlSchedule rev = p.reverse_schedule();
  const auto rank = eigenstate_rank(sample(fwd, 0.0), psi0);
  if (!rank) return o;
  const StateVector end = adiabatic_end_state(fwd, *rank);
  o.forward = squared(end.amplitudes());

  // The problem swap keeps computational populations; each basis state then
  // follows its own eigenstate of H~_P through the reverse part.
  std::vector<double> reverse(dim, 0.0);
  const PauliSum rev_start = sample(rev, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    if (o.forward[j] == 0.0) continue;
    const auto r = eigenstate_rank(rev_start, StateVector::basis(psi0.qubit_count(), j));
    if (!r) return o;
    const StateVector out = adiabatic_end_state(rev, *r);
    const std::vector<double> t = squared(to_transverse_basis(out.amplitudes()));
    for (std::size_t k = 0; k < dim; ++k) reverse[k] += o.forward[j] * t[k];
  }
  o.reverse = std::move(reverse);
  return o;
}

std::vector<double> gate_point(const ExperimentConfig& cfg, double h_z, double T, const std::string& label,
                               double& drift) {
  const StateVector psi0 = StateVector::from_label(label);
  const GatePipeline p = cfg.kind == ExperimentKind::XRotation
                             ? x_rotation_pipeline(h_z, T)
                             : cnot_pipeline(cfg.a, cfg.b, h_z, T, cfg.catalytic);
  const PipelineReport run = run_pipeline(p, psi0, cfg.dt);
  drift = run.norm_drift();
  const std::vector<double> fwd = populations(run.forward.final_state).values;
  const std::vector<double> rev = transverse_populations(run.final_state()).values;
  GateOracle o;
  try {
    o = gate_oracle(p, psi0);
  } catch (const InvalidArgument&) {
    o = {std::vector<double>(fwd.size(), kNaN), std::vector<double>(fwd.size(), kNaN)};
  }
  std::vector<double> v;
  v.insert(v.end(), fwd.begin(), fwd.end());
  v.insert(v.end(), rev.begin(), rev.end());
  v.insert(v.end(), o.forward.begin(), o.forward.end());
  v.insert(v.end(), o.reverse.begin(), o.reverse.end());
  v.push_back(std::max(max_abs_diff(fwd, o.forward), max_abs_diff(rev, o.reverse)));
  return v;
}

std::vector<double> dwave_point(const ExperimentConfig& cfg, double h_z, double T, std::uint64_t seed,
                                double& drift) {
  const bool xrot = cfg.kind == ExperimentKind::DWaveXRotation;
  const DWaveProblem problem = xrot ? dwave_xrot_problem(h_z, T, cfg.shots) : dwave_cnot_problem(h_z, T, cfg.shots);
  const DWaveRun run = emulate_dwave(problem, seed, cfg.dt);
  drift = run.norm_drift;
  std::vector<double> closed;
  if (xrot) {
    const XRotationPopulations x = xrot_populations(h_z);
    closed = {x.up_minus, x.down_minus};
  } else {
    const CnotPopulations c = cnot_populations(0.3, h_z);
    closed = {0.0, 0.0, c.c2_minus, c.c1_minus};
  }
  std::vector<double> adiabatic(run.populations.size(), kNaN);
  try {
    adiabatic = squared(adiabatic_end_state(dwave(problem.schedule(), T), 0).amplitudes());
  } catch (const InvalidArgument&) {
  }
  std::vector<double> v = run.populations.values;
  for (std::size_t c : run.counts.values) v.push_back(static_cast<double>(c));
  v.insert(v.end(), closed.begin(), closed.end());
  v.insert(v.end(), adiabatic.begin(), adiabatic.end());
  v.push_back(max_abs_diff(run.populations.values, closed));
  return v;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string library_version() { return ANNEALGATE_VERSION; }

double SweepRow::value(const std::vector<std::string>& columns, const std::string& column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) throw std::out_of_range("no sweep column '" + column + "'");
  return values.at(static_cast<std::size_t>(it - columns.begin()));
}

std::vector<std::string> sweep_columns(ExperimentKind kind, std::size_t qubits) {
  const std::size_t dim = std::size_t{1} << qubits;
  std::vector<std::string> cols;
  auto add = [&](const std::string& prefix, bool transverse, const std::string& suffix) {
    for (std::size_t i = 0; i < dim; ++i) {
      cols.push_back(prefix + (transverse ? transverse_label_ascii(i, qubits) : basis_label_ascii(i, qubits)) +
                     suffix);
    }
  };
  if (is_dwave(kind)) {
    add("pop_", false, "_forward");
    add("count_", false, "");
    add("oracle_", false, "_forward");
    add("adiabatic_", false, "_forward");
  } else {
    add("pop_", false, "_forward");
    add("pop_", true, "_reverse");
    add("oracle_", false, "_forward");
    add("oracle_", true, "_reverse");
  }
  cols.push_back("max_deviation");
  return cols;
}

SweepResult run_sweep(const ExperimentConfig& cfg, const SweepProgress& progress) {
  cfg.validate();
  SweepResult result;
  result.experiment = cfg.name;
  result.kind = cfg.kind;
  result.columns = sweep_columns(cfg.kind, cfg.qubit_count());
  result.dt = cfg.dt;
  result.version = library_version();
  result.timestamp = utc_timestamp();

  for (double h : cfg.h_z) {
    for (double T : cfg.T) {
      for (const auto& s : cfg.initial_states) result.rows.push_back(SweepRow{h, T, s, {}, {}, 0.0});
    }
  }

  const std::size_t total = result.rows.size();
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      SweepRow& row = result.rows[i];
      try {
        row.values = is_dwave(cfg.kind) ? dwave_point(cfg, row.h_z, row.T, cfg.seed + i, row.norm_drift)
                                        : gate_point(cfg, row.h_z, row.T, row.initial_state, row.norm_drift);
      } catch (const std::exception& e) {
        row.values.assign(result.columns.size(), kNaN);
        row.error = e.what();
      }
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(++done, total);
      }
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

std::string to_csv(const SweepResult& r) {
  std::string out = "h_z,T,initial_state";
  for (const auto& c : r.columns) out += "," + c;
  out += '\n';
  for (const SweepRow& row : r.rows) {
    out += format_number(row.h_z) + "," + format_number(row.T) + "," + row.initial_state;
    for (double v : row.values) out += "," + format_number(v);
    out += '\n';
  }
  return out;
}

void emit_csv(const SweepResult& r, const std::filesystem::path& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << to_csv(r);
    if (!out) throw ConfigError("failed writing " + path.string());
  }
  nlohmann::json meta;
  meta["experiment"] = r.experiment;
  meta["kind"] = std::string(to_string(r.kind));
  meta["dt"] = r.dt;
  meta["version"] = r.version;
  meta["timestamp"] = r.timestamp;
  meta["rows"] = r.rows.size();
  nlohmann::json errors = nlohmann::json::array();
  double worst_drift = 0.0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    worst_drift = std::max(worst_drift, r.rows[i].norm_drift);
    if (!r.rows[i].error.empty()) errors.push_back({{"row", i}, {"error", r.rows[i].error}});
  }
  meta["max_norm_drift"] = worst_drift;
  meta["errors"] = errors;
  const std::filesystem::path meta_path = path.string() + ".meta.json";
  std::ofstream out(meta_path);
  if (!out) throw ConfigError("cannot write " + meta_path.string());
  out << meta.dump(2) << '\n';
  if (!out) throw ConfigError("failed writing " + meta_path.string());
}

}  // namespace annealgate
