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

// Command-line front end: simulate, sweep, spectrum, reproduce, calibrate,
// export-dwave, emulate-dwave.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "annealgate/errors.hpp"
#include "annealgate/gates.hpp"
#include "annealgate/harness/config.hpp"
#include "annealgate/harness/dwave.hpp"
#include "annealgate/harness/spectrum_report.hpp"
#include "annealgate/harness/sweep.hpp"

namespace ag = annealgate;

namespace {

void print_populations(const std::string& title, const ag::Populations& p) {
  std::printf("%s\n", title.c_str());
  for (std::size_t i = 0; i < p.size(); ++i) std::printf("  |%s⟩  %.8f\n", p.labels[i].c_str(), p.values[i]);
}

void print_progress(std::size_t done, std::size_t total) {
  std::fprintf(stderr, "\r  %zu/%zu points", done, total);
  if (done == total) std::fprintf(stderr, "\n");
}

int run_and_write(const ag::ExperimentConfig& cfg, const std::filesystem::path& output, bool quiet) {
  const ag::SweepResult r = ag::run_sweep(cfg, quiet ? ag::SweepProgress{} : ag::SweepProgress{print_progress});
  ag::emit_csv(r, output);
  std::size_t failed = 0;
  for (const auto& row : r.rows) failed += row.error.empty() ? 0 : 1;
  std::printf("%s: %zu rows -> %s", cfg.name.c_str(), r.rows.size(), output.string().c_str());
  if (failed) std::printf(" (%zu failed, see %s.meta.json)", failed, output.string().c_str());
  std::printf("\n");
  return failed ? 3 : 0;
}

ag::CatalyticField parse_catalytic(const std::string& s) {
  if (s == "uniform") return ag::CatalyticField::Uniform;
  if (s == "inhomogeneous") return ag::CatalyticField::Inhomogeneous;
  throw ag::ConfigError("catalytic must be 'uniform' or 'inhomogeneous'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate synthesis with transverse-field Ising anneals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ag::library_version());

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run one gate, or a gate program, and print populations");
  std::string gate = "x_rotation";
  std::string initial;
  std::string catalytic = "uniform";
  std::string program_path;
  double h_z = 0.0;
  double T = 2000.0;
  double dt = ag::kDefaultDt;
  double a = 0.3;
  double b = 0.5;
  sim->add_option("--gate", gate, "x_rotation or cnot")->check(CLI::IsMember({"x_rotation", "cnot"}));
  sim->add_option("--h-z", h_z, "Catalytic amplitude");
  sim->add_option("--T", T, "Anneal time per part");
  sim->add_option("--dt", dt, "Integrator step");
  sim->add_option("--a", a, "Controlled-not problem parameter a");
  sim->add_option("--b", b, "Controlled-not modified problem parameter b");
  sim->add_option("--catalytic", catalytic, "uniform or inhomogeneous");
  sim->add_option("--initial", initial, "Initial state label, e.g. + or +-");
  sim->add_option("--program", program_path, "YAML gate program to run instead of a single gate");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a configured parameter sweep and write CSV");
  std::string config_path;
  std::string output;
  std::size_t threads = 0;
  bool quiet = false;
  sweep->add_option("config", config_path, "Experiment YAML")->required()->check(CLI::ExistingFile);
  sweep->add_option("-o,--output", output, "CSV path (default: the config's output)");
  sweep->add_option("-j,--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_flag("-q,--quiet", quiet, "No progress output");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Run a built-in experiment");
  std::string preset_name;
  std::string out_dir = ".";
  repro->add_option("name", preset_name, "Experiment name")->required()->check(CLI::IsMember(ag::preset_names()));
  repro->add_option("-d,--out-dir", out_dir, "Directory for the CSV");
  repro->add_option("-j,--threads", threads, "Worker threads (0 = all cores)");
  repro->add_flag("-q,--quiet", quiet, "No progress output");
  bool dump_config = false;
  repro->add_flag("--print-config", dump_config, "Print the experiment YAML and exit");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Print energy levels of an operator");
  std::string terms;
  std::size_t qubits = 1;
  std::string op_path;
  spec->add_option("--terms", terms, "Pauli terms, e.g. 'Z1*Z2: 0.3; Z1: 1; Z2: 0.3; I: 1'");
  spec->add_option("-n,--qubits", qubits, "Register size for --terms");
  spec->add_option("--file", op_path, "Operator YAML {qubits, terms}")->check(CLI::ExistingFile);

  // calibrate
  auto* cal = app.add_subcommand("calibrate", "Measure the relative phase a gate leaves behind");
  cal->add_option("--gate", gate, "x_rotation or cnot")->check(CLI::IsMember({"x_rotation", "cnot"}));
  cal->add_option("--h-z", h_z, "Catalytic amplitude");
  cal->add_option("--T", T, "Anneal time per part");
  cal->add_option("--dt", dt, "Integrator step");
  cal->add_option("--a", a, "Controlled-not problem parameter a");
  cal->add_option("--b", b, "Controlled-not modified problem parameter b");
  cal->add_option("--catalytic", catalytic, "uniform or inhomogeneous");

  // export-dwave
  auto* exp = app.add_subcommand("export-dwave", "Write a D-Wave problem document");
  std::string problem = "xrot";
  std::size_t reads = 2000;
  double anneal_time = 200.0;
  exp->add_option("--problem", problem, "xrot or cnot")->check(CLI::IsMember({"xrot", "cnot"}));
  exp->add_option("--h-z", h_z, "Catalytic amplitude");
  exp->add_option("--T", anneal_time, "Annealing time");
  exp->add_option("--reads", reads, "Number of reads");
  exp->add_option("-o,--output", output, "JSON path (default: stdout)");

  // emulate-dwave
  auto* emu = app.add_subcommand("emulate-dwave", "Emulate a D-Wave problem document");
  std::string input;
  std::uint64_t seed = 1;
  emu->add_option("input", input, "Problem JSON")->required()->check(CLI::ExistingFile);
  emu->add_option("--seed", seed, "Sampling seed");
  emu->add_option("--dt", dt, "Integrator step");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      if (!program_path.empty()) {
        const ag::GateProgram prog = ag::load_program(program_path);
        const ag::StateVector psi0 =
            initial.empty() ? ag::StateVector::all_plus(prog.qubits) : ag::StateVector::from_label(initial);
        const ag::EvolutionReport r = ag::run_program(prog, psi0, dt);
        print_populations("computational basis", ag::populations(r.final_state));
        print_populations("transverse basis", ag::transverse_populations(r.final_state));
        std::printf("norm drift %.3e over %zu steps\n", r.norm_drift, r.steps);
        return 0;
      }
      const bool is_cnot = gate == "cnot";
      const ag::StateVector psi0 =
          ag::StateVector::from_label(initial.empty() ? std::string(is_cnot ? "++" : "+") : initial);
      const ag::PipelineReport r = is_cnot ? ag::cnot(a, b, h_z, T, dt, psi0, parse_catalytic(catalytic))
                                           : ag::x_rotation(h_z, T, dt, psi0);
      print_populations("after forward part", ag::populations(r.forward.final_state));
      print_populations("after reverse part", ag::transverse_populations(r.final_state()));
      std::printf("norm drift %.3e over %zu steps\n", r.norm_drift(), r.steps());
      return 0;
    }
    if (*sweep) {
      ag::ExperimentConfig cfg = ag::load_experiment(config_path);
      if (threads) cfg.threads = threads;
      const std::filesystem::path path = output.empty() ? cfg.output : std::filesystem::path(output);
      if (path.empty()) throw ag::ConfigError("no output path: pass --output or set 'output' in the config");
      return run_and_write(cfg, path, quiet);
    }
    if (*repro) {
      ag::ExperimentConfig cfg = ag::preset(preset_name);
      if (dump_config) {
        std::cout << ag::experiment_to_yaml(cfg);
        return 0;
      }
      if (threads) cfg.threads = threads;
      std::filesystem::create_directories(out_dir);
      return run_and_write(cfg, std::filesystem::path(out_dir) / cfg.output, quiet);
    }
    if (*spec) {
      const ag::PauliSum h = !op_path.empty() ? ag::load_operator(op_path) : ag::parse_pauli_sum(terms, qubits);
      std::cout << ag::spectrum_report(h).to_text();
      return 0;
    }
    if (*cal) {
      ag::GateSpec g;
      g.kind = gate == "cnot" ? ag::GateKind::ControlledNot : ag::GateKind::XRotation;
      g.h_z = h_z;
      g.T = T;
      g.a = a;
      g.b = b;
      g.catalytic = parse_catalytic(catalytic);
      const ag::PhaseCalibration c = ag::calibrate_relative_phase(g, dt);
      std::printf("theta'        %+.10f rad\n", c.theta);
      std::printf("compensation  %.10f (idle-frame z_rotation angle)\n", c.compensation);
      for (const auto& [label, phase] : c.basis_phases) {
        std::printf("  arg |%s⟩ - arg |%s⟩  %+.10f\n", label.c_str(), c.basis_phases.front().first.c_str(), phase);
      }
      std::printf("method: %s\n", c.method.c_str());
      return 0;
    }
    if (*exp) {
      const ag::DWaveProblem p = problem == "cnot" ? ag::dwave_cnot_problem(h_z, anneal_time, reads)
                                                   : ag::dwave_xrot_problem(h_z, anneal_time, reads);
      if (output.empty()) {
        std::cout << ag::dwave_to_json(p) << '\n';
      } else {
        ag::export_dwave(p, output);
      }
      return 0;
    }
    if (*emu) {
      const ag::DWaveProblem p = ag::import_dwave(input);
      const ag::DWaveRun r = ag::emulate_dwave(p, seed, dt);
      std::printf("%-8s %10s %8s\n", "state", "population", "count");
      for (std::size_t i = 0; i < r.populations.size(); ++i) {
        std::printf("|%s⟩ %12.6f %8zu\n", r.populations.labels[i].c_str(), r.populations.values[i],
                    r.counts.values[i]);
      }
      std::printf("norm drift %.3e\n", r.norm_drift);
      return 0;
    }
  } catch (const ag::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
