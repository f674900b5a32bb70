// Copyright 2026 The bosdsl Authors
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
#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bosdsl/circuit.hpp"
#include "bosdsl/dsl_io.hpp"
#include "bosdsl/engine.hpp"
#include "bosdsl/optimizer.hpp"
#include "bosdsl/sampler.hpp"

namespace bosdsl::cli {
namespace {

constexpr std::size_t kReportRows = 10;

class FileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  out << contents;
  if (!out) throw FileError("failed writing " + path);
}

struct Settings {
  std::string circuit_path;
  std::string input_path;
  std::string pairs_path;
  std::string out_path;
  std::string trace_path;
  double threshold = 0.0;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t shots = 1000;
  std::uint64_t seed = kDefaultSeed;
  int iters = 500;
  double step = 0.2;
  std::string objective = "tv";
  bool warm_start = false;
  int modes = 2;
  int max_gates = 2;
  int restarts = 8;
};

EvalOptions eval_options(const Settings& s) { return {s.threshold, s.enumeration_cap}; }

void print_pmf_report(const Pmf& pmf, std::ostream& out) {
  std::vector<std::pair<FockState, double>> rows(pmf.begin(), pmf.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::size_t shown = std::min(rows.size(), kReportRows);
  out << "states: " << rows.size() << " (showing " << shown << ")\n";
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  " << rows[i].first.str() << "  " << format_real(rows[i].second) << '\n';
  }
  out << "retained_mass: " << format_real(pmf.total()) << '\n';
}

void emit_optimization(const OptResult& result, const Settings& s, std::ostream& out) {
  if (!s.trace_path.empty()) write_file(s.trace_path, serialize_trace(result.loss_history));
  const std::string learned = serialize_circuit(result.config);
  if (!s.out_path.empty()) {
    write_file(s.out_path, learned);
  } else {
    out << learned;
  }
  out << "iterations: " << result.loss_history.size() << '\n';
  out << "final_loss: " << format_real(result.final_loss) << '\n';
}

int cmd_check(const Settings& s, std::ostream& out) {
  const Circuit circuit = fuse_circuit_document(parse_circuit_document(read_file(s.circuit_path)));
  const FockState input = parse_input(read_file(s.input_path));
  const StaticDiagnostics diag = check_static(circuit, input);
  if (diag.ok()) {
    out << "OK\n";
    return kOk;
  }
  out << diag.str();
  return kSemanticError;
}

int cmd_eval(const Settings& s, std::ostream& out) {
  const Circuit circuit = parse_circuit(read_file(s.circuit_path));
  const FockState input = parse_input(read_file(s.input_path));
  const Pmf pmf = prob_fn(circuit, input, eval_options(s));
  if (!s.out_path.empty()) write_file(s.out_path, serialize_pmf(pmf));
  print_pmf_report(pmf, out);
  return kOk;
}

int cmd_sample(const Settings& s, std::ostream& out) {
  const Circuit circuit = parse_circuit(read_file(s.circuit_path));
  const FockState input = parse_input(read_file(s.input_path));
  const Pmf pmf = prob_fn(circuit, input, eval_options(s));
  const ShotRecord record = sample(pmf, s.shots, s.seed);
  const std::string text = serialize_shots(record);
  if (s.out_path.empty()) {
    out << text;
  } else {
    write_file(s.out_path, text);
    out << "shots: " << record.n_shots << "\nseed: " << record.seed << '\n';
  }
  return kOk;
}

int cmd_optimize(const Settings& s, std::ostream& out) {
  OptProblem problem;
  problem.circuit_template = parse_circuit(read_file(s.circuit_path));
  problem.pairs = parse_pairs(read_file(s.pairs_path));
  problem.n_train = s.iters;
  problem.step_size = s.step;
  problem.seed = s.seed;
  problem.objective = *objective_from_name(s.objective);
  problem.eval = eval_options(s);
  if (s.warm_start) problem.initial_params = problem.circuit_template.params();
  emit_optimization(opt_config(problem), s, out);
  return kOk;
}

int cmd_optimize_structure(const Settings& s, std::ostream& out) {
  const auto pairs = parse_pairs(read_file(s.pairs_path));
  StructureOptions options;
  options.n_train = s.iters;
  options.step_size = s.step;
  options.objective = *objective_from_name(s.objective);
  options.eval = eval_options(s);
  emit_optimization(opt_structure(s.modes, s.max_gates, pairs, s.restarts, s.seed, options), s,
                    out);
  return kOk;
}

const auto kThresholdRange = CLI::Validator(
    [](std::string& value) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(value, v) || !(v >= 0.0 && v < 1.0)) {
        return "threshold must lie in [0, 1)";
      }
      return {};
    },
    "in [0, 1)");

const auto kObjectiveNames = CLI::IsMember({"tv", "l2"});

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate, sample and train linear-optical interferometer circuits", "bosdsl"};
  app.require_subcommand(1);
  Settings s;
  std::function<int(const Settings&, std::ostream&)> action;

  auto add_eval_flags = [&s](CLI::App* cmd) {
    cmd->add_option("--threshold", s.threshold, "Drop output states below this probability")
        ->check(kThresholdRange);
    cmd->add_option("--cap", s.enumeration_cap, "Largest output basis to enumerate")
        ->check(CLI::PositiveNumber);
  };
  auto add_train_flags = [&s](CLI::App* cmd) {
    cmd->add_option("--iters", s.iters, "Iteration budget (NTrain)")->check(CLI::PositiveNumber);
    cmd->add_option("--step", s.step, "Gradient step size")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", s.seed, "Random seed");
    cmd->add_option("--objective", s.objective, "tv or l2")->check(kObjectiveNames);
    cmd->add_option("--out", s.out_path, "Write the learned circuit here (.bosc)");
    cmd->add_option("--trace", s.trace_path, "Write an iteration,loss CSV here");
  };

  auto* check = app.add_subcommand("check", "Run the static checks on a circuit and input");
  check->add_option("circuit", s.circuit_path, "Circuit file (.bosc)")->required();
  check->add_option("input", s.input_path, "Input file (.bosin)")->required();
  check->callback([&] { action = cmd_check; });

  auto* eval = app.add_subcommand("eval", "Compute the output pmf");
  eval->add_option("circuit", s.circuit_path, "Circuit file (.bosc)")->required();
  eval->add_option("input", s.input_path, "Input file (.bosin)")->required();
  eval->add_option("--out", s.out_path, "Write the pmf here (.bospmf)");
  add_eval_flags(eval);
  eval->callback([&] { action = cmd_eval; });

  auto* sample_cmd = app.add_subcommand("sample", "Draw detection shots from the output pmf");
  sample_cmd->add_option("circuit", s.circuit_path, "Circuit file (.bosc)")->required();
  sample_cmd->add_option("input", s.input_path, "Input file (.bosin)")->required();
  sample_cmd->add_option("--shots", s.shots, "Number of shots")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", s.seed, "Random seed");
  sample_cmd->add_option("--out", s.out_path, "Write shots here (.boshots)");
  add_eval_flags(sample_cmd);
  sample_cmd->callback([&] { action = cmd_sample; });

  auto* optimize = app.add_subcommand("optimize", "Learn gate parameters for target pmfs");
  optimize->add_option("circuit", s.circuit_path, "Template circuit (.bosc)")->required();
  optimize->add_option("pairs", s.pairs_path, "Input/target pairs (JSON)")->required();
  optimize->add_flag("--warm-start", s.warm_start,
                     "Start from the template's parameters instead of random ones");
  add_train_flags(optimize);
  add_eval_flags(optimize);
  optimize->callback([&] { action = cmd_optimize; });

  auto* structure =
      app.add_subcommand("optimize-structure", "Search gate placements and parameters");
  structure->add_option("pairs", s.pairs_path, "Input/target pairs (JSON)")->required();
  structure->add_option("--modes", s.modes, "Observed mode count")->check(CLI::Range(2, 64));
  structure->add_option("--max-gates", s.max_gates, "Largest gate count to try")
      ->check(CLI::NonNegativeNumber);
  structure->add_option("--restarts", s.restarts, "Random restarts")->check(CLI::PositiveNumber);
  add_train_flags(structure);
  add_eval_flags(structure);
  structure->callback([&] { action = cmd_optimize_structure; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    return action(s, out);
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DslError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const StaticError& e) {
    err << e.diagnostics().str();
    return kSemanticError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticError;
  }
}

}  // namespace bosdsl::cli
