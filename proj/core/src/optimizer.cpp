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
#include "bosdsl/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bosdsl/random.hpp"

namespace bosdsl {
namespace {

std::vector<bool> transmissivity_mask(const Circuit& circuit) {
  std::vector<bool> mask;
  for (const auto& g : circuit.gates()) {
    for (int k = 0; k < static_cast<int>(g.params.size()); ++k) {
      mask.push_back(gate_param_is_transmissivity(g.type, k));
    }
  }
  return mask;
}

void validate(const OptProblem& problem) {
  if (problem.pairs.empty()) throw ParameterError("optimization needs at least one pair");
  if (problem.n_train < 1) throw ParameterError("n_train must be positive");
  if (!(problem.step_size > 0.0) || !std::isfinite(problem.step_size)) {
    throw ParameterError("step size must be positive and finite");
  }
  const Circuit& c = problem.circuit_template;
  if (auto diag = check_structure(c); !diag.ok()) throw StaticError(std::move(diag));
  for (const auto& pair : problem.pairs) {
    if (auto diag = check_static(c, pair.input); !diag.ok()) throw StaticError(std::move(diag));
    if (pair.target.n_modes() != static_cast<std::size_t>(c.n_modes())) {
      throw DimensionError("target pmf over " + std::to_string(pair.target.n_modes()) +
                           " modes for a " + std::to_string(c.n_modes()) + "-mode circuit");
    }
  }
  if (problem.initial_params) {
    if (problem.initial_params->size() != c.n_params()) {
      throw ParameterError("initial parameters have the wrong length");
    }
    const auto mask = transmissivity_mask(c);
    for (std::size_t i = 0; i < mask.size(); ++i) {
      const double v = (*problem.initial_params)[i];
      if (!std::isfinite(v) || (mask[i] && (v < 0.0 || v > 1.0))) {
        throw ParameterError("initial parameter " + std::to_string(i) + " is out of range");
      }
    }
  }
}

}  // namespace

std::string_view objective_name(Objective objective) {
  return objective == Objective::TV ? "tv" : "l2";
}

std::optional<Objective> objective_from_name(std::string_view name) {
  if (name == "tv") return Objective::TV;
  if (name == "l2") return Objective::L2;
  return std::nullopt;
}

double objective_value(const OptProblem& problem, std::span<const double> params) {
  const Circuit c = problem.circuit_template.with_params(params);
  double total = 0.0;
  for (const auto& pair : problem.pairs) {
    const Pmf pmf = prob_fn(c, pair.input, problem.eval);
    total += problem.objective == Objective::TV ? distance_tv(pmf, pair.target)
                                                : distance_l2(pmf, pair.target);
  }
  return total;
}

std::vector<double> objective_gradient(const OptProblem& problem, std::span<const double> params,
                                       double h) {
  const auto mask = transmissivity_mask(problem.circuit_template);
  std::vector<double> grad(params.size());
  std::vector<double> probe(params.begin(), params.end());
  for (std::size_t i = 0; i < params.size(); ++i) {
    double hi = params[i] + h;
    double lo = params[i] - h;
    if (mask[i]) {
      hi = std::clamp(hi, 0.0, 1.0);
      lo = std::clamp(lo, 0.0, 1.0);
    }
    probe[i] = hi;
    const double f_hi = objective_value(problem, probe);
    probe[i] = lo;
    const double f_lo = objective_value(problem, probe);
    probe[i] = params[i];
    grad[i] = (f_hi - f_lo) / (hi - lo);
  }
  return grad;
}

std::vector<double> random_initial_params(const Circuit& circuit, std::uint64_t seed) {
  Xoshiro256StarStar rng(seed);
  const auto mask = transmissivity_mask(circuit);
  std::vector<double> params(mask.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] = mask[i] ? rng.uniform() : rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return params;
}

OptResult opt_config(const OptProblem& problem) {
  validate(problem);
  const Circuit& tmpl = problem.circuit_template;
  const auto mask = transmissivity_mask(tmpl);

  std::vector<double> params = problem.initial_params
                                   ? *problem.initial_params
                                   : random_initial_params(tmpl, problem.seed);
  std::vector<double> best_params = params;
  double best_loss = std::numeric_limits<double>::infinity();

  OptResult result;
  for (int it = 0; it < problem.n_train; ++it) {
    const bool last = it + 1 == problem.n_train;
    if (last && it > 0) params = best_params;

    const double loss = objective_value(problem, params);
    if (!std::isfinite(loss)) {
      throw NumericError("objective is not finite at iteration " + std::to_string(it));
    }
    result.loss_history.push_back(loss);
    result.config = tmpl.with_params(params);
    if (loss < best_loss) {
      best_loss = loss;
      best_params = params;
    }
    if (loss < kEarlyStopLoss || params.empty() || last) break;

    const auto grad = objective_gradient(problem, params);
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (!std::isfinite(grad[i])) {
        throw NumericError("gradient is not finite at iteration " + std::to_string(it));
      }
      params[i] -= problem.step_size * grad[i];
      if (mask[i]) params[i] = std::clamp(params[i], 0.0, 1.0);
    }
  }
  result.final_loss = result.loss_history.back();
  return result;
}

OptResult opt_structure(int n_modes, int n_gates_max, const std::vector<TrainingPair>& pairs,
                        int n_restarts, std::uint64_t seed, const StructureOptions& options) {
  if (n_modes < 2) throw ParameterError("structure search needs at least two modes");
  if (n_gates_max < 0) throw ParameterError("gate budget must be non-negative");
  if (n_restarts < 1) throw ParameterError("need at least one restart");
  if (options.gate_types.empty()) throw ParameterError("no gate types to place");

  std::optional<OptResult> best;
  for (int r = 0; r < n_restarts; ++r) {
    Xoshiro256StarStar rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    const int n_gates = n_gates_max - r % (n_gates_max + 1);
    std::vector<GateSpec> gates;
    for (int k = 0; k < n_gates; ++k) {
      GateSpec g;
      g.type = options.gate_types[rng.below(static_cast<std::uint32_t>(options.gate_types.size()))];
      const auto n = static_cast<std::uint32_t>(n_modes);
      const int a = static_cast<int>(rng.below(n));
      if (gate_mode_arity(g.type) == 1) {
        g.modes = {a};
      } else {
        int b = static_cast<int>(rng.below(n - 1));
        if (b >= a) ++b;
        g.modes = {a, b};
      }
      g.params.assign(static_cast<std::size_t>(gate_param_arity(g.type)), 0.0);
      gates.push_back(std::move(g));
    }

    OptProblem problem;
    problem.circuit_template = Circuit(n_modes, std::move(gates));
    problem.pairs = pairs;
    problem.n_train = options.n_train;
    problem.step_size = options.step_size;
    problem.seed = rng();
    problem.objective = options.objective;
    problem.eval = options.eval;

    OptResult candidate = opt_config(problem);
    if (!best || candidate.final_loss < best->final_loss) best = std::move(candidate);
  }
  return *best;
}

}  // namespace bosdsl
