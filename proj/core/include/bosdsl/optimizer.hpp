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
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bosdsl/circuit.hpp"
#include "bosdsl/engine.hpp"

namespace bosdsl {

enum class Objective {
  TV,  ///< total variation distance
  L2,  ///< sum of squared probability differences
};

std::string_view objective_name(Objective objective);
std::optional<Objective> objective_from_name(std::string_view name);

/// One input and the pmf the circuit should produce for it.
struct TrainingPair {
  FockState input;
  Pmf target;
};

inline constexpr double kFiniteDifferenceStep = 1e-4;
inline constexpr double kEarlyStopLoss = 1e-6;

struct OptProblem {
  /// Gate types and positions are fixed; the parameters are what is learned.
  Circuit circuit_template;
  std::vector<TrainingPair> pairs;
  int n_train = 200;
  double step_size = 0.2;
  std::uint64_t seed = 0;
  Objective objective = Objective::TV;
  /// Overrides the seeded random start when set (layout as Circuit::params()).
  std::optional<std::vector<double>> initial_params;
  EvalOptions eval;
};

struct OptResult {
  Circuit config;
  std::vector<double> loss_history;
  double final_loss = 0.0;
};

/// Σ over pairs of D(prob_fn(template with params, input), target).
double objective_value(const OptProblem& problem, std::span<const double> params);

/// Central-difference gradient of objective_value with step h. Transmissivity
/// coordinates are clamped to [0, 1], so at a boundary the difference is
/// one-sided over the clamped interval.
std::vector<double> objective_gradient(const OptProblem& problem, std::span<const double> params,
                                       double h = kFiniteDifferenceStep);

/// Angles uniform on [0, 2π), transmissivities uniform on [0, 1].
std::vector<double> random_initial_params(const Circuit& circuit, std::uint64_t seed);

/// Fixed-step gradient descent on the summed objective.
///
/// Each iteration evaluates the objective at the current parameters, records
/// it in loss_history, and takes one step; transmissivities are clamped after
/// every step. The loop stops early once the loss falls below
/// kEarlyStopLoss. When the iteration budget runs out, the final evaluation
/// is made at the best parameters seen so far, so final_loss is both the last
/// history entry and the minimum of the history, and config always holds the
/// parameters that produced final_loss.
///
/// Throws ParameterError on an ill-formed problem, StaticError if any pair
/// fails the static rules, NumericError on a non-finite objective.
OptResult opt_config(const OptProblem& problem);

struct StructureOptions {
  int n_train = 100;
  double step_size = 0.2;
  Objective objective = Objective::TV;
  /// Gate types the search may place.
  std::vector<GateType> gate_types{GateType::MG};
  EvalOptions eval;
};

/// Random-restart search over gate counts and positions; each candidate is
/// trained by opt_config.
///
/// Restart r places n_gates_max - (r mod (n_gates_max + 1)) gates, so the
/// largest structure is tried first and every count is visited. Types and
/// modes are drawn from derive_seed(seed, r), so adding restarts never
/// changes earlier candidates and never worsens the returned loss. Ties keep
/// the earlier restart.
OptResult opt_structure(int n_modes, int n_gates_max, const std::vector<TrainingPair>& pairs,
                        int n_restarts, std::uint64_t seed, const StructureOptions& options = {});

}  // namespace bosdsl
