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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bosdsl/circuit.hpp"
#include "bosdsl/fock.hpp"
#include "bosdsl/optimizer.hpp"
#include "bosdsl/sampler.hpp"

namespace bosdsl {

/// Rejection of a document before it becomes a circuit, input, or pmf.
class DslError : public Error {
 public:
  enum class Kind {
    Syntax,     ///< not well-formed JSON / text
    Key,        ///< missing or unknown key, unknown gate name
    Type,       ///< value of the wrong type (e.g. non-integer mode, negative count)
    Alignment,  ///< posn and config lists disagree in length or gate type
  };

  DslError(Kind kind, const std::string& message);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view dsl_error_kind_name(DslError::Kind kind);

/// The split form of a circuit file: positions and configurations as parallel
/// lists, exactly as written.
struct CircuitDocument {
  struct Position {
    std::string name;
    std::vector<int> modes;
  };
  struct Config {
    std::string name;
    /// (key, value) in file order, "name" excluded.
    std::vector<std::pair<std::string, double>> params;
  };

  int modes = 0;
  std::vector<Position> posn;
  std::vector<Config> config;
};

/// Syntax, key and type checks only.
///
/// Circuit files look like
///
///   {
///     "modes": 2,
///     "posn": [
///       {"name": "MG", "modes": [0, 1]}
///     ],
///     "config": [
///       {"name": "MG", "theta": 0.785..., "phi": 2.094...}
///     ]
///   }
///
/// Config keys per gate: P {phi}; MG {theta, phi}; MGL1 {theta, phi, eta1,
/// eta2}; MGL2 {theta, phi, eta}. Integers must be JSON integers; reals accept
/// integer literals.
CircuitDocument parse_circuit_document(std::string_view text);

/// Checks posn/config alignment and fuses the lists into GateSpecs. The
/// result may still fail the static rules.
Circuit fuse_circuit_document(const CircuitDocument& doc);

/// parse_circuit_document and fuse_circuit_document, then the structural
/// static rules (throws StaticError on R2–R4).
Circuit parse_circuit(std::string_view text);

/// Canonical text: fixed key order, 2-space indentation, one gate per line,
/// reals printed with 17 significant digits, trailing newline.
std::string serialize_circuit(const Circuit& circuit);

/// "[1, 1, 0]" (JSON array of non-negative integers).
FockState parse_input(std::string_view text);
std::string serialize_input(const FockState& state);

/// JSON array of {"state": [...], "prob": p} sorted by descending
/// probability, ties by the canonical state order, then a final
/// {"retained_mass": total} element.
std::string serialize_pmf(const Pmf& pmf);
/// Accepts the serialize_pmf form; the retained_mass element is optional.
Pmf parse_pmf(std::string_view text);

/// One shot per line, occupations separated by commas.
std::string serialize_shots(const ShotRecord& record);
std::vector<FockState> parse_shots(std::string_view text);

/// JSON array of {"input": [...], "target": [{"state": ..., "prob": ...}, ...]}.
std::vector<TrainingPair> parse_pairs(std::string_view text);

/// "iteration,loss" header then one row per iteration.
std::string serialize_trace(const std::vector<double>& loss_history);

/// %.17g
std::string format_real(double value);

}  // namespace bosdsl
