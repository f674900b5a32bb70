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

#include <span>
#include <string>
#include <vector>

#include "bosdsl/fock.hpp"
#include "bosdsl/gates.hpp"

namespace bosdsl {

/// One placed, configured gate. Mode indices are 0-based observed modes.
struct GateSpec {
  GateType type = GateType::MG;
  std::vector<int> modes;
  std::vector<double> params;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

/// Observed mode count plus gates in temporal order (first listed acts first).
///
/// Construction does not validate; check_structure/check_static report
/// problems and assemble_transfer_matrix refuses malformed circuits.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int n_modes, std::vector<GateSpec> gates)
      : n_modes_(n_modes), gates_(std::move(gates)) {}

  int n_modes() const { return n_modes_; }
  const std::vector<GateSpec>& gates() const { return gates_; }

  /// Two private loss modes per lossy mixer.
  int n_loss_modes() const;
  /// n_modes() + n_loss_modes().
  int n_total_modes() const { return n_modes_ + n_loss_modes(); }

  /// All gate parameters concatenated in gate order.
  std::vector<double> params() const;
  std::size_t n_params() const;
  /// Same structure with `params` (as laid out by params()) substituted.
  Circuit with_params(std::span<const double> params) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_modes_ = 1;
  std::vector<GateSpec> gates_;
};

/// Static-semantics rules:
///  R1  input length equals the observed mode count
///  R2  two-mode gates use two distinct modes
///  R3  mode positions valid: positive mode count, right number of positions
///      per gate, every index in [0, n_modes)
///  R4  parameter count matches the gate type; parameters finite; every
///      transmissivity in [0, 1]
///  R5  input occupations are non-negative
struct Violation {
  std::string rule;
  std::string message;
  int gate_index = -1;  ///< -1 when not tied to a gate

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct StaticDiagnostics {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has_rule(std::string_view rule) const;
  /// One "R2 gate 0: ..." line per violation.
  std::string str() const;
};

/// Thrown when a computation is asked of a circuit failing its static rules.
class StaticError : public Error {
 public:
  explicit StaticError(StaticDiagnostics diagnostics);
  const StaticDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  StaticDiagnostics diagnostics_;
};

/// Rules R2–R4 (everything that does not involve an input).
StaticDiagnostics check_structure(const Circuit& circuit);

/// All rules. Never throws on malformed content.
StaticDiagnostics check_static(const Circuit& circuit, std::span<const int> input);
inline StaticDiagnostics check_static(const Circuit& circuit, const FockState& input) {
  return check_static(circuit, input.span());
}

/// total×total identity with `gate` written onto rows/cols `target_modes`.
ComplexMatrix embed(const ComplexMatrix& gate, std::span<const int> target_modes,
                    int total_modes);

/// Loss-mode indices of each gate: two per lossy mixer, allocated in gate
/// order starting at n_modes; empty for lossless gates.
std::vector<std::vector<int>> allocate_loss_modes(const Circuit& circuit);

/// U = E_k ⋯ E_1 over n_total_modes(). Throws StaticError on a malformed
/// circuit.
ComplexMatrix assemble_transfer_matrix(const Circuit& circuit);

}  // namespace bosdsl
