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
#include "bosdsl/circuit.hpp"

#include <cmath>
#include <sstream>

namespace bosdsl {

int Circuit::n_loss_modes() const {
  int n = 0;
  for (const auto& g : gates_) n += gate_loss_modes(g.type);
  return n;
}

std::vector<double> Circuit::params() const {
  std::vector<double> out;
  for (const auto& g : gates_) out.insert(out.end(), g.params.begin(), g.params.end());
  return out;
}

std::size_t Circuit::n_params() const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += g.params.size();
  return n;
}

Circuit Circuit::with_params(std::span<const double> params) const {
  if (params.size() != n_params()) {
    throw DimensionError("expected " + std::to_string(n_params()) + " parameters, got " +
                         std::to_string(params.size()));
  }
  Circuit out = *this;
  std::size_t k = 0;
  for (auto& g : out.gates_) {
    for (auto& p : g.params) p = params[k++];
  }
  return out;
}

bool StaticDiagnostics::has_rule(std::string_view rule) const {
  for (const auto& v : violations) {
    if (v.rule == rule) return true;
  }
  return false;
}

std::string StaticDiagnostics::str() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.rule;
    if (v.gate_index >= 0) out << " gate " << v.gate_index;
    out << ": " << v.message << '\n';
  }
  return out.str();
}

StaticError::StaticError(StaticDiagnostics diagnostics)
    : Error("static semantics violated:\n" + diagnostics.str()),
      diagnostics_(std::move(diagnostics)) {}

StaticDiagnostics check_structure(const Circuit& circuit) {
  StaticDiagnostics diag;
  auto report = [&diag](const char* rule, std::string message, int gate) {
    diag.violations.push_back({rule, std::move(message), gate});
  };

  if (circuit.n_modes() < 1) {
    report("R3", "circuit needs at least one mode, got " + std::to_string(circuit.n_modes()),
           -1);
  }

  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const GateSpec& g = circuit.gates()[i];
    const int gi = static_cast<int>(i);
    const std::string name(gate_type_name(g.type));

    const int arity = gate_mode_arity(g.type);
    if (static_cast<int>(g.modes.size()) != arity) {
      report("R3",
             name + " acts on " + std::to_string(arity) + " mode(s), got " +
                 std::to_string(g.modes.size()),
             gi);
    }
    for (int m : g.modes) {
      if (m < 0 || m >= circuit.n_modes()) {
        report("R3",
               "mode " + std::to_string(m) + " out of range [0, " +
                   std::to_string(circuit.n_modes()) + ")",
               gi);
      }
    }
    if (arity == 2 && g.modes.size() == 2 && g.modes[0] == g.modes[1]) {
      report("R2", name + " needs two distinct modes, got " + std::to_string(g.modes[0]) +
                       " twice",
             gi);
    }

    if (static_cast<int>(g.params.size()) != gate_param_arity(g.type)) {
      report("R4",
             name + " takes " + std::to_string(gate_param_arity(g.type)) +
                 " parameter(s), got " + std::to_string(g.params.size()),
             gi);
      continue;
    }
    const auto names = gate_param_names(g.type);
    for (std::size_t k = 0; k < g.params.size(); ++k) {
      const double v = g.params[k];
      if (!std::isfinite(v)) {
        report("R4", "parameter " + std::string(names[k]) + " is not finite", gi);
      } else if (gate_param_is_transmissivity(g.type, static_cast<int>(k)) &&
                 (v < 0.0 || v > 1.0)) {
        report("R4",
               "transmissivity " + std::string(names[k]) + " = " + std::to_string(v) +
                   " outside [0, 1]",
               gi);
      }
    }
  }
  return diag;
}

StaticDiagnostics check_static(const Circuit& circuit, std::span<const int> input) {
  StaticDiagnostics diag;
  if (static_cast<int>(input.size()) != circuit.n_modes()) {
    diag.violations.push_back({"R1",
                               "input has " + std::to_string(input.size()) +
                                   " entries but the circuit has " +
                                   std::to_string(circuit.n_modes()) + " modes",
                               -1});
  }
  auto structural = check_structure(circuit);
  diag.violations.insert(diag.violations.end(), structural.violations.begin(),
                         structural.violations.end());
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] < 0) {
      diag.violations.push_back({"R5",
                                 "input mode " + std::to_string(i) + " has negative occupation " +
                                     std::to_string(input[i]),
                                 -1});
    }
  }
  return diag;
}

ComplexMatrix embed(const ComplexMatrix& gate, std::span<const int> target_modes,
                    int total_modes) {
  if (!gate.is_square() || gate.rows() != target_modes.size()) {
    throw DimensionError("gate of size " + std::to_string(gate.rows()) + "x" +
                         std::to_string(gate.cols()) + " cannot be placed on " +
                         std::to_string(target_modes.size()) + " modes");
  }
  for (std::size_t i = 0; i < target_modes.size(); ++i) {
    if (target_modes[i] < 0 || target_modes[i] >= total_modes) {
      throw DimensionError("target mode " + std::to_string(target_modes[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (target_modes[i] == target_modes[j]) throw DimensionError("target modes repeat");
    }
  }
  ComplexMatrix out = ComplexMatrix::identity(static_cast<std::size_t>(total_modes));
  for (std::size_t r = 0; r < target_modes.size(); ++r) {
    const auto row = static_cast<std::size_t>(target_modes[r]);
    out(row, row) = 0.0;
  }
  for (std::size_t r = 0; r < target_modes.size(); ++r) {
    for (std::size_t c = 0; c < target_modes.size(); ++c) {
      out(static_cast<std::size_t>(target_modes[r]), static_cast<std::size_t>(target_modes[c])) =
          gate(r, c);
    }
  }
  return out;
}

std::vector<std::vector<int>> allocate_loss_modes(const Circuit& circuit) {
  std::vector<std::vector<int>> out;
  out.reserve(circuit.gates().size());
  int next = circuit.n_modes();
  for (const auto& g : circuit.gates()) {
    std::vector<int> modes;
    for (int k = 0; k < gate_loss_modes(g.type); ++k) modes.push_back(next++);
    out.push_back(std::move(modes));
  }
  return out;
}

ComplexMatrix assemble_transfer_matrix(const Circuit& circuit) {
  if (auto diag = check_structure(circuit); !diag.ok()) throw StaticError(std::move(diag));

  const int total = circuit.n_total_modes();
  const auto loss_modes = allocate_loss_modes(circuit);
  ComplexMatrix u = ComplexMatrix::identity(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const GateSpec& g = circuit.gates()[i];
    std::vector<int> targets = g.modes;
    targets.insert(targets.end(), loss_modes[i].begin(), loss_modes[i].end());
    // E·u only touches the target rows.
    const ComplexMatrix m = gate_matrix(g.type, g.params);
    std::vector<Complex> column(targets.size());
    for (std::size_t c = 0; c < u.cols(); ++c) {
      for (std::size_t r = 0; r < targets.size(); ++r) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < targets.size(); ++k) {
          acc += m(r, k) * u(static_cast<std::size_t>(targets[k]), c);
        }
        column[r] = acc;
      }
      for (std::size_t r = 0; r < targets.size(); ++r) {
        u(static_cast<std::size_t>(targets[r]), c) = column[r];
      }
    }
  }
  return u;
}

}  // namespace bosdsl
