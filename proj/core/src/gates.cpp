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
#include "bosdsl/gates.hpp"

#include <array>
#include <cmath>
#include <string>

namespace bosdsl {
namespace {

constexpr std::array<std::string_view, 1> kPhaseParams{"phi"};
constexpr std::array<std::string_view, 2> kMixerParams{"theta", "phi"};
constexpr std::array<std::string_view, 4> kUncorrelatedParams{"theta", "phi", "eta1", "eta2"};
constexpr std::array<std::string_view, 3> kCorrelatedParams{"theta", "phi", "eta"};

void require_finite(double value, std::string_view name) {
  if (!std::isfinite(value)) {
    throw ParameterError("gate parameter " + std::string(name) + " is not finite");
  }
}

void require_transmissivity(double eta, std::string_view name) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw ParameterError("transmissivity " + std::string(name) + " = " + std::to_string(eta) +
                         " outside [0, 1]");
  }
}

// Real coupler between an observed arm and its loss mode.
ComplexMatrix loss_coupler(double eta) {
  const double a = std::sqrt(eta);
  const double b = std::sqrt(1.0 - eta);
  return {{a, b}, {-b, a}};
}

}  // namespace

std::string_view gate_type_name(GateType type) {
  switch (type) {
    case GateType::P: return "P";
    case GateType::MG: return "MG";
    case GateType::MGL1: return "MGL1";
    case GateType::MGL2: return "MGL2";
  }
  return "?";
}

std::optional<GateType> gate_type_from_name(std::string_view name) {
  for (GateType t : {GateType::P, GateType::MG, GateType::MGL1, GateType::MGL2}) {
    if (gate_type_name(t) == name) return t;
  }
  return std::nullopt;
}

int gate_mode_arity(GateType type) { return type == GateType::P ? 1 : 2; }

int gate_loss_modes(GateType type) {
  return type == GateType::MGL1 || type == GateType::MGL2 ? 2 : 0;
}

int gate_param_arity(GateType type) {
  return static_cast<int>(gate_param_names(type).size());
}

std::span<const std::string_view> gate_param_names(GateType type) {
  switch (type) {
    case GateType::P: return kPhaseParams;
    case GateType::MG: return kMixerParams;
    case GateType::MGL1: return kUncorrelatedParams;
    case GateType::MGL2: return kCorrelatedParams;
  }
  return {};
}

bool gate_param_is_transmissivity(GateType type, int index) {
  return gate_param_names(type)[static_cast<std::size_t>(index)].starts_with("eta");
}

ComplexMatrix gate_phase(double phi) {
  require_finite(phi, "phi");
  return {{std::polar(1.0, phi)}};
}

ComplexMatrix gate_mixer(double theta, double phi) {
  require_finite(theta, "theta");
  require_finite(phi, "phi");
  const Complex t = std::cos(theta);
  const Complex r = std::polar(1.0, -phi) * std::sin(theta);
  return {{t, r}, {-std::conj(r), t}};
}

ComplexMatrix gate_mixer_lossy_uncorrelated(double theta, double phi, double eta1,
                                            double eta2) {
  require_transmissivity(eta1, "eta1");
  require_transmissivity(eta2, "eta2");
  const ComplexMatrix mixer = direct_sum(gate_mixer(theta, phi), ComplexMatrix::identity(2));

  auto embed_coupler = [](double eta, std::size_t observed, std::size_t loss) {
    const ComplexMatrix c = loss_coupler(eta);
    ComplexMatrix out = ComplexMatrix::identity(4);
    out(observed, observed) = c(0, 0);
    out(observed, loss) = c(0, 1);
    out(loss, observed) = c(1, 0);
    out(loss, loss) = c(1, 1);
    return out;
  };
  return mixer * embed_coupler(eta1, 0, 2) * embed_coupler(eta2, 1, 3);
}

ComplexMatrix gate_mixer_lossy_correlated(double theta, double phi, double eta) {
  require_transmissivity(eta, "eta");
  const ComplexMatrix m = gate_mixer(theta, phi);
  const double a = std::sqrt(eta);
  const double b = std::sqrt(1.0 - eta);
  ComplexMatrix out(4, 4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      out(r, c) = a * m(r, c);
      out(r, c + 2) = b * m(r, c);
      out(r + 2, c) = -b * m(r, c);
      out(r + 2, c + 2) = a * m(r, c);
    }
  }
  return out;
}

ComplexMatrix gate_matrix(GateType type, std::span<const double> params) {
  if (static_cast<int>(params.size()) != gate_param_arity(type)) {
    throw ParameterError(std::string(gate_type_name(type)) + " takes " +
                         std::to_string(gate_param_arity(type)) + " parameters, got " +
                         std::to_string(params.size()));
  }
  switch (type) {
    case GateType::P: return gate_phase(params[0]);
    case GateType::MG: return gate_mixer(params[0], params[1]);
    case GateType::MGL1:
      return gate_mixer_lossy_uncorrelated(params[0], params[1], params[2], params[3]);
    case GateType::MGL2: return gate_mixer_lossy_correlated(params[0], params[1], params[2]);
  }
  throw ParameterError("unknown gate type");
}

}  // namespace bosdsl
