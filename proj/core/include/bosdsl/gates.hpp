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

#include <optional>
#include <span>
#include <string_view>

#include "bosdsl/fock.hpp"

namespace bosdsl {

/// Interferometer components.
///
///  - P     phase shifter on one mode, params {phi}
///  - MG    lossless mixer (beam splitter) on two modes, params {theta, phi}
///  - MGL1  mixer preceded by one loss coupler per input arm, params
///          {theta, phi, eta1, eta2}
///  - MGL2  mixer whose two arms lose through a shared coupling, params
///          {theta, phi, eta}
///
/// Lossy mixers carry two private unobserved modes each.
enum class GateType { P, MG, MGL1, MGL2 };

std::string_view gate_type_name(GateType type);
std::optional<GateType> gate_type_from_name(std::string_view name);

/// Observed modes the gate touches (1 or 2).
int gate_mode_arity(GateType type);
/// Unobserved loss modes the gate introduces (0 or 2).
int gate_loss_modes(GateType type);
/// Number of real parameters.
int gate_param_arity(GateType type);
/// Parameter names in canonical order, e.g. {"theta", "phi"} for MG.
std::span<const std::string_view> gate_param_names(GateType type);
/// True for transmissivity parameters (clamped to [0, 1]); false for angles.
bool gate_param_is_transmissivity(GateType type, int index);

/// [e^{iφ}]
ComplexMatrix gate_phase(double phi);

/// [[t, r], [-r*, t]] with t = cos θ and r = e^{-iφ} sin θ.
ComplexMatrix gate_mixer(double theta, double phi);

/// (M ⊕ I₂)·L₁·L₂ on local modes (obs0, obs1, loss0, loss1), where Lₖ couples
/// observed mode k to loss mode k by [[√ηₖ, √(1-ηₖ)], [-√(1-ηₖ), √ηₖ]].
ComplexMatrix gate_mixer_lossy_uncorrelated(double theta, double phi, double eta1,
                                            double eta2);

/// [[a·M, b·M], [-b·M, a·M]] with a = √η, b = √(1-η), local modes as above.
ComplexMatrix gate_mixer_lossy_correlated(double theta, double phi, double eta);

/// Dispatches on type; `params` must have the type's arity.
ComplexMatrix gate_matrix(GateType type, std::span<const double> params);

}  // namespace bosdsl
