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

#include "bosdsl/circuit.hpp"
#include "bosdsl/fock.hpp"

namespace bosdsl {

inline constexpr std::size_t kMaxPermanentSize = 30;
/// Largest photon count the factorial table covers.
inline constexpr int kMaxPhotons = 20;

struct EvalOptions {
  /// Output states with probability below this are dropped. In [0, 1).
  double threshold = 0.0;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

/// Ryser's formula with Gray-code subset order, O(2^n · n).
/// perm of the 0×0 matrix is 1. Throws DimensionError if not square and
/// ResourceError above kMaxPermanentSize.
Complex permanent(const ComplexMatrix& m);

/// ⟨output| U |input⟩ for Fock states: Perm(U_{S,T}) / √(∏ sᵢ! ∏ tⱼ!), where
/// U_{S,T} repeats row i sᵢ times (S = output) and column j tⱼ times
/// (T = input).
Complex output_amplitude(const ComplexMatrix& u, const FockState& input,
                         const FockState& output);

/// Output pmf over the observed modes.
///
/// Loss modes start empty and are summed out, so a lossy circuit's pmf keys
/// may hold fewer photons than the input. Entries below opts.threshold are
/// dropped after the full computation; zero-probability entries survive a
/// zero threshold. Throws StaticError, or ResourceError when the output
/// basis exceeds opts.enumeration_cap.
Pmf prob_fn(const Circuit& circuit, const FockState& input, const EvalOptions& opts = {});

/// ½·Σ|p(s) - q(s)| over the union of supports.
double distance_tv(const Pmf& p, const Pmf& q);

/// Σ (p(s) - q(s))² over the union of supports.
double distance_l2(const Pmf& p, const Pmf& q);

}  // namespace bosdsl
