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
#include "bosdsl/engine.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace bosdsl {
namespace {

constexpr std::array<std::uint64_t, kMaxPhotons + 1> make_factorials() {
  std::array<std::uint64_t, kMaxPhotons + 1> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorials = make_factorials();

void require_same_modes(const Pmf& p, const Pmf& q) {
  if (p.n_modes() != q.n_modes()) {
    throw DimensionError("pmfs over " + std::to_string(p.n_modes()) + " and " +
                         std::to_string(q.n_modes()) + " modes");
  }
}

template <typename Fn>
void for_each_union(const Pmf& p, const Pmf& q, Fn&& fn) {
  for (const auto& [s, ps] : p) fn(ps, q.at(s));
  for (const auto& [s, qs] : q) {
    if (!p.contains(s)) fn(0.0, qs);
  }
}

}  // namespace

Complex permanent(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("permanent needs a square matrix");
  const std::size_t n = m.rows();
  if (n > kMaxPermanentSize) {
    throw ResourceError("permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                        " matrix exceeds the size limit of " +
                        std::to_string(kMaxPermanentSize));
  }
  if (n == 0) return 1.0;

  // perm(A) = (-1)^n Σ_{S ⊆ cols} (-1)^{|S|} ∏_i Σ_{j∈S} a_ij, visiting subsets
  // in Gray-code order so each step toggles one column into the row sums.
  std::vector<Complex> row_sums(n, 0.0);
  std::vector<bool> in_subset(n, false);
  int subset_size = 0;
  Complex total = 0.0;
  const std::uint64_t n_subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < n_subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const double sign = in_subset[col] ? -1.0 : 1.0;
    in_subset[col] = !in_subset[col];
    Complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      row_sums[i] += sign * m(i, col);
      prod *= row_sums[i];
    }
    subset_size += in_subset[col] ? 1 : -1;
    total += (subset_size % 2 == 1) ? -prod : prod;
  }
  return (n % 2 == 1) ? -total : total;
}

Complex output_amplitude(const ComplexMatrix& u, const FockState& input,
                         const FockState& output) {
  if (!u.is_square() || input.size() != u.rows() || output.size() != u.rows()) {
    throw DimensionError("states of length " + std::to_string(input.size()) + "/" +
                         std::to_string(output.size()) + " against a " +
                         std::to_string(u.rows()) + "x" + std::to_string(u.cols()) + " matrix");
  }
  const int n = input.total();
  if (n != output.total()) {
    throw DimensionError("photon counts differ: input " + std::to_string(n) + ", output " +
                         std::to_string(output.total()));
  }
  if (n > kMaxPhotons) {
    throw ResourceError(std::to_string(n) + " photons exceeds the limit of " +
                        std::to_string(kMaxPhotons));
  }

  std::vector<std::size_t> rows, cols;
  rows.reserve(static_cast<std::size_t>(n));
  cols.reserve(static_cast<std::size_t>(n));
  double norm = 1.0;
  for (std::size_t i = 0; i < output.size(); ++i) {
    rows.insert(rows.end(), static_cast<std::size_t>(output[i]), i);
    norm *= static_cast<double>(kFactorials[static_cast<std::size_t>(output[i])]);
  }
  for (std::size_t j = 0; j < input.size(); ++j) {
    cols.insert(cols.end(), static_cast<std::size_t>(input[j]), j);
    norm *= static_cast<double>(kFactorials[static_cast<std::size_t>(input[j])]);
  }

  ComplexMatrix sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = u(rows[r], cols[c]);
  return permanent(sub) / std::sqrt(norm);
}

Pmf prob_fn(const Circuit& circuit, const FockState& input, const EvalOptions& opts) {
  if (!(opts.threshold >= 0.0 && opts.threshold < 1.0)) {
    throw ParameterError("threshold must lie in [0, 1), got " + std::to_string(opts.threshold));
  }
  if (auto diag = check_static(circuit, input); !diag.ok()) throw StaticError(std::move(diag));

  const ComplexMatrix u = assemble_transfer_matrix(circuit);
  const auto n_observed = static_cast<std::size_t>(circuit.n_modes());
  const FockState extended = input.padded(static_cast<std::size_t>(circuit.n_loss_modes()));
  const auto outputs =
      enumerate_fock_states(input.total(), circuit.n_total_modes(), opts.enumeration_cap);

  Pmf pmf(n_observed);
  for (const FockState& out : outputs) {
    const double p = std::norm(output_amplitude(u, extended, out));
    pmf.accumulate(out.prefix(n_observed), p);
  }
  return opts.threshold > 0.0 ? pmf.thresholded(opts.threshold) : pmf;
}

double distance_tv(const Pmf& p, const Pmf& q) {
  require_same_modes(p, q);
  double sum = 0.0;
  for_each_union(p, q, [&sum](double a, double b) { sum += std::abs(a - b); });
  return 0.5 * sum;
}

double distance_l2(const Pmf& p, const Pmf& q) {
  require_same_modes(p, q);
  double sum = 0.0;
  for_each_union(p, q, [&sum](double a, double b) { sum += (a - b) * (a - b); });
  return sum;
}

}  // namespace bosdsl
