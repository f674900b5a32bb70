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
#include "bosdsl/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace bosdsl {

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  if (occupations_.empty()) {
    throw DimensionError("Fock state needs at least one mode");
  }
  for (int n : occupations_) {
    if (n < 0) {
      throw ParameterError("negative photon occupation " + std::to_string(n));
    }
  }
}

int FockState::total() const {
  return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

FockState FockState::prefix(std::size_t n_modes) const {
  if (n_modes == 0 || n_modes > occupations_.size()) {
    throw DimensionError("prefix length out of range");
  }
  return FockState(std::vector<int>(occupations_.begin(), occupations_.begin() + n_modes));
}

FockState FockState::padded(std::size_t extra_modes) const {
  auto occ = occupations_;
  occ.resize(occ.size() + extra_modes, 0);
  return FockState(std::move(occ));
}

std::string FockState::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    if (i) out << ", ";
    out << occupations_[i];
  }
  out << ']';
  return out.str();
}

std::uint64_t count_fock_states(int n_photons, int n_modes) {
  if (n_photons < 0 || n_modes < 1) return 0;
  // C(n + m - 1, m - 1) built incrementally; each partial product is itself a
  // binomial coefficient, so the division is exact.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t k = static_cast<std::uint64_t>(n_modes - 1);
  const std::uint64_t n = static_cast<std::uint64_t>(n_photons) + k;
  const std::uint64_t kk = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    const std::uint64_t factor = n - kk + i;
    if (acc > kMax / factor) return kMax;  // saturate; far above any usable cap
    acc = acc * factor / i;
  }
  return acc;
}

namespace {

void enumerate_into(int remaining, std::size_t mode, std::vector<int>& current,
                    std::vector<FockState>& out) {
  if (mode + 1 == current.size()) {
    current[mode] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[mode] = k;
    enumerate_into(remaining - k, mode + 1, current, out);
  }
}

}  // namespace

std::vector<FockState> enumerate_fock_states(int n_photons, int n_modes, std::uint64_t cap) {
  if (n_modes < 1) throw DimensionError("enumeration needs at least one mode");
  if (n_photons < 0) throw ParameterError("negative photon count");
  const std::uint64_t count = count_fock_states(n_photons, n_modes);
  if (count > cap) {
    throw ResourceError("enumerating " + std::to_string(n_photons) + " photons over " +
                        std::to_string(n_modes) + " modes needs " + std::to_string(count) +
                        " states, above the cap of " + std::to_string(cap));
  }
  std::vector<FockState> out;
  out.reserve(count);
  std::vector<int> current(static_cast<std::size_t>(n_modes), 0);
  enumerate_into(n_photons, 0, current, out);
  return out;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z *= factor;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionError("matrix shapes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    worst = std::max(worst, std::abs(a.data_[i] - b.data_[i]));
  }
  return worst;
}

ComplexMatrix matrix_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return approx_equal(m * m.adjoint(), ComplexMatrix::identity(m.rows()), tol);
}

Pmf::Pmf(std::size_t n_modes) : n_modes_(n_modes) {
  if (n_modes == 0) throw DimensionError("pmf needs at least one mode");
}

void Pmf::check_state(const FockState& state) const {
  if (state.size() != n_modes_) {
    throw DimensionError("state " + state.str() + " does not have " + std::to_string(n_modes_) +
                         " modes");
  }
}

void Pmf::insert(const FockState& state, double prob) {
  check_state(state);
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw ParameterError("probability out of [0, 1]: " + std::to_string(prob));
  }
  if (!entries_.emplace(state, prob).second) {
    throw ParameterError("duplicate pmf state " + state.str());
  }
}

void Pmf::accumulate(const FockState& state, double prob) {
  check_state(state);
  if (!std::isfinite(prob)) throw NumericError("non-finite probability");
  double& slot = entries_[state];
  slot = std::clamp(slot + prob, 0.0, 1.0);
}

double Pmf::at(const FockState& state) const {
  auto it = entries_.find(state);
  return it == entries_.end() ? 0.0 : it->second;
}

double Pmf::total() const {
  double sum = 0.0;
  for (const auto& [state, p] : entries_) sum += p;
  return sum;
}

Pmf Pmf::thresholded(double threshold) const {
  Pmf out(n_modes_);
  for (const auto& [state, p] : entries_) {
    if (p >= threshold) out.entries_.emplace(state, p);
  }
  return out;
}

}  // namespace bosdsl
