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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bosdsl/errors.hpp"

namespace bosdsl {

using Complex = std::complex<double>;

/// Photon occupation numbers, one entry per mode.
///
/// Ordering is plain lexicographic on the occupation list; containers that
/// need the library's canonical order (descending) use std::greater<>.
class FockState {
 public:
  FockState() = default;
  /// Throws DimensionError on an empty list and ParameterError on negative
  /// occupations.
  explicit FockState(std::vector<int> occupations);
  FockState(std::initializer_list<int> occupations)
      : FockState(std::vector<int>(occupations)) {}

  std::size_t size() const { return occupations_.size(); }
  int operator[](std::size_t mode) const { return occupations_[mode]; }
  const std::vector<int>& occupations() const { return occupations_; }
  std::span<const int> span() const { return occupations_; }

  /// Total photon count.
  int total() const;

  /// The first n_modes occupations (used to drop unobserved modes).
  FockState prefix(std::size_t n_modes) const;
  /// This state followed by `extra_modes` empty modes.
  FockState padded(std::size_t extra_modes) const;

  /// "[1, 0, 2]"
  std::string str() const;

  friend auto operator<=>(const FockState&, const FockState&) = default;
  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::vector<int> occupations_;
};

inline int fock_total(const FockState& s) { return s.total(); }

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Number of occupation patterns of n_photons over n_modes, saturating at
/// UINT64_MAX.
std::uint64_t count_fock_states(int n_photons, int n_modes);

/// Every state of length n_modes holding n_photons, lexicographically
/// descending ([2,0], [1,1], [0,2]). Throws ResourceError when the count
/// exceeds `cap`.
std::vector<FockState> enumerate_fock_states(
    int n_photons, int n_modes, std::uint64_t cap = kDefaultEnumerationCap);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix scaled(Complex factor) const;

  /// Largest entrywise |a - b|; DimensionError on shape mismatch.
  friend double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                           double tol = kTolerance) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && max_abs_diff(a, b) <= tol;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix matrix_multiply(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matrix_multiply(a, b);
}

/// Block-diagonal a ⊕ b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// True when m·m† equals the identity within tol.
bool is_unitary(const ComplexMatrix& m, double tol = ComplexMatrix::kTolerance);

/// Probability mass function over output states of a fixed mode count.
///
/// Iteration order is lexicographically descending by state. Entries with
/// probability zero are kept; an absent key and a zero entry both read as 0.
class Pmf {
 public:
  using Map = std::map<FockState, double, std::greater<>>;

  explicit Pmf(std::size_t n_modes);

  std::size_t n_modes() const { return n_modes_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Inserts a new key. Throws on duplicate key, wrong length, or a
  /// probability outside [0, 1].
  void insert(const FockState& state, double prob);
  /// Adds to an existing entry (or creates it); the result is clamped to
  /// [0, 1] to absorb rounding.
  void accumulate(const FockState& state, double prob);

  bool contains(const FockState& state) const { return entries_.contains(state); }
  /// Probability of `state`, 0 if absent.
  double at(const FockState& state) const;
  double total() const;

  /// Copy without entries whose probability is below `threshold`.
  Pmf thresholded(double threshold) const;

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  void check_state(const FockState& state) const;

  std::size_t n_modes_;
  Map entries_;
};

}  // namespace bosdsl
