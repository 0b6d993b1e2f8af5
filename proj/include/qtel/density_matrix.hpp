// Copyright 2026 The qtel authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "common.hpp"
#include "linalg.hpp"
#include "state_vector.hpp"

namespace qtel {

namespace detail {

/// Validates a `keep` list against an n-qubit register and returns it sorted.
/// Kept qubits always retain their register order.
inline std::vector<std::size_t> checked_keep(std::vector<std::size_t> keep,
                                             std::size_t num_qubits) {
  if (keep.empty()) throw std::invalid_argument("keep set must be non-empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("keep set has a duplicate qubit");
  if (keep.back() >= num_qubits)
    throw std::out_of_range("keep set references a qubit out of range");
  return keep;
}

/// Splits a basis index into (kept bits, traced bits), each packed in
/// register order.
inline std::pair<std::size_t, std::size_t> split_index(std::size_t index,
                                                       std::size_t num_qubits,
                                                       const std::vector<std::size_t>& keep) {
  std::size_t kept = 0, traced = 0, ki = 0;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    const std::size_t bit = (index >> (num_qubits - 1 - q)) & 1u;
    if (ki < keep.size() && keep[ki] == q) {
      kept = (kept << 1) | bit;
      ++ki;
    } else {
      traced = (traced << 1) | bit;
    }
  }
  return {kept, traced};
}

}  // namespace detail

/// Validated density operator: Hermitian, unit trace, positive semidefinite
/// (within tolerance). Construction is the only place these are checked.
class DensityMatrix {
 public:
  DensityMatrix(std::size_t num_qubits, CMatrix entries, double tol = kTolerance)
      : num_qubits_(num_qubits), m_(std::move(entries)) {
    const std::size_t d = std::size_t{1} << num_qubits_;
    if (m_.dim != d)
      throw std::invalid_argument("DensityMatrix: entry dimension must be 2^num_qubits");
    for (const auto& z : m_.a)
      if (!is_finite(z)) throw std::invalid_argument("DensityMatrix: non-finite entry");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        if (std::abs(m_.at(i, j) - std::conj(m_.at(j, i))) > tol)
          throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(trace(m_) - complex_t{1.0, 0.0}) > tol)
      throw std::invalid_argument("DensityMatrix: trace must be 1");
    const auto eig = hermitian_eigenvalues(m_);
    if (eig.back() < -tol)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }

  static DensityMatrix from_pure(const StateVector& state) {
    CMatrix m(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i)
      for (std::size_t j = 0; j < state.dim(); ++j)
        m.at(i, j) = state.amplitude(i) * std::conj(state.amplitude(j));
    return DensityMatrix(state.num_qubits(), std::move(m));
  }

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return m_.dim; }
  complex_t entry(std::size_t r, std::size_t c) const { return m_.at(r, c); }
  const CMatrix& matrix() const { return m_; }

  /// Eigenvalues sorted descending.
  std::vector<double> eigenvalues() const { return hermitian_eigenvalues(m_); }

  /// tr(rho^2); for Hermitian rho this is the squared Frobenius norm.
  double purity() const {
    double p = 0.0;
    for (const auto& z : m_.a) p += std::norm(z);
    return p;
  }

 private:
  std::size_t num_qubits_;
  CMatrix m_;
};

/// Reduced state of a pure state on the kept qubits.
inline DensityMatrix reduced_density(const StateVector& state,
                                     std::vector<std::size_t> keep) {
  const auto k = detail::checked_keep(std::move(keep), state.num_qubits());
  const std::size_t dk = std::size_t{1} << k.size();
  const std::size_t dt = state.dim() / dk;
  // Bucket amplitudes by traced-out configuration, then sum outer products.
  std::vector<std::vector<complex_t>> bucket(dt, std::vector<complex_t>(dk, complex_t{0.0, 0.0}));
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const auto [kept, traced] = detail::split_index(i, state.num_qubits(), k);
    bucket[traced][kept] = state.amplitude(i);
  }
  CMatrix out(dk);
  for (std::size_t e = 0; e < dt; ++e)
    for (std::size_t r = 0; r < dk; ++r)
      for (std::size_t c = 0; c < dk; ++c)
        out.at(r, c) += bucket[e][r] * std::conj(bucket[e][c]);
  return DensityMatrix(k.size(), std::move(out));
}

/// Partial trace of a mixed state down to the kept qubits.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   std::vector<std::size_t> keep) {
  const auto k = detail::checked_keep(std::move(keep), rho.num_qubits());
  const std::size_t dk = std::size_t{1} << k.size();
  CMatrix out(dk);
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    const auto [ri, ei] = detail::split_index(i, rho.num_qubits(), k);
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      const auto [rj, ej] = detail::split_index(j, rho.num_qubits(), k);
      if (ei == ej) out.at(ri, rj) += rho.entry(i, j);
    }
  }
  return DensityMatrix(k.size(), std::move(out));
}

/// <target| rho |target>; real and clamped to [0, 1].
inline double fidelity(const StateVector& target, const DensityMatrix& rho) {
  if (target.dim() != rho.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  complex_t acc{0.0, 0.0};
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      acc += std::conj(target.amplitude(i)) * rho.entry(i, j) * target.amplitude(j);
  if (std::abs(acc.imag()) > 1e-9)
    throw std::invalid_argument("fidelity: expectation came out non-real");
  return std::clamp(acc.real(), 0.0, 1.0);
}

inline double max_abs_diff(const DensityMatrix& x, const DensityMatrix& y) {
  return max_abs_diff(x.matrix(), y.matrix());
}

}  // namespace qtel
