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

/**
 * @file state_vector.hpp
 * Dense state vector over computational basis states. Qubit 0 is the most
 * significant bit of the basis index, so |q0 q1 ... q(n-1)> reads left to
 * right exactly like the printed ket labels.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace qtel {

class StateVector {
 public:
  /// All-zeros basis state. A 0-qubit register is a single scalar amplitude;
  /// it shows up when the last qubit of a register is measured away.
  explicit StateVector(std::size_t num_qubits)
      : num_qubits_(check_size(num_qubits)),
        amps_(std::size_t{1} << num_qubits, complex_t{0.0, 0.0}) {
    amps_[0] = 1.0;
  }

  StateVector(std::size_t num_qubits, std::vector<complex_t> amplitudes)
      : num_qubits_(check_size(num_qubits)), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << num_qubits_))
      throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
    for (const auto& a : amps_)
      if (!is_finite(a)) throw std::invalid_argument("StateVector: non-finite amplitude");
  }

  static StateVector basis(std::size_t num_qubits, std::size_t label) {
    StateVector s(num_qubits);
    if (label >= s.dim())
      throw std::out_of_range("StateVector::basis: label out of range");
    s.amps_[0] = 0.0;
    s.amps_[label] = 1.0;
    return s;
  }

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<complex_t>& amplitudes() const { return amps_; }

  complex_t amplitude(std::size_t index) const {
    if (index >= dim()) throw std::out_of_range("StateVector::amplitude: index out of range");
    return amps_[index];
  }

  /// Value of `qubit` within basis state `index` (qubit 0 = most significant).
  bool bit(std::size_t index, std::size_t qubit) const {
    if (qubit >= num_qubits_) throw std::out_of_range("StateVector::bit: qubit out of range");
    return (index >> (num_qubits_ - 1 - qubit)) & 1u;
  }

  double norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
  }
  double norm() const { return std::sqrt(norm_squared()); }
  bool is_normalized(double tol = kTolerance) const {
    return std::abs(norm_squared() - 1.0) <= tol;
  }

  StateVector normalized() const {
    const double n = norm();
    if (n <= 1e-15)
      throw std::invalid_argument("StateVector::normalized: zero-norm state");
    std::vector<complex_t> out(amps_);
    for (auto& a : out) a /= n;
    return StateVector(num_qubits_, std::move(out));
  }

  /// <this|other>.
  complex_t inner_product(const StateVector& other) const {
    if (other.num_qubits_ != num_qubits_)
      throw std::invalid_argument("inner_product: register size mismatch");
    complex_t acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i)
      acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
  }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n > kMaxQubits)
      throw std::out_of_range("StateVector: register capped at " +
                              std::to_string(kMaxQubits) + " qubits");
    return n;
  }

  std::size_t num_qubits_;
  std::vector<complex_t> amps_;
};

/// a (x) b with a's qubits on the most-significant side.
inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const std::size_t n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits)
    throw std::out_of_range("tensor_product: combined register too large");
  std::vector<complex_t> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out[i * b.dim() + j] = a.amplitude(i) * b.amplitude(j);
  return StateVector(n, std::move(out));
}

/// |<a|b>|^2 for pure states.
inline double transition_probability(const StateVector& a, const StateVector& b) {
  return std::norm(a.inner_product(b));
}

inline bool approx_equal(const StateVector& a, const StateVector& b,
                         double tol = kTolerance) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a.amplitude(i) - b.amplitude(i)) > tol) return false;
  return true;
}

/// Amplitude-wise equality after aligning the phase of b's largest-magnitude
/// amplitude with a's. Global phase is unobservable, so protocol outputs are
/// compared this way.
inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                                     double tol = kTolerance) {
  if (a.num_qubits() != b.num_qubits()) return false;
  std::size_t ref = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const double mag = std::abs(b.amplitude(i));
    if (mag > best) {
      best = mag;
      ref = i;
    }
  }
  if (best <= tol) return approx_equal(a, b, tol);
  if (std::abs(a.amplitude(ref)) <= 1e-15) return false;
  const complex_t phase =
      (a.amplitude(ref) / std::abs(a.amplitude(ref))) /
      (b.amplitude(ref) / std::abs(b.amplitude(ref)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a.amplitude(i) - phase * b.amplitude(i)) > tol) return false;
  return true;
}

}  // namespace qtel
