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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "common.hpp"
#include "state_vector.hpp"

namespace qtel {

/// One- or two-qubit unitary, row-major over basis order |00>,|01>,|10>,|11>
/// (first gate input = more significant bit). Unitarity is checked once at
/// construction so circuit code never has to.
class UnitaryGate {
 public:
  UnitaryGate(std::size_t arity, std::vector<complex_t> matrix)
      : arity_(arity), m_(std::move(matrix)) {
    if (arity_ < 1 || arity_ > 2)
      throw std::invalid_argument("UnitaryGate: arity must be 1 or 2");
    const std::size_t d = dim();
    if (m_.size() != d * d)
      throw std::invalid_argument("UnitaryGate: matrix size must be dim^2");
    for (const auto& z : m_)
      if (!is_finite(z)) throw std::invalid_argument("UnitaryGate: non-finite entry");
    // U^dagger U = I within kTolerance.
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        complex_t acc{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k)
          acc += std::conj(m_[k * d + i]) * m_[k * d + j];
        const complex_t want = (i == j) ? complex_t{1.0, 0.0} : complex_t{0.0, 0.0};
        if (std::abs(acc - want) > kTolerance)
          throw std::invalid_argument("UnitaryGate: matrix is not unitary");
      }
    }
  }

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return std::size_t{1} << arity_; }
  complex_t entry(std::size_t r, std::size_t c) const { return m_[r * dim() + c]; }
  const std::vector<complex_t>& matrix() const { return m_; }

 private:
  std::size_t arity_;
  std::vector<complex_t> m_;
};

namespace gates {

inline const UnitaryGate& identity() {
  static const UnitaryGate g(1, {1.0, 0.0, 0.0, 1.0});
  return g;
}

inline const UnitaryGate& pauli_x() {
  static const UnitaryGate g(1, {0.0, 1.0, 1.0, 0.0});
  return g;
}

inline const UnitaryGate& pauli_z() {
  static const UnitaryGate g(1, {1.0, 0.0, 0.0, -1.0});
  return g;
}

/// The product Z*X = [[0,1],[-1,0]], used verbatim as a recovery operation.
inline const UnitaryGate& pauli_zx() {
  static const UnitaryGate g(1, {0.0, 1.0, -1.0, 0.0});
  return g;
}

inline const UnitaryGate& hadamard() {
  static const double r = 1.0 / std::sqrt(2.0);
  static const UnitaryGate g(1, {r, r, r, -r});
  return g;
}

/// Controlled-NOT; first target is the control.
inline const UnitaryGate& cnot() {
  static const UnitaryGate g(2, {1.0, 0.0, 0.0, 0.0,  //
                                 0.0, 1.0, 0.0, 0.0,  //
                                 0.0, 0.0, 0.0, 1.0,  //
                                 0.0, 0.0, 1.0, 0.0});
  return g;
}

}  // namespace gates

/// Applies `gate` to the listed qubits (targets[0] = gate's more significant
/// input). Pure: returns the new state.
inline StateVector apply_gate(const StateVector& state, const UnitaryGate& gate,
                              const std::vector<std::size_t>& targets) {
  const std::size_t n = state.num_qubits();
  if (targets.size() != gate.arity())
    throw std::invalid_argument("apply_gate: target count must match gate arity");
  for (std::size_t t : targets)
    if (t >= n) throw std::out_of_range("apply_gate: target qubit out of range");
  if (targets.size() == 2 && targets[0] == targets[1])
    throw std::invalid_argument("apply_gate: duplicate target qubit");

  const std::size_t k = gate.arity();
  const std::size_t gd = gate.dim();
  std::vector<std::size_t> masks(k);
  for (std::size_t j = 0; j < k; ++j)
    masks[j] = std::size_t{1} << (n - 1 - targets[j]);
  std::size_t targets_mask = 0;
  for (std::size_t m : masks) targets_mask |= m;

  std::vector<complex_t> out(state.amplitudes());
  std::vector<std::size_t> idx(gd);
  std::vector<complex_t> in(gd);
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & targets_mask) continue;  // visit each gate block once
    for (std::size_t g = 0; g < gd; ++g) {
      std::size_t i = base;
      for (std::size_t j = 0; j < k; ++j)
        if ((g >> (k - 1 - j)) & 1u) i |= masks[j];
      idx[g] = i;
      in[g] = state.amplitude(i);
    }
    for (std::size_t r = 0; r < gd; ++r) {
      complex_t acc{0.0, 0.0};
      for (std::size_t c = 0; c < gd; ++c) acc += gate.entry(r, c) * in[c];
      out[idx[r]] = acc;
    }
  }
  return StateVector(n, std::move(out));
}

}  // namespace qtel
