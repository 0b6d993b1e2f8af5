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
 * @file channel.hpp
 * Three-qubit channel states for controlled teleportation. A channel's
 * qubits are, in order: Alice's channel qubit, Bob's qubit, Charlie's qubit.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bell.hpp"
#include "common.hpp"
#include "density_matrix.hpp"
#include "gates.hpp"
#include "schmidt.hpp"
#include "state_vector.hpp"

namespace qtel {

/// Runs the two-stage preparation circuit on basis input |u v w>:
/// H on qubit 1, CNOT 1->2, then H on qubit 0, CNOT 0->1. Input (0,0,1)
/// yields (|001>+|010>+|100>+|111>)/2; input (0,0,0) its partner family
/// member (|000>+|011>+|110>+|101>)/2.
inline StateVector prepare_channel(int u, int v, int w) {
  for (int b : {u, v, w})
    if (b != 0 && b != 1)
      throw std::invalid_argument("prepare_channel: inputs must be bits");
  StateVector s = StateVector::basis(3, static_cast<std::size_t>(u * 4 + v * 2 + w));
  s = apply_gate(s, gates::hadamard(), {1});
  s = apply_gate(s, gates::cnot(), {1, 2});
  s = apply_gate(s, gates::hadamard(), {0});
  s = apply_gate(s, gates::cnot(), {0, 1});
  return s;
}

/// A channel described by which Bell pair rides on qubits (0,1) next to each
/// value of Charlie's qubit. The two Bell kinds must differ, otherwise the
/// state factorizes as (Bell) x |+> and leaves Charlie no control.
struct ChannelSpec {
  BellKind bell_for_zero;
  BellKind bell_for_one;

  ChannelSpec(BellKind for_zero, BellKind for_one)
      : bell_for_zero(for_zero), bell_for_one(for_one) {
    if (bell_for_zero == bell_for_one)
      throw std::invalid_argument("ChannelSpec: the two Bell kinds must differ");
  }

  std::string label() const {
    return std::string(bell_label(bell_for_zero)) + ":0," +
           std::string(bell_label(bell_for_one)) + ":1";
  }
};

/// (1/sqrt2) (|bell_for_zero>_01 |0>_2 + |bell_for_one>_01 |1>_2).
inline StateVector channel_from_spec(const ChannelSpec& spec) {
  std::vector<complex_t> amps(8, complex_t{0.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  for (int t = 0; t < 2; ++t) {
    const StateVector& bell =
        bell_state(t == 0 ? spec.bell_for_zero : spec.bell_for_one);
    for (std::size_t ab = 0; ab < 4; ++ab)
      amps[(ab << 1) | static_cast<std::size_t>(t)] += r * bell.amplitude(ab);
  }
  return StateVector(3, std::move(amps));
}

inline ChannelSpec yang_spec() {
  return ChannelSpec(BellKind::PhiPlus, BellKind::PsiPlus);
}

inline ChannelSpec zhang_spec() {
  return ChannelSpec(BellKind::PsiPlus, BellKind::PhiPlus);
}

/// All ordered pairs of distinct Bell kinds: 12 channels. yang_spec() and
/// zhang_spec() are the two members with named circuit preparations.
inline std::vector<ChannelSpec> enumerate_family() {
  std::vector<ChannelSpec> out;
  out.reserve(12);
  for (BellKind zero : kBellOrder)
    for (BellKind one : kBellOrder)
      if (zero != one) out.emplace_back(zero, one);
  return out;
}

/// Operational GHZ-class test: every single-qubit reduced state is I/2 and
/// every bipartition has Schmidt rank exactly 2.
inline bool is_ghz_class(const StateVector& channel, double tol = kTolerance) {
  if (channel.num_qubits() != 3)
    throw std::invalid_argument("is_ghz_class: expected a 3-qubit state");
  CMatrix half = CMatrix::identity(2);
  half.at(0, 0) = 0.5;
  half.at(1, 1) = 0.5;
  for (std::size_t q = 0; q < 3; ++q) {
    const DensityMatrix rho = reduced_density(channel, {q});
    if (max_abs_diff(rho.matrix(), half) > tol) return false;
    if (schmidt_rank(channel, {q}) != 2) return false;
  }
  return true;
}

/// Biseparable fixture: |+> on Alice's channel qubit, a Bell pair across
/// (Bob, Charlie). Alice's Bell measurement then carries no information to
/// Bob, so no Pauli correction table can exist — the honest failure case.
inline StateVector biseparable_channel() {
  const StateVector plus = apply_gate(StateVector(1), gates::hadamard(), {0});
  return tensor_product(plus, bell_state(BellKind::PhiPlus));
}

}  // namespace qtel
