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
 * @file measurement.hpp
 * Projective measurement as explicit branch enumeration: every outcome is
 * returned with its probability and post-state, and sampling is a separate,
 * seeded step. Zero-probability branches are kept in the list (flagged
 * invalid) so branch indices stay stable.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bell.hpp"
#include "common.hpp"
#include "random.hpp"
#include "state_vector.hpp"

namespace qtel {

/// Probability below which a branch is unreachable and its post-state
/// meaningless.
inline constexpr double kBranchFloor = 1e-12;

struct ComputationalBranch {
  int outcome;             // measured bit
  double probability;
  StateVector post_state;  // measured qubit projected out
  bool post_state_valid;   // false iff probability <= kBranchFloor
};

struct BellBranch {
  BellKind outcome;
  double probability;
  StateVector post_state;  // full register, pair collapsed onto the Bell state
  bool post_state_valid;
};

namespace detail {

inline void check_measured_state(const StateVector& state) {
  if (std::abs(state.norm_squared() - 1.0) > 1e-9)
    throw std::invalid_argument("measurement requires a normalized state");
}

/// Basis index over the register with qubits q1 and q2 removed.
inline std::size_t strip_two(std::size_t index, std::size_t n, std::size_t q1,
                             std::size_t q2) {
  std::size_t r = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (q == q1 || q == q2) continue;
    r = (r << 1) | ((index >> (n - 1 - q)) & 1u);
  }
  return r;
}

}  // namespace detail

/// Measures one qubit in the computational basis. The measured qubit is
/// projected out of the post-states (a 1-qubit register leaves a 0-qubit
/// scalar).
inline std::array<ComputationalBranch, 2> measure_computational_branches(
    const StateVector& state, std::size_t qubit) {
  const std::size_t n = state.num_qubits();
  if (qubit >= n)
    throw std::out_of_range("measure_computational_branches: qubit out of range");
  detail::check_measured_state(state);

  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
  std::array<std::vector<complex_t>, 2> parts{
      std::vector<complex_t>(state.dim() / 2, complex_t{0.0, 0.0}),
      std::vector<complex_t>(state.dim() / 2, complex_t{0.0, 0.0})};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const std::size_t outcome = (i & mask) ? 1 : 0;
    // Remove the measured qubit's bit from the index.
    const std::size_t high = (i >> (n - qubit)) << (n - 1 - qubit);
    const std::size_t low = i & (mask - 1);
    parts[outcome][high | low] = state.amplitude(i);
  }

  auto make_branch = [&](int outcome) {
    StateVector raw(n - 1, std::move(parts[static_cast<std::size_t>(outcome)]));
    const double p = raw.norm_squared();
    const bool valid = p > kBranchFloor;
    return ComputationalBranch{outcome, p, valid ? raw.normalized() : raw, valid};
  };
  return {make_branch(0), make_branch(1)};
}

/// Projection coefficient vector <bell|_q1q2 |state>: the unnormalized
/// residual on the remaining qubits (its squared norm is the branch
/// probability). q1 is the first slot of the Bell pair.
inline StateVector bell_residual(const StateVector& state, std::size_t q1,
                                 std::size_t q2, BellKind kind) {
  const std::size_t n = state.num_qubits();
  if (q1 >= n || q2 >= n)
    throw std::out_of_range("bell_residual: qubit out of range");
  if (q1 == q2) throw std::invalid_argument("bell_residual: qubits must differ");
  const StateVector& bell = bell_state(kind);

  std::vector<complex_t> residual(state.dim() / 4, complex_t{0.0, 0.0});
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const std::size_t a = (i >> (n - 1 - q1)) & 1u;
    const std::size_t b = (i >> (n - 1 - q2)) & 1u;
    residual[detail::strip_two(i, n, q1, q2)] +=
        std::conj(bell.amplitude((a << 1) | b)) * state.amplitude(i);
  }
  return StateVector(n - 2, std::move(residual));
}

/// Joint Bell measurement of qubits (q1, q2). Post-states keep the full
/// register with the measured pair collapsed onto its Bell state, so later
/// operations can still address every original qubit.
inline std::array<BellBranch, 4> measure_bell_branches(const StateVector& state,
                                                       std::size_t q1,
                                                       std::size_t q2) {
  detail::check_measured_state(state);
  const std::size_t n = state.num_qubits();

  auto make_branch = [&](BellKind kind) {
    const StateVector residual = bell_residual(state, q1, q2, kind);
    const double p = residual.norm_squared();
    const bool valid = p > kBranchFloor;
    std::vector<complex_t> post(state.dim(), complex_t{0.0, 0.0});
    if (valid) {
      const StateVector& bell = bell_state(kind);
      const double root_p = std::sqrt(p);
      for (std::size_t i = 0; i < state.dim(); ++i) {
        const std::size_t a = (i >> (n - 1 - q1)) & 1u;
        const std::size_t b = (i >> (n - 1 - q2)) & 1u;
        post[i] = bell.amplitude((a << 1) | b) *
                  residual.amplitude(detail::strip_two(i, n, q1, q2)) / root_p;
      }
    }
    return BellBranch{kind, p, StateVector(n, std::move(post)), valid};
  };

  return {make_branch(BellKind::PsiPlus), make_branch(BellKind::PsiMinus),
          make_branch(BellKind::PhiPlus), make_branch(BellKind::PhiMinus)};
}

struct BranchSample {
  std::size_t index;  // position in the branch list
  RandomSeed next;    // successor seed
};

/// Inverse-CDF sampling over the listed branch order. Takes the seed by
/// value and hands back the successor, so callers can replay or fork runs.
template <typename Branches>
BranchSample sample_branch(const Branches& branches, RandomSeed seed) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& b : branches) {
    total += b.probability;
    ++count;
  }
  if (count == 0) throw std::invalid_argument("sample_branch: no branches");
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("sample_branch: probabilities must sum to 1");

  SplitMix64 rng(seed);
  const double u = rng.next_double();
  double cdf = 0.0;
  std::size_t pick = count - 1;
  std::size_t i = 0;
  for (const auto& b : branches) {
    cdf += b.probability;
    if (u < cdf) {
      pick = i;
      break;
    }
    ++i;
  }
  return BranchSample{pick, rng.seed()};
}

}  // namespace qtel
