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
 * @file protocol.hpp
 * Controlled teleportation over a three-qubit channel. Register layout for a
 * protocol run is |q0 q1 q2 q3> = |unknown, Alice-channel, Bob, Charlie>:
 * Charlie measures q3 in the computational basis, Alice Bell-measures
 * (q0, q1), and Bob repairs q2 with a Pauli keyed on both outcomes.
 *
 * Correction tables are not hard-coded: they are derived by probing each
 * measurement branch with spanning inputs and re-verified on a randomized
 * sweep, so a wrong table is caught mechanically rather than by eye.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bell.hpp"
#include "channel.hpp"
#include "common.hpp"
#include "density_matrix.hpp"
#include "gates.hpp"
#include "measurement.hpp"
#include "random.hpp"
#include "schmidt.hpp"
#include "state_vector.hpp"

namespace qtel {

/// The qubit to be teleported, alpha|0> + beta|1>. Construction rejects
/// unnormalized amplitude pairs; nothing in the library renormalizes on the
/// caller's behalf.
class UnknownQubit {
 public:
  UnknownQubit(complex_t alpha, complex_t beta) : alpha_(alpha), beta_(beta) {
    if (!is_finite(alpha_) || !is_finite(beta_))
      throw NormalizationError("unknown qubit: non-finite amplitude");
    const double n2 = std::norm(alpha_) + std::norm(beta_);
    if (std::abs(n2 - 1.0) > kTolerance) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "unknown qubit violates |alpha|^2 + |beta|^2 = 1 (got %.12g)", n2);
      throw NormalizationError(buf);
    }
  }

  complex_t alpha() const { return alpha_; }
  complex_t beta() const { return beta_; }
  StateVector state() const { return StateVector(1, {alpha_, beta_}); }

 private:
  complex_t alpha_;
  complex_t beta_;
};

inline UnknownQubit random_unknown(SplitMix64& rng) {
  const StateVector s = random_state_vector(1, rng);
  return UnknownQubit(s.amplitude(0), s.amplitude(1));
}

/// Bob's repair operations. ZX is the literal matrix product Z*X.
enum class PauliCorrection { I, X, Z, ZX };

inline constexpr std::array<PauliCorrection, 4> kCorrectionOrder{
    PauliCorrection::I, PauliCorrection::X, PauliCorrection::Z, PauliCorrection::ZX};

inline std::string_view correction_label(PauliCorrection c) {
  switch (c) {
    case PauliCorrection::I: return "I";
    case PauliCorrection::X: return "X";
    case PauliCorrection::Z: return "Z";
    case PauliCorrection::ZX: return "ZX";
  }
  throw std::invalid_argument("correction_label: bad PauliCorrection");
}

inline const UnitaryGate& correction_gate(PauliCorrection c) {
  switch (c) {
    case PauliCorrection::I: return gates::identity();
    case PauliCorrection::X: return gates::pauli_x();
    case PauliCorrection::Z: return gates::pauli_z();
    case PauliCorrection::ZX: return gates::pauli_zx();
  }
  throw std::invalid_argument("correction_gate: bad PauliCorrection");
}

/// One of the 8 joint measurement outcomes (Alice's Bell result, Charlie's
/// bit).
struct BranchKey {
  BellKind bell;
  int charlie_bit;
};

/// Canonical row order for correction tables and branch sweeps: Charlie = 1
/// rows first, each in Bell order.
inline constexpr std::array<BranchKey, 8> correction_rows() {
  return {{{BellKind::PsiPlus, 1},
           {BellKind::PsiMinus, 1},
           {BellKind::PhiPlus, 1},
           {BellKind::PhiMinus, 1},
           {BellKind::PsiPlus, 0},
           {BellKind::PsiMinus, 0},
           {BellKind::PhiPlus, 0},
           {BellKind::PhiMinus, 0}}};
}

/// Thrown when some reachable branch admits no Pauli recovery; carries the
/// offending branch so failures are reportable.
class NoCorrectionFound : public std::runtime_error {
 public:
  NoCorrectionFound(BellKind bell, int charlie_bit)
      : std::runtime_error("no Pauli correction exists for branch (" +
                           std::string(bell_label(bell)) +
                           ", charlie=" + std::to_string(charlie_bit) + ")"),
        bell_(bell),
        charlie_bit_(charlie_bit) {}

  BellKind bell() const { return bell_; }
  int charlie_bit() const { return charlie_bit_; }

 private:
  BellKind bell_;
  int charlie_bit_;
};

/// Outcome-keyed Pauli table plus the verification evidence attached when it
/// was derived.
class CorrectionTable {
 public:
  CorrectionTable() { entries_.fill(PauliCorrection::I); }

  PauliCorrection at(BellKind bell, int charlie_bit) const {
    return entries_[index(bell, charlie_bit)];
  }
  void set(BellKind bell, int charlie_bit, PauliCorrection c) {
    entries_[index(bell, charlie_bit)] = c;
  }

  bool verified() const { return verified_; }
  std::size_t sweep_size() const { return sweep_size_; }
  double max_fidelity_deviation() const { return max_fidelity_deviation_; }

  void record_verification(std::size_t sweep_size, double max_deviation, bool passed) {
    sweep_size_ = sweep_size;
    max_fidelity_deviation_ = max_deviation;
    verified_ = passed;
  }

 private:
  static std::size_t index(BellKind bell, int charlie_bit) {
    if (charlie_bit != 0 && charlie_bit != 1)
      throw std::invalid_argument("CorrectionTable: charlie_bit must be 0 or 1");
    return static_cast<std::size_t>(bell) * 2 + static_cast<std::size_t>(charlie_bit);
  }

  std::array<PauliCorrection, 8> entries_;
  bool verified_ = false;
  std::size_t sweep_size_ = 0;
  double max_fidelity_deviation_ = 0.0;
};

namespace detail {

inline void check_channel(const StateVector& channel) {
  if (channel.num_qubits() != 3)
    throw std::invalid_argument("channel must be a 3-qubit state");
  if (std::abs(channel.norm_squared() - 1.0) > 1e-9)
    throw std::invalid_argument("channel must be normalized");
}

}  // namespace detail

/// |unknown> (x) |channel>: the 4-qubit joint state a protocol run starts
/// from.
inline StateVector build_product_state(const UnknownQubit& unknown,
                                       const StateVector& channel) {
  detail::check_channel(channel);
  return tensor_product(unknown.state(), channel);
}

/// One term of the product state rewritten in the joint measurement basis:
/// coefficient * |bell>_01 (x) |bob_state>_2 (x) |charlie_bit>_3.
struct BellComponent {
  BellKind bell;
  int charlie_bit;
  double coefficient;     // magnitude; phase is absorbed into bob_state
  StateVector bob_state;  // unit 1-qubit state (zero vector when !valid)
  bool valid;
};

/// Expands the product state over all 8 (Bell, Charlie-bit) components, in
/// correction_rows() order. Summing coefficient * basis-term over the
/// components reproduces the input exactly.
inline std::vector<BellComponent> expand_bell_branches(const StateVector& product) {
  if (product.num_qubits() != 4)
    throw std::invalid_argument("expand_bell_branches: expected a 4-qubit state");
  std::vector<BellComponent> out;
  out.reserve(8);
  for (const BranchKey& key : correction_rows()) {
    const StateVector resid = bell_residual(product, 0, 1, key.bell);  // (bob, charlie)
    const std::size_t t = static_cast<std::size_t>(key.charlie_bit);
    std::vector<complex_t> bob{resid.amplitude(0 | t), resid.amplitude(2 | t)};
    const double coeff = std::sqrt(std::norm(bob[0]) + std::norm(bob[1]));
    const bool valid = coeff * coeff > kBranchFloor;
    if (valid) {
      bob[0] /= coeff;
      bob[1] /= coeff;
    } else {
      bob[0] = bob[1] = complex_t{0.0, 0.0};
    }
    out.push_back(BellComponent{key.bell, key.charlie_bit, coeff,
                                StateVector(1, std::move(bob)), valid});
  }
  return out;
}

/// Result of running (or probing) one protocol branch.
struct TeleportOutcome {
  BellKind alice;
  int charlie_bit;
  double probability;     // joint probability of this branch
  StateVector bob_state;  // Bob's qubit after correction
  double fidelity;        // |<unknown|bob_state>|^2
  bool valid;             // false for unreachable (probability ~ 0) branches
};

/// Runs the protocol conditioned on a fixed pair of measurement outcomes.
inline TeleportOutcome run_teleportation(const UnknownQubit& unknown,
                                         const StateVector& channel,
                                         const CorrectionTable& table,
                                         BellKind alice, int charlie_bit) {
  if (charlie_bit != 0 && charlie_bit != 1)
    throw std::invalid_argument("run_teleportation: charlie_bit must be 0 or 1");
  const StateVector product = build_product_state(unknown, channel);
  const auto charlie = measure_computational_branches(product, 3);
  const ComputationalBranch& cb = charlie[static_cast<std::size_t>(charlie_bit)];
  if (!cb.post_state_valid)
    return TeleportOutcome{alice, charlie_bit, 0.0, StateVector(1, {0.0, 0.0}),
                           0.0, false};

  const StateVector resid = bell_residual(cb.post_state, 0, 1, alice);
  const double p_alice = resid.norm_squared();
  if (p_alice <= kBranchFloor)
    return TeleportOutcome{alice, charlie_bit, 0.0, StateVector(1, {0.0, 0.0}),
                           0.0, false};

  StateVector bob = apply_gate(resid.normalized(),
                               correction_gate(table.at(alice, charlie_bit)), {0});
  const double f = transition_probability(unknown.state(), bob);
  return TeleportOutcome{alice,         charlie_bit, cb.probability * p_alice,
                         std::move(bob), f,          true};
}

/// All 8 branches in correction_rows() order.
inline std::array<TeleportOutcome, 8> teleport_branch_sweep(
    const UnknownQubit& unknown, const StateVector& channel,
    const CorrectionTable& table) {
  std::array<TeleportOutcome, 8> out{
      run_teleportation(unknown, channel, table, BellKind::PsiPlus, 1),
      run_teleportation(unknown, channel, table, BellKind::PsiMinus, 1),
      run_teleportation(unknown, channel, table, BellKind::PhiPlus, 1),
      run_teleportation(unknown, channel, table, BellKind::PhiMinus, 1),
      run_teleportation(unknown, channel, table, BellKind::PsiPlus, 0),
      run_teleportation(unknown, channel, table, BellKind::PsiMinus, 0),
      run_teleportation(unknown, channel, table, BellKind::PhiPlus, 0),
      run_teleportation(unknown, channel, table, BellKind::PhiMinus, 0)};
  return out;
}

/// Fully sampled protocol run: Charlie's measurement, then Alice's, both by
/// seeded inverse-CDF draws.
struct SampledTeleport {
  TeleportOutcome outcome;
  RandomSeed next;
};

inline SampledTeleport run_teleportation(const UnknownQubit& unknown,
                                         const StateVector& channel,
                                         const CorrectionTable& table,
                                         RandomSeed seed) {
  const StateVector product = build_product_state(unknown, channel);
  const auto charlie = measure_computational_branches(product, 3);
  const BranchSample cs = sample_branch(charlie, seed);
  const ComputationalBranch& cb = charlie[cs.index];

  const auto alice = measure_bell_branches(cb.post_state, 0, 1);
  const BranchSample as = sample_branch(alice, cs.next);
  const BellBranch& ab = alice[as.index];

  TeleportOutcome out =
      run_teleportation(unknown, channel, table, ab.outcome, cb.outcome);
  return SampledTeleport{std::move(out), as.next};
}

struct DeriveOptions {
  std::size_t sweep_size = 1000;
  RandomSeed seed{0x6a09e667f3bcc908ULL};
  double tolerance = kTolerance;
};

/// Derives the Pauli correction table for a channel from the dynamics alone.
///
/// Each branch is probed with three spanning inputs — (1, 0), (1, 1)/sqrt2
/// and (1, i)/sqrt2 — and the unique Pauli in {I, X, Z, ZX} mapping every
/// probe's Bob state back to its input (up to global phase) is recorded. Two
/// real probes cannot tell I from X on |+>-like branches nor Z from ZX; the
/// complex probe closes that gap. The table is then re-verified on a seeded
/// random sweep and the worst |1 - fidelity| is kept as evidence.
inline CorrectionTable derive_correction_table(const StateVector& channel,
                                               const DeriveOptions& opts = {}) {
  detail::check_channel(channel);
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<UnknownQubit, 3> probes{
      UnknownQubit(1.0, 0.0), UnknownQubit(r, r),
      UnknownQubit(r, complex_t{0.0, r})};

  CorrectionTable table;
  for (const BranchKey& key : correction_rows()) {
    std::vector<PauliCorrection> candidates(kCorrectionOrder.begin(),
                                            kCorrectionOrder.end());
    bool reachable = false;
    for (const UnknownQubit& probe : probes) {
      const StateVector product = build_product_state(probe, channel);
      const auto charlie = measure_computational_branches(product, 3);
      const ComputationalBranch& cb =
          charlie[static_cast<std::size_t>(key.charlie_bit)];
      if (!cb.post_state_valid) continue;
      const StateVector resid = bell_residual(cb.post_state, 0, 1, key.bell);
      if (resid.norm_squared() <= kBranchFloor) continue;
      reachable = true;
      const StateVector bob = resid.normalized();

      std::vector<PauliCorrection> kept;
      for (PauliCorrection c : candidates) {
        const StateVector fixed = apply_gate(bob, correction_gate(c), {0});
        if (equal_up_to_global_phase(probe.state(), fixed, opts.tolerance))
          kept.push_back(c);
      }
      candidates = std::move(kept);
      if (candidates.empty()) throw NoCorrectionFound(key.bell, key.charlie_bit);
    }
    // Unreachable branches keep the identity placeholder; sweeps skip them.
    if (reachable) table.set(key.bell, key.charlie_bit, candidates.front());
  }

  SplitMix64 rng(opts.seed);
  double worst = 0.0;
  for (std::size_t s = 0; s < opts.sweep_size; ++s) {
    const UnknownQubit u = random_unknown(rng);
    for (const TeleportOutcome& out : teleport_branch_sweep(u, channel, table))
      if (out.valid) worst = std::max(worst, std::abs(1.0 - out.fidelity));
  }
  table.record_verification(opts.sweep_size, worst, worst <= opts.tolerance);
  return table;
}

/// One row of the fidelity analysis when Charlie withholds the measurement:
/// Bob's qubit stays entangled with Charlie's and only a mixed state remains
/// after Alice announces the Bell outcome.
struct NoncooperativeRow {
  BellKind alice;
  double probability;        // of Alice's outcome
  StateVector joint_state;   // (Bob, Charlie) given that outcome
  DensityMatrix bob_state;   // Charlie traced out
  double conditional_fidelity;
  double weighted_fidelity;  // probability * conditional_fidelity
};

inline std::array<NoncooperativeRow, 4> noncooperative_analysis(
    const UnknownQubit& unknown, const StateVector& channel) {
  const StateVector product = build_product_state(unknown, channel);
  const StateVector target = unknown.state();

  auto make_row = [&](BellKind kind) {
    const StateVector resid = bell_residual(product, 0, 1, kind);
    const double p = resid.norm_squared();
    if (p <= kBranchFloor)
      throw std::invalid_argument(
          "noncooperative_analysis: Alice outcome has zero probability");
    const StateVector joint = resid.normalized();
    DensityMatrix bob = reduced_density(joint, {0});
    const double f = fidelity(target, bob);
    return NoncooperativeRow{kind, p, joint, std::move(bob), f, p * f};
  };
  return {make_row(BellKind::PsiPlus), make_row(BellKind::PsiMinus),
          make_row(BellKind::PhiPlus), make_row(BellKind::PhiMinus)};
}

/// Separability verdict for the (Bob, Charlie) state conditioned on Alice's
/// outcome. `determinant` is the determinant of the joint state's 2x2
/// coefficient matrix scaled by 2, so for the standard channel it lands on
/// +-(beta^2 - alpha^2) exactly; it vanishes iff the state is a product.
struct SeparabilityVerdict {
  BellKind alice;
  complex_t determinant;
  int rank;            // Schmidt rank across Bob | Charlie
  bool product_state;  // rank == 1
};

inline SeparabilityVerdict refute_separability(const UnknownQubit& unknown,
                                               BellKind alice,
                                               const StateVector& channel) {
  const StateVector product = build_product_state(unknown, channel);
  const StateVector resid = bell_residual(product, 0, 1, alice);
  const double p = resid.norm_squared();
  if (p <= kBranchFloor)
    throw std::invalid_argument(
        "refute_separability: Alice outcome has zero probability");
  const StateVector joint = resid.normalized();
  const complex_t det = 2.0 * (joint.amplitude(0) * joint.amplitude(3) -
                               joint.amplitude(1) * joint.amplitude(2));
  const int rank = schmidt_rank(joint, {0});
  return SeparabilityVerdict{alice, det, rank, rank == 1};
}

inline SeparabilityVerdict refute_separability(const UnknownQubit& unknown,
                                               BellKind alice) {
  return refute_separability(unknown, alice, channel_from_spec(yang_spec()));
}

// ---------------------------------------------------------------------------
// Generalized n-qubit scheme
// ---------------------------------------------------------------------------

/// Largest register the generalized scheme accepts.
inline constexpr std::size_t kMaxGeneralizedQubits = 12;

/// An n-qubit state of the form alpha|x> + sign * beta|x_bar>, where x_bar
/// is the bitwise complement of x. One logical qubit rides on n physical
/// ones.
class GeneralizedState {
 public:
  GeneralizedState(std::size_t n, std::uint64_t x, int sign, complex_t alpha,
                   complex_t beta)
      : n_(n), x_(x), sign_(sign), logical_(alpha, sign >= 0 ? beta : -beta) {
    if (n_ < 1 || n_ > kMaxGeneralizedQubits)
      throw std::out_of_range("GeneralizedState: n must be in [1, " +
                              std::to_string(kMaxGeneralizedQubits) + "]");
    if (x_ >> n_)
      throw std::out_of_range("GeneralizedState: x must fit in n bits");
    if (sign_ != 1 && sign_ != -1)
      throw std::invalid_argument("GeneralizedState: sign must be +1 or -1");
  }

  std::size_t n() const { return n_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t x_bar() const { return ~x_ & ((std::uint64_t{1} << n_) - 1); }
  int sign() const { return sign_; }
  complex_t alpha() const { return logical_.alpha(); }
  complex_t beta() const { return static_cast<double>(sign_) * logical_.beta(); }

  /// The logical qubit alpha|0> + sign*beta|1> carried by the state.
  const UnknownQubit& logical() const { return logical_; }

  StateVector state() const {
    std::vector<complex_t> amps(std::size_t{1} << n_, complex_t{0.0, 0.0});
    amps[x_] = logical_.alpha();
    amps[x_bar()] = logical_.beta();
    return StateVector(n_, std::move(amps));
  }

 private:
  std::size_t n_;
  std::uint64_t x_;
  int sign_;
  UnknownQubit logical_;
};

struct GeneralizedBranch {
  BellKind alice;
  int charlie_bit;
  double probability;
  double fidelity;  // |<psi_in|psi_out>|^2 on the full n-qubit register
  bool valid;
};

struct GeneralizedOutcome {
  std::array<GeneralizedBranch, 8> branches;  // correction_rows() order
  double min_fidelity;                        // over reachable branches
};

namespace detail {

/// Folds alpha|x> + s*beta|x_bar> down to (alpha|0> + s*beta|1>) (x)
/// |x_1..x_{n-1}>: flip qubit 0 into x's frame, then a CNOT ladder from
/// qubit 0 clears the complement structure. Returns the spectator bits.
inline std::uint64_t disentangle_ladder(StateVector& work, std::uint64_t x,
                                        std::size_t n) {
  if ((x >> (n - 1)) & 1u) work = apply_gate(work, gates::pauli_x(), {0});
  for (std::size_t j = 1; j < n; ++j)
    work = apply_gate(work, gates::cnot(), {0, j});
  return (n >= 2) ? (x & ((std::uint64_t{1} << (n - 1)) - 1)) : 0;
}

/// Inverse of disentangle_ladder applied to a fresh logical qubit.
inline StateVector reencode_ladder(const StateVector& logical, std::uint64_t x,
                                   std::uint64_t tail, std::size_t n) {
  std::vector<complex_t> amps(std::size_t{1} << n, complex_t{0.0, 0.0});
  amps[tail] = logical.amplitude(0);
  amps[(std::uint64_t{1} << (n - 1)) | tail] = logical.amplitude(1);
  StateVector out(n, std::move(amps));
  for (std::size_t j = 1; j < n; ++j)
    out = apply_gate(out, gates::cnot(), {0, j});
  if ((x >> (n - 1)) & 1u) out = apply_gate(out, gates::pauli_x(), {0});
  return out;
}

}  // namespace detail

/// Teleports a GeneralizedState through a 3-qubit channel: disentangle the
/// logical qubit, run the standard protocol on it branch by branch, and
/// re-encode Bob's corrected qubit into the original n-qubit form.
inline GeneralizedOutcome generalized_teleport(const GeneralizedState& task,
                                               const StateVector& channel,
                                               const CorrectionTable& table) {
  const StateVector psi_in = task.state();
  StateVector work = psi_in;
  const std::uint64_t tail = detail::disentangle_ladder(work, task.x(), task.n());

  const std::size_t hi = std::size_t{1} << (task.n() - 1);
  const complex_t v0 = work.amplitude(tail);
  const complex_t v1 = work.amplitude(hi | tail);
  if (std::abs(work.norm_squared() - std::norm(v0) - std::norm(v1)) > 1e-12)
    throw std::logic_error("generalized_teleport: ladder failed to disentangle");
  const UnknownQubit logical(v0, v1);

  GeneralizedOutcome out{};
  out.min_fidelity = 1.0;
  std::size_t slot = 0;
  for (const TeleportOutcome& run : teleport_branch_sweep(logical, channel, table)) {
    double f = 0.0;
    if (run.valid) {
      const StateVector psi_out =
          detail::reencode_ladder(run.bob_state, task.x(), tail, task.n());
      f = transition_probability(psi_in, psi_out);
      out.min_fidelity = std::min(out.min_fidelity, f);
    }
    out.branches[slot++] = GeneralizedBranch{run.alice, run.charlie_bit,
                                             run.probability, f, run.valid};
  }
  return out;
}

inline GeneralizedOutcome generalized_teleport(const GeneralizedState& task,
                                               const StateVector& channel) {
  return generalized_teleport(task, channel, derive_correction_table(channel));
}

}  // namespace qtel
