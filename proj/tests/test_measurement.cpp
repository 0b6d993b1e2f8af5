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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <vector>

#include "qtel/qtel.hpp"
#include "support/oracles.hpp"

using namespace qtel;

TEST_CASE("computational measurement on fixed states", "[measurement]") {
  SECTION("|0> collapses deterministically to a 0-qubit scalar") {
    const auto branches = measure_computational_branches(StateVector(1), 0);
    REQUIRE(branches[0].outcome == 0);
    REQUIRE(branches[0].probability == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(branches[0].post_state_valid);
    REQUIRE(branches[0].post_state.num_qubits() == 0);
    REQUIRE(std::abs(branches[0].post_state.amplitude(0) - complex_t{1.0, 0.0}) <
            1e-15);
    REQUIRE(branches[1].probability == Catch::Approx(0.0).margin(1e-15));
    REQUIRE_FALSE(branches[1].post_state_valid);
  }

  SECTION("|+> splits evenly") {
    const StateVector plus = apply_gate(StateVector(1), gates::hadamard(), {0});
    const auto branches = measure_computational_branches(plus, 0);
    REQUIRE(branches[0].probability == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(branches[1].probability == Catch::Approx(0.5).margin(1e-12));
  }

  SECTION("measuring the middle qubit of |101> keeps the outer bits") {
    const StateVector s = StateVector::basis(3, 0b101);
    const auto branches = measure_computational_branches(s, 1);
    REQUIRE(branches[0].probability == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(approx_equal(branches[0].post_state, StateVector::basis(2, 0b11), 1e-15));
  }

  SECTION("rejects out-of-range qubits and unnormalized states") {
    REQUIRE_THROWS_AS(measure_computational_branches(StateVector(1), 1),
                      std::out_of_range);
    StateVector bad(1, {complex_t{0.5, 0.0}, complex_t{0.0, 0.0}});
    REQUIRE_THROWS_AS(measure_computational_branches(bad, 0), std::invalid_argument);
  }
}

TEST_CASE("computational measurement on random states", "[measurement]") {
  SplitMix64 rng(20260301ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 3);
    const StateVector s = random_state_vector(n, rng);
    const std::size_t q = static_cast<std::size_t>(rng.next_u64() % n);
    const auto branches = measure_computational_branches(s, q);

    // Probabilities sum to one; valid posts are normalized.
    REQUIRE(branches[0].probability + branches[1].probability ==
            Catch::Approx(1.0).margin(1e-12));
    for (const auto& b : branches) {
      if (b.post_state_valid) REQUIRE(b.post_state.is_normalized(1e-12));
    }

    // No-signaling: mixing the branch posts reproduces the reduced state of
    // the untouched qubits.
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k)
      if (k != q) rest.push_back(k);
    const DensityMatrix expected = reduced_density(s, rest);
    CMatrix mix(expected.matrix().dim);
    for (const auto& b : branches) {
      if (!b.post_state_valid) continue;
      const CMatrix proj = DensityMatrix::from_pure(b.post_state).matrix();
      for (std::size_t r = 0; r < mix.dim; ++r)
        for (std::size_t c = 0; c < mix.dim; ++c)
          mix.at(r, c) += b.probability * proj.at(r, c);
    }
    REQUIRE(max_abs_diff(mix, expected.matrix()) < 1e-12);
  }
}

TEST_CASE("Bell measurement branches", "[measurement]") {
  SplitMix64 rng(20260302ULL);

  SECTION("uniform product input splits 1/4 each") {
    // |0>|+> on the measured pair overlaps every Bell state with weight 1/2,
    // so all four branches carry probability 1/4. Tensor a random spectator.
    const StateVector zp = apply_gate(StateVector(2), gates::hadamard(), {1});
    const StateVector s = tensor_product(zp, random_state_vector(1, rng));
    const auto branches = measure_bell_branches(s, 0, 1);
    for (const auto& b : branches) {
      REQUIRE(b.probability == Catch::Approx(0.25).margin(1e-12));
      REQUIRE(b.post_state_valid);
      REQUIRE(b.post_state.num_qubits() == 3);
      REQUIRE(b.post_state.is_normalized(1e-12));
    }
  }

  SECTION("branch reconstruction recovers the input state") {
    for (int trial = 0; trial < 10; ++trial) {
      const StateVector s = random_state_vector(3, rng);
      const auto branches = measure_bell_branches(s, 0, 2);
      std::vector<complex_t> sum(s.dim(), complex_t{0.0, 0.0});
      double total = 0.0;
      for (const auto& b : branches) {
        total += b.probability;
        if (!b.post_state_valid) continue;
        const double w = std::sqrt(b.probability);
        for (std::size_t i = 0; i < s.dim(); ++i)
          sum[i] += w * b.post_state.amplitude(i);
      }
      REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
      for (std::size_t i = 0; i < s.dim(); ++i)
        REQUIRE(std::abs(sum[i] - s.amplitude(i)) < 1e-13);
    }
  }

  SECTION("residuals factorize for product preparations") {
    // <bell|(|a>|b>) probability = |<bell|ab>|^2; check via bell_residual.
    const StateVector s = tensor_product(random_state_vector(2, rng),
                                         random_state_vector(1, rng));
    double total = 0.0;
    for (BellKind kind : kBellOrder) {
      const StateVector resid = bell_residual(s, 0, 1, kind);
      REQUIRE(resid.num_qubits() == 1);
      total += resid.norm_squared();
    }
    REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("unreachable branches are flagged") {
    // |00> spectator-free: phi+- components vanish.
    const auto branches = measure_bell_branches(StateVector(2), 0, 1);
    REQUIRE(branches[0].probability == Catch::Approx(0.5).margin(1e-12));  // psi+
    REQUIRE(branches[1].probability == Catch::Approx(0.5).margin(1e-12));  // psi-
    REQUIRE_FALSE(branches[2].post_state_valid);                           // phi+
    REQUIRE_FALSE(branches[3].post_state_valid);                           // phi-
  }

  SECTION("argument validation") {
    const StateVector s(3);
    REQUIRE_THROWS_AS(bell_residual(s, 0, 0, BellKind::PsiPlus),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(bell_residual(s, 0, 3, BellKind::PsiPlus), std::out_of_range);
  }
}

TEST_CASE("branch sampling", "[measurement][random]") {
  // |0>|+> splits evenly across all four Bell branches (see above), which
  // makes the frequency check below a genuine four-way uniformity test.
  const StateVector zp = apply_gate(StateVector(2), gates::hadamard(), {1});
  const auto branches = measure_bell_branches(zp, 0, 1);

  SECTION("same seed, same pick; successor seed advances") {
    const BranchSample first = sample_branch(branches, RandomSeed{42});
    const BranchSample again = sample_branch(branches, RandomSeed{42});
    REQUIRE(first.index == again.index);
    REQUIRE(first.next.value == again.next.value);
    REQUIRE(first.next.value != 42ULL);

    // Replaying from the successor gives the same chain.
    const BranchSample second = sample_branch(branches, first.next);
    const BranchSample second_again = sample_branch(branches, first.next);
    REQUIRE(second.index == second_again.index);
  }

  SECTION("empirical frequencies match a uniform 1/4 distribution") {
    std::array<std::size_t, 4> counts{};
    RandomSeed seed{777};
    const int kTrials = 100000;
    for (int t = 0; t < kTrials; ++t) {
      const BranchSample pick = sample_branch(branches, seed);
      ++counts[pick.index];
      seed = pick.next;
    }
    // 3-sigma band around p = 1/4: sigma = sqrt(p(1-p)/N).
    const double sigma = std::sqrt(0.25 * 0.75 / kTrials);
    for (std::size_t c : counts) {
      const double freq = static_cast<double>(c) / kTrials;
      REQUIRE(std::abs(freq - 0.25) < 3.0 * sigma);
    }
  }

  SECTION("rejects probability lists that do not sum to one") {
    std::vector<ComputationalBranch> bad;
    bad.push_back(ComputationalBranch{0, 0.25, StateVector(1), true});
    REQUIRE_THROWS_AS(sample_branch(bad, RandomSeed{1}), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_branch(std::vector<ComputationalBranch>{}, RandomSeed{1}),
                      std::invalid_argument);
  }
}
