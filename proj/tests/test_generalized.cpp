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

#include <cmath>

#include "qtel/qtel.hpp"

using namespace qtel;

TEST_CASE("generalized state construction", "[generalized]") {
  SECTION("complement and amplitude placement") {
    const GeneralizedState g(3, 0b101, -1, 0.6, 0.8);
    REQUIRE(g.x() == 0b101);
    REQUIRE(g.x_bar() == 0b010);
    REQUIRE(g.sign() == -1);
    const StateVector s = g.state();
    REQUIRE(s.num_qubits() == 3);
    REQUIRE(std::abs(s.amplitude(0b101) - complex_t{0.6, 0.0}) < 1e-15);
    REQUIRE(std::abs(s.amplitude(0b010) - complex_t{-0.8, 0.0}) < 1e-15);
    REQUIRE(std::abs(s.amplitude(0b000)) < 1e-15);
    REQUIRE(s.is_normalized(1e-12));
    // Accessors recover the caller's amplitudes, sign unfolded.
    REQUIRE(g.alpha() == complex_t{0.6, 0.0});
    REQUIRE(g.beta() == complex_t{0.8, 0.0});
  }

  SECTION("single qubit degenerates to the plain unknown state") {
    const GeneralizedState g(1, 0, 1, 0.6, 0.8);
    REQUIRE(g.x_bar() == 1);
    REQUIRE(approx_equal(g.state(), StateVector(1, {0.6, 0.8}), 1e-15));
  }

  SECTION("validation") {
    REQUIRE_THROWS_AS(GeneralizedState(0, 0, 1, 0.6, 0.8), std::out_of_range);
    REQUIRE_THROWS_AS(GeneralizedState(13, 0, 1, 0.6, 0.8), std::out_of_range);
    REQUIRE_THROWS_AS(GeneralizedState(3, 8, 1, 0.6, 0.8), std::out_of_range);
    REQUIRE_THROWS_AS(GeneralizedState(3, 0, 0, 0.6, 0.8), std::invalid_argument);
    REQUIRE_THROWS_AS(GeneralizedState(3, 0, 1, 0.5, 0.5), NormalizationError);
  }
}

TEST_CASE("generalized teleportation is exact for small registers",
          "[generalized]") {
  const StateVector channel = channel_from_spec(yang_spec());
  DeriveOptions opts;
  opts.sweep_size = 50;
  const CorrectionTable table = derive_correction_table(channel, opts);

  SplitMix64 rng(20260501ULL);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      for (int sign : {+1, -1}) {
        const StateVector amp = random_state_vector(1, rng);
        const GeneralizedState task(n, x, sign, amp.amplitude(0),
                                    amp.amplitude(1));
        const GeneralizedOutcome out = generalized_teleport(task, channel, table);
        INFO("n=" << n << " x=" << x << " sign=" << sign);
        REQUIRE(out.min_fidelity == Catch::Approx(1.0).margin(1e-12));
        double total = 0.0;
        for (const GeneralizedBranch& b : out.branches) {
          REQUIRE(b.valid);
          REQUIRE(b.probability == Catch::Approx(0.125).margin(1e-12));
          REQUIRE(b.fidelity == Catch::Approx(1.0).margin(1e-12));
          total += b.probability;
        }
        REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
      }
    }
  }
}

TEST_CASE("generalized teleportation detail checks", "[generalized]") {
  const StateVector yang = channel_from_spec(yang_spec());

  SECTION("worked example: n=3, x=5, negative sign") {
    const GeneralizedState task(3, 5, -1, 0.6, 0.8);
    const GeneralizedOutcome out = generalized_teleport(task, yang);
    REQUIRE(out.min_fidelity == Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("the partner channel works just as well") {
    const StateVector zhang = channel_from_spec(zhang_spec());
    DeriveOptions opts;
    opts.sweep_size = 50;
    const CorrectionTable table = derive_correction_table(zhang, opts);
    const GeneralizedState task(4, 0b1010, 1, complex_t{0.6, 0.0},
                                complex_t{0.0, 0.8});
    const GeneralizedOutcome out = generalized_teleport(task, zhang, table);
    REQUIRE(out.min_fidelity == Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("complex amplitudes with a negative sign") {
    // Fidelity 1 on every branch means each re-encoded output equals the
    // input up to a global phase.
    const GeneralizedState task(2, 0b01, -1, 0.8, complex_t{0.0, 0.6});
    DeriveOptions opts;
    opts.sweep_size = 50;
    const CorrectionTable table = derive_correction_table(yang, opts);
    const GeneralizedOutcome out = generalized_teleport(task, yang, table);
    for (const GeneralizedBranch& b : out.branches)
      REQUIRE(b.fidelity == Catch::Approx(1.0).margin(1e-12));
  }
}
