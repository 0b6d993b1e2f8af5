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
#include <set>

#include "qtel/qtel.hpp"

using namespace qtel;

namespace {
const double kRoot2Inv = 1.0 / std::sqrt(2.0);
}

TEST_CASE("Bell basis uses the project's labeling", "[bell]") {
  SECTION("psi+- ride on |00> and |11>") {
    const StateVector& psi_plus = bell_state(BellKind::PsiPlus);
    REQUIRE(std::abs(psi_plus.amplitude(0) - complex_t{kRoot2Inv, 0.0}) < 1e-15);
    REQUIRE(std::abs(psi_plus.amplitude(3) - complex_t{kRoot2Inv, 0.0}) < 1e-15);
    REQUIRE(std::abs(psi_plus.amplitude(1)) < 1e-15);

    const StateVector& psi_minus = bell_state(BellKind::PsiMinus);
    REQUIRE(std::abs(psi_minus.amplitude(3) - complex_t{-kRoot2Inv, 0.0}) < 1e-15);
  }

  SECTION("phi+- ride on |01> and |10>") {
    const StateVector& phi_plus = bell_state(BellKind::PhiPlus);
    REQUIRE(std::abs(phi_plus.amplitude(1) - complex_t{kRoot2Inv, 0.0}) < 1e-15);
    REQUIRE(std::abs(phi_plus.amplitude(2) - complex_t{kRoot2Inv, 0.0}) < 1e-15);
    REQUIRE(std::abs(phi_plus.amplitude(0)) < 1e-15);

    const StateVector& phi_minus = bell_state(BellKind::PhiMinus);
    REQUIRE(std::abs(phi_minus.amplitude(2) - complex_t{-kRoot2Inv, 0.0}) < 1e-15);
  }

  SECTION("the four states are orthonormal") {
    for (BellKind a : kBellOrder)
      for (BellKind b : kBellOrder) {
        const complex_t ip = bell_state(a).inner_product(bell_state(b));
        REQUIRE(std::abs(ip - (a == b ? complex_t{1.0, 0.0} : complex_t{0.0, 0.0})) <
                1e-15);
      }
  }

  SECTION("labels round-trip") {
    for (BellKind k : kBellOrder) REQUIRE(bell_from_label(bell_label(k)) == k);
    REQUIRE_THROWS_AS(bell_from_label("psi"), std::invalid_argument);
  }
}

TEST_CASE("channel preparation circuit", "[channel]") {
  SECTION("input (0,0,1) yields the standard channel") {
    const StateVector ch = prepare_channel(0, 0, 1);
    // (|001> + |010> + |100> + |111>) / 2
    for (std::size_t i : {1u, 2u, 4u, 7u})
      REQUIRE(std::abs(ch.amplitude(i) - complex_t{0.5, 0.0}) < 1e-12);
    for (std::size_t i : {0u, 3u, 5u, 6u}) REQUIRE(std::abs(ch.amplitude(i)) < 1e-12);
  }

  SECTION("input (0,0,0) yields the partner channel") {
    const StateVector ch = prepare_channel(0, 0, 0);
    // (|000> + |011> + |110> + |101>) / 2
    for (std::size_t i : {0u, 3u, 6u, 5u})
      REQUIRE(std::abs(ch.amplitude(i) - complex_t{0.5, 0.0}) < 1e-12);
    for (std::size_t i : {1u, 2u, 4u, 7u}) REQUIRE(std::abs(ch.amplitude(i)) < 1e-12);
  }

  SECTION("all eight basis inputs give normalized GHZ-class states") {
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v)
        for (int w = 0; w < 2; ++w) {
          const StateVector ch = prepare_channel(u, v, w);
          REQUIRE(ch.is_normalized(1e-12));
          REQUIRE(is_ghz_class(ch));
        }
  }

  SECTION("rejects non-bit inputs") {
    REQUIRE_THROWS_AS(prepare_channel(0, 2, 0), std::invalid_argument);
  }
}

TEST_CASE("channels from Bell-pair specs", "[channel]") {
  SECTION("the two named specs reproduce the circuit outputs exactly") {
    REQUIRE(approx_equal(channel_from_spec(yang_spec()), prepare_channel(0, 0, 1),
                         1e-12));
    REQUIRE(approx_equal(channel_from_spec(zhang_spec()), prepare_channel(0, 0, 0),
                         1e-12));
  }

  SECTION("diagonal pairs are rejected") {
    REQUIRE_THROWS_AS(ChannelSpec(BellKind::PsiPlus, BellKind::PsiPlus),
                      std::invalid_argument);
  }

  SECTION("spec labels") {
    REQUIRE(yang_spec().label() == "phi+:0,psi+:1");
    REQUIRE(zhang_spec().label() == "psi+:0,phi+:1");
  }
}

TEST_CASE("channel family", "[channel][family]") {
  const auto family = enumerate_family();

  SECTION("twelve distinct members") {
    REQUIRE(family.size() == 12);
    std::set<std::string> labels;
    for (const ChannelSpec& spec : family) labels.insert(spec.label());
    REQUIRE(labels.size() == 12);
    REQUIRE(labels.count("phi+:0,psi+:1") == 1);  // yang
    REQUIRE(labels.count("psi+:0,phi+:1") == 1);  // zhang
  }

  SECTION("every member is a normalized GHZ-class state") {
    for (const ChannelSpec& spec : family) {
      const StateVector ch = channel_from_spec(spec);
      REQUIRE(ch.is_normalized(1e-12));
      REQUIRE(is_ghz_class(ch));
      // All three single-qubit reductions are maximally mixed.
      for (std::size_t q = 0; q < 3; ++q) {
        const DensityMatrix rho = reduced_density(ch, {q});
        REQUIRE(std::abs(rho.entry(0, 0) - complex_t{0.5, 0.0}) < 1e-12);
        REQUIRE(std::abs(rho.entry(1, 1) - complex_t{0.5, 0.0}) < 1e-12);
        REQUIRE(std::abs(rho.entry(0, 1)) < 1e-12);
      }
      // Rank 2 across every bipartition.
      for (std::size_t q = 0; q < 3; ++q) REQUIRE(schmidt_rank(ch, {q}) == 2);
    }
  }
}

TEST_CASE("biseparable fixture", "[channel]") {
  const StateVector ch = biseparable_channel();
  REQUIRE(ch.num_qubits() == 3);
  REQUIRE(ch.is_normalized(1e-12));
  // Alice's channel qubit factorizes: rank 1 across the {0} cut.
  REQUIRE(schmidt_rank(ch, {0}) == 1);
  REQUIRE_FALSE(is_ghz_class(ch));
}
