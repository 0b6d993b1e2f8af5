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
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "state_vector.hpp"

namespace qtel {

/// Algorithm identifier recorded in reports so runs can be reproduced.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// Opaque reproducibility token passed through sampling calls by value;
/// every sample returns the successor seed instead of mutating shared state.
struct RandomSeed {
  std::uint64_t value = 0;
};

/// splitmix64: tiny, splittable, passes BigCrush; the usual public-domain
/// constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  explicit SplitMix64(RandomSeed seed) : state_(seed.value) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t state() const { return state_; }
  RandomSeed seed() const { return RandomSeed{state_}; }

 private:
  std::uint64_t state_;
};

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
inline StateVector random_state_vector(std::size_t num_qubits, SplitMix64& rng) {
  std::vector<complex_t> amps(std::size_t{1} << num_qubits);
  for (auto& a : amps) a = complex_t{rng.next_gaussian(), rng.next_gaussian()};
  return StateVector(num_qubits, std::move(amps)).normalized();
}

}  // namespace qtel
