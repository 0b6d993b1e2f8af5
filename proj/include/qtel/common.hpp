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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtel {

using complex_t = std::complex<double>;

/// Global numerical tolerance: amplitude equality, normalization and
/// unitarity checks all use this unless a caller overrides it.
inline constexpr double kTolerance = 1e-12;

/// Rank cutoff for Schmidt coefficients. These come out of a Gram matrix,
/// which squares the conditioning: eigenvalue noise at machine epsilon turns
/// into singular-value noise near 1e-8 after the square root, so an exact
/// product state can show a spurious second coefficient of that size. The
/// cutoff sits above that floor while staying below the smallest coefficient
/// the separability check must resolve (~5e-7 for |beta^2 - alpha^2| = 1e-6).
inline constexpr double kSchmidtTolerance = 1e-7;

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 16;

/// Thrown when a pair of amplitudes violates |alpha|^2 + |beta|^2 = 1.
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_finite(complex_t z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace qtel
