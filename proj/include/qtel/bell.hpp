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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "common.hpp"
#include "state_vector.hpp"

namespace qtel {

/// Bell basis, in the labeling this library standardizes on throughout:
///
///   psi+- = (|00> +- |11>) / sqrt(2)
///   phi+- = (|01> +- |10>) / sqrt(2)
///
/// Note this swaps psi and phi relative to some textbooks; every table and
/// report in the project uses the labeling above.
enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellKind, 4> kBellOrder{
    BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus, BellKind::PhiMinus};

inline std::string_view bell_label(BellKind kind) {
  switch (kind) {
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
  }
  throw std::invalid_argument("bell_label: bad BellKind");
}

inline BellKind bell_from_label(std::string_view label) {
  for (BellKind k : kBellOrder)
    if (bell_label(k) == label) return k;
  throw std::invalid_argument("bell_from_label: unknown label '" + std::string(label) + "'");
}

inline const StateVector& bell_state(BellKind kind) {
  static const double r = 1.0 / std::sqrt(2.0);
  static const StateVector psi_plus(2, {r, 0.0, 0.0, r});
  static const StateVector psi_minus(2, {r, 0.0, 0.0, -r});
  static const StateVector phi_plus(2, {0.0, r, r, 0.0});
  static const StateVector phi_minus(2, {0.0, r, -r, 0.0});
  switch (kind) {
    case BellKind::PsiPlus: return psi_plus;
    case BellKind::PsiMinus: return psi_minus;
    case BellKind::PhiPlus: return phi_plus;
    case BellKind::PhiMinus: return phi_minus;
  }
  throw std::invalid_argument("bell_state: bad BellKind");
}

}  // namespace qtel
