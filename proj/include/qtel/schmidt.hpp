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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "common.hpp"
#include "density_matrix.hpp"
#include "linalg.hpp"
#include "state_vector.hpp"

namespace qtel {

/// Schmidt coefficients (singular values, descending) of `state` across the
/// bipartition left | rest. Computed from the Gram matrix of the coefficient
/// matrix on the smaller side, i.e. the eigenvalues of the smaller reduced
/// state.
inline std::vector<double> schmidt_coefficients(const StateVector& state,
                                                std::vector<std::size_t> left) {
  const std::size_t n = state.num_qubits();
  const auto l = detail::checked_keep(std::move(left), n);
  if (l.size() == n)
    throw std::invalid_argument("schmidt_coefficients: bipartition is degenerate");

  const std::size_t dl = std::size_t{1} << l.size();
  const std::size_t dr = state.dim() / dl;
  // Coefficient matrix M[left, rest]; Gram side chosen to keep dim small.
  std::vector<std::vector<complex_t>> m(dl, std::vector<complex_t>(dr, complex_t{0.0, 0.0}));
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const auto [li, ri] = detail::split_index(i, n, l);
    m[li][ri] = state.amplitude(i);
  }

  const std::size_t g = std::min(dl, dr);
  CMatrix gram(g);
  if (dl <= dr) {
    for (std::size_t a = 0; a < dl; ++a)
      for (std::size_t b = 0; b < dl; ++b) {
        complex_t acc{0.0, 0.0};
        for (std::size_t e = 0; e < dr; ++e) acc += m[a][e] * std::conj(m[b][e]);
        gram.at(a, b) = acc;
      }
  } else {
    for (std::size_t a = 0; a < dr; ++a)
      for (std::size_t b = 0; b < dr; ++b) {
        complex_t acc{0.0, 0.0};
        for (std::size_t e = 0; e < dl; ++e) acc += m[e][a] * std::conj(m[e][b]);
        gram.at(a, b) = acc;
      }
  }

  auto eig = hermitian_eigenvalues(gram);
  std::vector<double> sv(eig.size());
  for (std::size_t i = 0; i < eig.size(); ++i) sv[i] = std::sqrt(std::max(eig[i], 0.0));
  return sv;  // already descending
}

/// Number of Schmidt coefficients above `tol`.
inline int schmidt_rank(const StateVector& state, std::vector<std::size_t> left,
                        double tol = kSchmidtTolerance) {
  const auto sv = schmidt_coefficients(state, std::move(left));
  int rank = 0;
  for (double s : sv)
    if (s > tol) ++rank;
  return rank;
}

}  // namespace qtel
