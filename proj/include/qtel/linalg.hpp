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
 * @file linalg.hpp
 * Dense complex matrices and a cyclic Jacobi eigensolver for Hermitian
 * matrices. Every matrix this library touches is at most 16x16, so a
 * hand-rolled solver beats pulling in an external linear-algebra stack.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "common.hpp"

namespace qtel {

/// Square complex matrix, row-major, no structural invariants. Building
/// block for density matrices, projectors and gate embeddings.
struct CMatrix {
  std::size_t dim = 0;
  std::vector<complex_t> a;  // dim*dim entries, row-major

  CMatrix() = default;
  explicit CMatrix(std::size_t d) : dim(d), a(d * d, complex_t{0.0, 0.0}) {}

  static CMatrix identity(std::size_t d) {
    CMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
  }

  complex_t& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const complex_t& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline CMatrix matmul(const CMatrix& x, const CMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("matmul: dimension mismatch");
  CMatrix out(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const complex_t xik = x.at(i, k);
      if (xik == complex_t{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < x.dim; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

inline CMatrix adjoint(const CMatrix& m) {
  CMatrix out(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) out.at(j, i) = std::conj(m.at(i, j));
  return out;
}

inline CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.dim * y.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k)
        for (std::size_t l = 0; l < y.dim; ++l)
          out.at(i * y.dim + k, j * y.dim + l) = x.at(i, j) * y.at(k, l);
  return out;
}

inline complex_t trace(const CMatrix& m) {
  complex_t t{0.0, 0.0};
  for (std::size_t i = 0; i < m.dim; ++i) t += m.at(i, i);
  return t;
}

inline double max_abs_diff(const CMatrix& x, const CMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
  return worst;
}

/// Eigenvalues of a Hermitian matrix, sorted descending. Cyclic Jacobi with
/// complex rotations; quadratically convergent, plenty for dim <= 16.
inline std::vector<double> hermitian_eigenvalues(CMatrix m) {
  const std::size_t n = m.dim;
  if (n == 0) throw std::invalid_argument("hermitian_eigenvalues: empty matrix");

  double scale = 0.0;
  for (const auto& z : m.a) scale += std::norm(z);
  scale = std::sqrt(scale);
  if (scale == 0.0) scale = 1.0;
  const double pivot_floor = scale * 1e-18;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(m.at(p, q));
    if (std::sqrt(2.0 * off) <= scale * 1e-15) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex_t apq = m.at(p, q);
        const double mag = std::abs(apq);
        if (mag <= pivot_floor) continue;

        const double app = m.at(p, p).real();
        const double aqq = m.at(q, q).real();
        const double tau = (app - aqq) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complex_t phase = apq / mag;

        // V acts on the (p,q) plane; m <- V^dagger m V zeroes m(p,q).
        const complex_t v11{c, 0.0};
        const complex_t v12 = -s * phase;
        const complex_t v21 = s * std::conj(phase);
        const complex_t v22{c, 0.0};

        for (std::size_t k = 0; k < n; ++k) {
          const complex_t x = m.at(p, k), y = m.at(q, k);
          m.at(p, k) = std::conj(v11) * x + std::conj(v21) * y;
          m.at(q, k) = std::conj(v12) * x + std::conj(v22) * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex_t x = m.at(k, p), y = m.at(k, q);
          m.at(k, p) = x * v11 + y * v21;
          m.at(k, q) = x * v12 + y * v22;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m.at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

}  // namespace qtel
