// Copyright 2026 The spiniso developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spiniso/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace spiniso {

namespace {

// Off-diagonal Frobenius norm, the quantity driven to zero by the sweeps.
double off_diag_norm(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c) {
        s += std::norm(a(r, c));
      }
    }
  }
  return std::sqrt(s);
}

constexpr double kOffDiagTol = 1e-13;
constexpr int kMaxSweeps = 100;

}  // namespace

EighResult eigh(const ComplexMatrix& m, double hermitian_tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigh requires a square matrix");
  }
  if (hermitian_defect(m) > hermitian_tol) {
    throw std::invalid_argument("eigh requires a Hermitian matrix");
  }

  const std::size_t n = m.rows();
  // Work on the exactly Hermitian average; the defect is below tolerance.
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diag_norm(a) < kOffDiagTol) {
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double h = std::abs(apq);
        if (h == 0.0) {
          continue;
        }
        // Phase-factored complex rotation: with e = apq/|apq| the 2x2
        // problem reduces to a real Jacobi rotation on (app, |apq|, aqq).
        const cplx e = apq / h;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * h);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns p,q of A: A <- A J with J = [[c, s*e],[-s*conj(e), c]].
        for (std::size_t r = 0; r < n; ++r) {
          const cplx arp = a(r, p);
          const cplx arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(e) * arq;
          a(r, q) = s * e * arp + c * arq;
        }
        // Rows p,q of A: A <- J^dag A.
        for (std::size_t col = 0; col < n; ++col) {
          const cplx apc = a(p, col);
          const cplx aqc = a(q, col);
          a(p, col) = c * apc - s * e * aqc;
          a(q, col) = s * std::conj(e) * apc + c * aqc;
        }
        // Accumulate the eigenvector transform: V <- V J.
        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(e) * vrq;
          v(r, q) = s * e * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = a(i, i).real();
  }

  // Ascending eigenvalue order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&values](std::size_t i, std::size_t j) { return values[i] < values[j]; });

  EighResult out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = values[src];
    // Phase convention: largest-magnitude component real and positive.
    std::size_t imax = 0;
    double amax = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double ar = std::abs(v(r, src));
      if (ar > amax) {
        amax = ar;
        imax = r;
      }
    }
    cplx phase{1.0, 0.0};
    if (amax > 0.0) {
      phase = std::conj(v(imax, src)) / amax;
    }
    for (std::size_t r = 0; r < n; ++r) {
      out.vectors(r, k) = phase * v(r, src);
    }
  }
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double hermitian_tol) {
  return eigh(m, hermitian_tol).values;
}

}  // namespace spiniso
