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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spiniso {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Hilbert spaces in this library stay at
/// dimension <= 16, so storage is a flat std::vector and every operation is
/// a plain loop (the hot products are routed through the kernels layer).
class ComplexMatrix {
 public:
  /// Zero-filled matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  cplx trace() const;

  /// True when every entry is finite (no NaN/Inf in either component).
  bool is_finite() const;

  /// Largest entry magnitude.
  double max_abs() const;

  /// Frobenius norm.
  double frobenius_norm() const;

  /// (M + M^dagger) / 2, defined for square matrices.
  ComplexMatrix hermitian_part() const;

  /// this * b^dagger for square matrices of equal dimension.
  ComplexMatrix mul_adjoint(const ComplexMatrix& b) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m) {
    m *= s;
    return m;
  }
  friend ComplexMatrix operator*(ComplexMatrix m, cplx s) {
    m *= s;
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

/// Matrix product. Square same-dimension products go through the dispatched
/// kernels; anything else falls back to the naive triple loop.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: dims multiply, (a (x) b)[(i,k),(j,l)] = a(i,j) b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |m_ij - conj(m_ji)| for a square matrix.
double hermitian_defect(const ComplexMatrix& m);

}  // namespace spiniso
