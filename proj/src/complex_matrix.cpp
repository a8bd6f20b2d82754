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

#include "spiniso/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "spiniso/kernels.hpp"

namespace spiniso {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = cplx{1.0, 0.0};
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("trace requires a square matrix");
  }
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

bool ComplexMatrix::is_finite() const {
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      return false;
    }
  }
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("hermitian_part requires a square matrix");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::mul_adjoint(const ComplexMatrix& b) const {
  if (rows_ != cols_ || b.rows_ != b.cols_ || rows_ != b.rows_) {
    throw std::invalid_argument("mul_adjoint requires square matrices of equal dimension");
  }
  ComplexMatrix out(rows_, rows_);
  kernels::matmul_adj_rhs(data(), b.data(), out.data(), rows_);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix addition dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += o.data_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix subtraction dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] -= o.data_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : data_) {
    z *= s;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  ComplexMatrix out(a.rows(), b.cols());
  if (a.rows() == a.cols() && b.rows() == b.cols()) {
    kernels::matmul(a.data(), b.data(), out.data(), a.rows());
    return out;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_defect requires a square matrix");
  }
  double d = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return d;
}

}  // namespace spiniso
