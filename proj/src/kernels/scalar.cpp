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

#include "spiniso/kernels.hpp"

// Reference kernels. Plain loops, no tricks: these define the semantics the
// SIMD variants are tested against.

namespace spiniso::kernels::scalar {

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        acc += a[i * n + k] * b[k * n + j];
      }
      c[i * n + j] = acc;
    }
  }
}

void matmul_adj_rhs(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        acc += a[i * n + k] * std::conj(b[j * n + k]);
      }
      c[i * n + j] = acc;
    }
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    y[i] += alpha * x[i];
  }
}

}  // namespace spiniso::kernels::scalar
