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

#include <atomic>

#include "spiniso/kernels.hpp"

namespace spiniso::kernels {

namespace {

std::atomic<int> g_backend{-1};

Backend detect() {
  return avx2::available() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

Backend active_backend() {
  int b = g_backend.load(std::memory_order_relaxed);
  if (b < 0) {
    b = static_cast<int>(detect());
    g_backend.store(b, std::memory_order_relaxed);
  }
  return static_cast<Backend>(b);
}

bool set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2::available()) {
    return false;
  }
  g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
  return true;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::matmul(a, b, c, n);
  } else {
    scalar::matmul(a, b, c, n);
  }
}

void matmul_adj_rhs(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::matmul_adj_rhs(a, b, c, n);
  } else {
    scalar::matmul_adj_rhs(a, b, c, n);
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  if (active_backend() == Backend::Avx2) {
    avx2::axpy(alpha, x, y, len);
  } else {
    scalar::axpy(alpha, x, y, len);
  }
}

}  // namespace spiniso::kernels
