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

#include <stdexcept>

#include "spiniso/kernels.hpp"

// Placeholder for builds without the AVX2 translation unit (non-x86 targets
// or compilers lacking -mavx2). Dispatch never routes here because
// available() is false.

namespace spiniso::kernels::avx2 {

bool available() { return false; }

void matmul(const cplx*, const cplx*, cplx*, std::size_t) {
  throw std::logic_error("AVX2 kernels not built");
}

void matmul_adj_rhs(const cplx*, const cplx*, cplx*, std::size_t) {
  throw std::logic_error("AVX2 kernels not built");
}

void axpy(cplx, const cplx*, cplx*, std::size_t) {
  throw std::logic_error("AVX2 kernels not built");
}

}  // namespace spiniso::kernels::avx2
