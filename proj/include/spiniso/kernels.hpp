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

// Arithmetic kernels behind the matrix layer. Scalar reference
// implementations live in kernels::scalar; an AVX2+FMA variant (compiled in
// its own translation unit) lives in kernels::avx2 and is picked at runtime
// when the CPU supports it. The two are equivalence-tested against each
// other. Output buffers must not alias the inputs.

namespace spiniso::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// Backend used by the dispatched entry points. Detected once on first use.
Backend active_backend();

/// Force a backend; returns false (and changes nothing) when it is not
/// available on this machine.
bool set_backend(Backend b);

const char* backend_name(Backend b);

// c = a * b for n x n row-major complex matrices.
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n);
// c = a * b^dagger for n x n row-major complex matrices.
void matmul_adj_rhs(const cplx* a, const cplx* b, cplx* c, std::size_t n);
// y += alpha * x over len complex elements.
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);

namespace scalar {
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void matmul_adj_rhs(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
}  // namespace scalar

namespace avx2 {
/// True when the AVX2 translation unit was built and the CPU reports
/// AVX2 + FMA. The entry points below throw std::logic_error otherwise.
bool available();
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void matmul_adj_rhs(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
}  // namespace avx2

}  // namespace spiniso::kernels
