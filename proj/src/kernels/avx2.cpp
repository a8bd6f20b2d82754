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

#include <immintrin.h>

#include "spiniso/kernels.hpp"

// AVX2 + FMA kernels. One __m256d holds two complex doubles as
// [re0 im0 re1 im1]. Complex products keep separate real-broadcast and
// imag-broadcast accumulators and combine them once with addsub, so the
// inner loop is two FMAs per vector. This TU is compiled with
// -mavx2 -mfma; callers must gate on available().

namespace spiniso::kernels::avx2 {

bool available() {
#if defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

inline const double* as_d(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_d(cplx* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  const std::size_t jv = n & ~std::size_t(1);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* arow = a + i * n;
    for (std::size_t j = 0; j < jv; j += 2) {
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d av =
            _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(as_d(arow + k)));
        const __m256d ar = _mm256_movedup_pd(av);
        const __m256d ai = _mm256_permute_pd(av, 0xF);
        const __m256d bv = _mm256_loadu_pd(as_d(b + k * n + j));
        const __m256d bs = _mm256_permute_pd(bv, 0x5);
        acc_re = _mm256_fmadd_pd(ar, bv, acc_re);
        acc_im = _mm256_fmadd_pd(ai, bs, acc_im);
      }
      // even lanes: sum(ar*br - ai*bi), odd lanes: sum(ar*bi + ai*br)
      _mm256_storeu_pd(as_d(c + i * n + j), _mm256_addsub_pd(acc_re, acc_im));
    }
    for (std::size_t j = jv; j < n; ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        acc += arow[k] * b[k * n + j];
      }
      c[i * n + j] = acc;
    }
  }
}

void matmul_adj_rhs(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  const std::size_t kv = n & ~std::size_t(1);
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* arow = a + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx* brow = b + j * n;
      __m256d acc1 = zero;
      __m256d acc2 = zero;
      for (std::size_t k = 0; k < kv; k += 2) {
        const __m256d av = _mm256_loadu_pd(as_d(arow + k));
        const __m256d bv = _mm256_loadu_pd(as_d(brow + k));
        const __m256d ar = _mm256_movedup_pd(av);
        const __m256d ai = _mm256_permute_pd(av, 0xF);
        const __m256d bs = _mm256_permute_pd(bv, 0x5);
        acc1 = _mm256_fmadd_pd(ar, bv, acc1);
        acc2 = _mm256_fmadd_pd(ai, bs, acc2);
      }
      // lane pairs hold conj(a)*b: real = ar*br + ai*bi, imag = ar*bi - ai*br
      const __m256d comb = _mm256_addsub_pd(acc1, _mm256_sub_pd(zero, acc2));
      const __m128d lo = _mm256_castpd256_pd128(comb);
      const __m128d hi = _mm256_extractf128_pd(comb, 1);
      const __m128d s = _mm_add_pd(lo, hi);
      double re_im[2];
      _mm_storeu_pd(re_im, s);
      // c[i][j] = conj(sum conj(a_k) b_k) = sum a_k conj(b_k)
      cplx acc{re_im[0], -re_im[1]};
      for (std::size_t k = kv; k < n; ++k) {
        acc += arow[k] * std::conj(brow[k]);
      }
      c[i * n + j] = acc;
    }
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
  const std::size_t lv = len & ~std::size_t(1);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  for (std::size_t i = 0; i < lv; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_d(x + i));
    const __m256d yv = _mm256_loadu_pd(as_d(y + i));
    const __m256d xs = _mm256_permute_pd(xv, 0x5);
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(ar, xv), _mm256_mul_pd(ai, xs));
    _mm256_storeu_pd(as_d(y + i), _mm256_add_pd(yv, prod));
  }
  for (std::size_t i = lv; i < len; ++i) {
    y[i] += alpha * x[i];
  }
}

}  // namespace spiniso::kernels::avx2
