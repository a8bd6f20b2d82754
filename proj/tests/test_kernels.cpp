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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "spiniso/kernels.hpp"
#include "test_helpers.hpp"

using spiniso::ComplexMatrix;
using spiniso::cplx;
namespace kernels = spiniso::kernels;

namespace {

// Reference product written independently of the library loops.
std::vector<cplx> reference_matmul(const std::vector<cplx>& a, const std::vector<cplx>& b,
                                   std::size_t n) {
  std::vector<cplx> c(n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] += a[i * n + k] * b[k * n + j];
      }
    }
  }
  return c;
}

std::vector<cplx> random_flat(std::mt19937_64& rng, std::size_t len) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(len);
  for (cplx& z : v) {
    z = cplx{g(rng), g(rng)};
  }
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("scalar matmul matches an independent reference") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 2, 3, 4, 5, 8, 16}) {
    const auto a = random_flat(rng, n * n);
    const auto b = random_flat(rng, n * n);
    std::vector<cplx> c(n * n);
    kernels::scalar::matmul(a.data(), b.data(), c.data(), n);
    CHECK(max_diff(c, reference_matmul(a, b, n)) <= 1e-12);
  }
}

TEST_CASE("scalar matmul_adj_rhs equals a * b^dagger") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {1, 2, 3, 4, 5, 8}) {
    const auto a = random_flat(rng, n * n);
    const auto b = random_flat(rng, n * n);
    std::vector<cplx> b_adj(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        b_adj[r * n + c] = std::conj(b[c * n + r]);
      }
    }
    std::vector<cplx> got(n * n);
    kernels::scalar::matmul_adj_rhs(a.data(), b.data(), got.data(), n);
    CHECK(max_diff(got, reference_matmul(a, b_adj, n)) <= 1e-12);
  }
}

TEST_CASE("scalar axpy accumulates alpha * x") {
  std::mt19937_64 rng(13);
  for (std::size_t len : {1, 2, 3, 4, 7, 16, 33}) {
    const auto x = random_flat(rng, len);
    auto y = random_flat(rng, len);
    const auto y0 = y;
    const cplx alpha{0.75, -1.25};
    kernels::scalar::axpy(alpha, x.data(), y.data(), len);
    double m = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      m = std::max(m, std::abs(y[i] - (y0[i] + alpha * x[i])));
    }
    CHECK(m <= 1e-12);
  }
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
  if (!kernels::avx2::available()) {
    MESSAGE("AVX2 not available on this machine; skipping equivalence checks");
    return;
  }
  std::mt19937_64 rng(14);
  for (std::size_t n : {1, 2, 3, 4, 5, 8, 16}) {
    const auto a = random_flat(rng, n * n);
    const auto b = random_flat(rng, n * n);
    std::vector<cplx> ref(n * n);
    std::vector<cplx> got(n * n);

    kernels::scalar::matmul(a.data(), b.data(), ref.data(), n);
    kernels::avx2::matmul(a.data(), b.data(), got.data(), n);
    CHECK(max_diff(ref, got) <= 1e-12);

    kernels::scalar::matmul_adj_rhs(a.data(), b.data(), ref.data(), n);
    kernels::avx2::matmul_adj_rhs(a.data(), b.data(), got.data(), n);
    CHECK(max_diff(ref, got) <= 1e-12);
  }
  for (std::size_t len : {1, 2, 3, 4, 7, 16, 33}) {
    const auto x = random_flat(rng, len);
    auto y_ref = random_flat(rng, len);
    auto y_got = y_ref;
    const cplx alpha{-0.5, 2.0};
    kernels::scalar::axpy(alpha, x.data(), y_ref.data(), len);
    kernels::avx2::axpy(alpha, x.data(), y_got.data(), len);
    CHECK(max_diff(y_ref, y_got) <= 1e-12);
  }
}

TEST_CASE("backend dispatch routes and can be forced") {
  const kernels::Backend initial = kernels::active_backend();
  CHECK(kernels::set_backend(kernels::Backend::Scalar));

  std::mt19937_64 rng(15);
  const std::size_t n = 4;
  const auto a = random_flat(rng, n * n);
  const auto b = random_flat(rng, n * n);
  std::vector<cplx> via_scalar(n * n);
  kernels::matmul(a.data(), b.data(), via_scalar.data(), n);
  CHECK(max_diff(via_scalar, reference_matmul(a, b, n)) <= 1e-12);

  if (kernels::avx2::available()) {
    CHECK(kernels::set_backend(kernels::Backend::Avx2));
    std::vector<cplx> via_avx2(n * n);
    kernels::matmul(a.data(), b.data(), via_avx2.data(), n);
    CHECK(max_diff(via_scalar, via_avx2) <= 1e-12);
  } else {
    CHECK_FALSE(kernels::set_backend(kernels::Backend::Avx2));
  }

  kernels::set_backend(initial);
  CHECK(kernels::backend_name(kernels::Backend::Scalar) != nullptr);
}
