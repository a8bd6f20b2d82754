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

#include <cmath>
#include <random>

#include "spiniso/channels.hpp"
#include "spiniso/eig.hpp"
#include "spiniso/isomer.hpp"
#include "test_helpers.hpp"

using spiniso::ComplexMatrix;
using spiniso::cplx;
using spiniso::EighResult;

TEST_CASE("diagonal matrix eigenvalues come back sorted ascending") {
  ComplexMatrix m(3, 3);
  m(0, 0) = cplx{3.0, 0.0};
  m(1, 1) = cplx{1.0, 0.0};
  m(2, 2) = cplx{2.0, 0.0};
  const auto vals = spiniso::eigvals_hermitian(m);
  REQUIRE(vals.size() == 3);
  CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(vals[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vals[2] == doctest::Approx(3.0).epsilon(1e-12));
}

// Frozen spectra: the Werner state has eigenvalues {(1-p')/4 x3, (1+3p')/4}
// and the gas state has rank-2 spectrum {p, 1-p}.
TEST_CASE("known physics spectra") {
  const auto liq = spiniso::rho_liq(spiniso::WernerParams(0.5));
  const auto liq_vals = spiniso::eigvals_hermitian(liq.matrix());
  CHECK(std::abs(liq_vals[0] - 0.125) <= 1e-10);
  CHECK(std::abs(liq_vals[1] - 0.125) <= 1e-10);
  CHECK(std::abs(liq_vals[2] - 0.125) <= 1e-10);
  CHECK(std::abs(liq_vals[3] - 0.625) <= 1e-10);

  const auto gas = spiniso::rho_gas(spiniso::GasMixParams(0.25));
  const auto gas_vals = spiniso::eigvals_hermitian(gas.matrix());
  CHECK(std::abs(gas_vals[0]) <= 1e-10);
  CHECK(std::abs(gas_vals[1]) <= 1e-10);
  CHECK(std::abs(gas_vals[2] - 0.25) <= 1e-10);
  CHECK(std::abs(gas_vals[3] - 0.75) <= 1e-10);
}

TEST_CASE("random Hermitian matrices: residuals, trace and orthonormality") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {2, 3, 4, 5, 8, 16}) {
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix m = spiniso_test::random_hermitian(rng, n);
      const EighResult es = spiniso::eigh(m);

      double trace_sum = 0.0;
      for (double v : es.values) {
        trace_sum += v;
      }
      CHECK(std::abs(trace_sum - m.trace().real()) <= 1e-10);

      // ||m v - lambda v||_inf per eigenpair.
      for (std::size_t k = 0; k < n; ++k) {
        double resid = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          cplx mv{0.0, 0.0};
          for (std::size_t c = 0; c < n; ++c) {
            mv += m(r, c) * es.vectors(c, k);
          }
          resid = std::max(resid, std::abs(mv - es.values[k] * es.vectors(r, k)));
        }
        CHECK(resid <= 1e-9);
      }

      const ComplexMatrix gram = es.vectors.adjoint() * es.vectors;
      CHECK(spiniso::max_abs_diff(gram, ComplexMatrix::identity(n)) <= 1e-10);
    }
  }
}

TEST_CASE("eigenvector phase convention is deterministic") {
  std::mt19937_64 rng(22);
  const ComplexMatrix m = spiniso_test::random_hermitian(rng, 4);
  const EighResult es = spiniso::eigh(m);
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t imax = 0;
    double amax = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
      if (std::abs(es.vectors(r, k)) > amax) {
        amax = std::abs(es.vectors(r, k));
        imax = r;
      }
    }
    CHECK(es.vectors(imax, k).real() > 0.0);
    CHECK(std::abs(es.vectors(imax, k).imag()) <= 1e-12);
  }
}

TEST_CASE("non-Hermitian and non-square inputs are rejected") {
  ComplexMatrix skew(2, 2);
  skew(0, 1) = cplx{1.0, 0.0};
  skew(1, 0) = cplx{2.0, 0.0};
  CHECK_THROWS_AS(spiniso::eigvals_hermitian(skew), std::invalid_argument);

  ComplexMatrix rect(2, 3);
  CHECK_THROWS_AS(spiniso::eigvals_hermitian(rect), std::invalid_argument);
}
