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

#include <cmath>
#include <random>
#include <vector>

#include "spiniso/qcore.hpp"

namespace spiniso_test {

inline spiniso::ComplexMatrix random_complex(std::mt19937_64& rng, std::size_t rows,
                                             std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  spiniso::ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = spiniso::cplx{g(rng), g(rng)};
    }
  }
  return m;
}

inline spiniso::ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const spiniso::ComplexMatrix g = random_complex(rng, n, n);
  return g.hermitian_part();
}

// Wishart construction G G^dagger / Tr: positive semidefinite by build.
inline spiniso::DensityMatrix random_density(std::mt19937_64& rng, std::size_t n) {
  const spiniso::ComplexMatrix g = random_complex(rng, n, n);
  spiniso::ComplexMatrix w = g.mul_adjoint(g);
  w *= spiniso::cplx{1.0, 0.0} / w.trace();
  return spiniso::DensityMatrix(w);
}

inline spiniso::PureState random_ket(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<spiniso::cplx> amps(n);
  double norm_sq = 0.0;
  for (spiniso::cplx& z : amps) {
    z = spiniso::cplx{g(rng), g(rng)};
    norm_sq += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (spiniso::cplx& z : amps) {
    z *= inv;
  }
  return spiniso::PureState(n, std::move(amps));
}

}  // namespace spiniso_test
