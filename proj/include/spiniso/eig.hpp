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

#include <vector>

#include "spiniso/complex_matrix.hpp"

namespace spiniso {

struct EighResult {
  std::vector<double> values;  ///< real eigenvalues, ascending
  ComplexMatrix vectors;       ///< eigenvectors as columns, same order
};

/// Full eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Each off-diagonal entry is annihilated by a complex plane
/// rotation; sweeps repeat until the off-diagonal Frobenius norm drops
/// below 1e-13 or 100 sweeps have run. Dimensions here never exceed 16,
/// so robustness wins over speed.
///
/// Eigenvector columns carry a fixed phase convention (largest-magnitude
/// component real and positive) so that downstream constructions are
/// deterministic. Throws std::invalid_argument when the input is not
/// square or not Hermitian within hermitian_tol.
EighResult eigh(const ComplexMatrix& m, double hermitian_tol = 1e-10);

/// Eigenvalues only, ascending. Same input contract as eigh.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m,
                                      double hermitian_tol = 1e-10);

}  // namespace spiniso
