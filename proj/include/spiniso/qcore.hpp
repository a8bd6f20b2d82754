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

#include <cstddef>
#include <vector>

#include "spiniso/complex_matrix.hpp"
#include "spiniso/eig.hpp"
#include "spiniso/errors.hpp"

// Exact dense linear algebra for small Hilbert spaces: states, density
// matrices, tensor structure, partial trace, purification, Hermitian
// spectra and the scalar diagnostics built on them.
//
// Two-qubit basis ordering is fixed globally as |00>, |01>, |10>, |11>,
// with the FIRST tensor factor (proton 1) as the slowest-varying index.
// Every matrix in this library is written in that order.

namespace spiniso {

/// Validation tolerance applied uniformly at type boundaries.
inline constexpr double kValidationTol = 1e-10;

/// Normalized state vector on a d-dimensional Hilbert space.
/// The 2-norm of the amplitudes must be 1 within 1e-10.
class PureState {
 public:
  PureState(std::size_t dim, std::vector<cplx> amplitudes);

  std::size_t dim() const { return dim_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(std::size_t i) const { return amps_[i]; }

 private:
  std::size_t dim_;
  std::vector<cplx> amps_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix. Construction
/// validates all three invariants at 1e-10 (PSD via the Jacobi spectrum)
/// and then stores the exact Hermitian part, so diagonals stay real.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Hermitian matrix representing a measurable quantity.
class Observable {
 public:
  explicit Observable(const ComplexMatrix& m);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Tensor factorization label for partial traces: dim_a * dim_b must equal
/// the dimension of the state it is applied to.
struct BipartiteSplit {
  BipartiteSplit(std::size_t a, std::size_t b);
  std::size_t dim_a;
  std::size_t dim_b;
};

enum class Subsystem { A, B };

enum class BellSign { Plus, Minus };

// -- State constructors ----------------------------------------------------

/// Computational basis ket |index> on a dim-dimensional space.
PureState basis_ket(std::size_t dim, std::size_t index);

/// Bell states |Psi+-> = (|01> +- |10>)/sqrt(2).
PureState bell_psi(BellSign sign);

/// The equal-weight two-proton superposition
///   |psi> = |Psi->/2 + (|Psi+> + |00> + |11>)/2,
/// which works out to amplitudes (1/2, 1/sqrt(2), 0, 1/2): the |10>
/// contributions of the two Bell terms cancel.
PureState gas_pure_state();

/// Rank-1 projector |k><k|.
DensityMatrix density_from_ket(const PureState& k);

/// <a|b>.
cplx inner(const PureState& a, const PureState& b);

// -- Pauli / identity building blocks --------------------------------------

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// -- Structural operations --------------------------------------------------

/// Trace out one tensor factor. keep selects the factor that survives.
DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSplit& split,
                            Subsystem keep);

/// Pure state on dim^2 whose reduced state over the ancilla reproduces rho:
/// sum_i sqrt(lambda_i) |e_i> (x) |i>, with the ancilla as the SECOND tensor
/// factor and Schmidt indices assigned in descending eigenvalue order.
PureState purify(const DensityMatrix& rho);

// -- Scalar diagnostics ------------------------------------------------------

/// Tr rho^2, in (0, 1].
double purity(const DensityMatrix& rho);

/// -sum lambda log2 lambda in bits, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// <k|rho|k>, real up to a 1e-12 imaginary residue.
double fidelity_with_ket(const DensityMatrix& rho, const PureState& k);

/// Tr(rho O), real for Hermitian inputs.
double expectation(const DensityMatrix& rho, const Observable& obs);

/// (1/2) sum |eig(a - b)|, in [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace spiniso
