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

#include "spiniso/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace spiniso {

namespace {

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& z : v) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

}  // namespace

PureState::PureState(std::size_t dim, std::vector<cplx> amplitudes)
    : dim_(dim), amps_(std::move(amplitudes)) {
  if (dim_ == 0) {
    throw std::invalid_argument("PureState dimension must be positive");
  }
  if (amps_.size() != dim_) {
    throw std::invalid_argument("PureState amplitude count must equal dim");
  }
  for (const cplx& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("PureState amplitudes must be finite");
    }
  }
  if (std::abs(norm2(amps_) - 1.0) > kValidationTol) {
    throw ValidationError("PureState amplitudes must have unit 2-norm");
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : matrix_(m.rows(), m.cols()) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("DensityMatrix must be square");
  }
  if (!m.is_finite()) {
    throw ValidationError("DensityMatrix entries must be finite");
  }
  if (hermitian_defect(m) > kValidationTol) {
    throw ValidationError("DensityMatrix must be Hermitian within 1e-10");
  }
  if (std::abs(m.trace() - cplx{1.0, 0.0}) > kValidationTol) {
    throw ValidationError("DensityMatrix must have unit trace within 1e-10");
  }
  // Stored as the exact Hermitian part: diagonals stay real and downstream
  // spectra are safe against sub-tolerance asymmetry.
  matrix_ = m.hermitian_part();
  const std::vector<double> eig = eigvals_hermitian(matrix_, kValidationTol);
  if (eig.front() < -kValidationTol) {
    throw ValidationError("DensityMatrix must be positive semidefinite within 1e-10");
  }
}

Observable::Observable(const ComplexMatrix& m) : matrix_(m.rows(), m.cols()) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("Observable must be square");
  }
  if (!m.is_finite()) {
    throw ValidationError("Observable entries must be finite");
  }
  if (hermitian_defect(m) > kValidationTol) {
    throw ValidationError("Observable must be Hermitian within 1e-10");
  }
  matrix_ = m.hermitian_part();
}

BipartiteSplit::BipartiteSplit(std::size_t a, std::size_t b) : dim_a(a), dim_b(b) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("BipartiteSplit factors must be positive");
  }
}

PureState basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::invalid_argument("basis_ket index out of range");
  }
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[index] = cplx{1.0, 0.0};
  return PureState(dim, std::move(amps));
}

PureState bell_psi(BellSign sign) {
  // sqrt(0.5) is the correctly rounded 1/sqrt(2); 1/sqrt(2.0) is an ulp off.
  const double inv_sqrt2 = std::sqrt(0.5);
  const double s = (sign == BellSign::Plus) ? inv_sqrt2 : -inv_sqrt2;
  return PureState(4, {cplx{0.0, 0.0}, cplx{inv_sqrt2, 0.0}, cplx{s, 0.0}, cplx{0.0, 0.0}});
}

PureState gas_pure_state() {
  // |Psi->/2 + (|Psi+> + |00> + |11>)/2, assembled term by term. The |10>
  // amplitudes of the two Bell terms cancel exactly.
  const PureState minus = bell_psi(BellSign::Minus);
  const PureState plus = bell_psi(BellSign::Plus);
  std::vector<cplx> amps(4, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < 4; ++i) {
    amps[i] = 0.5 * minus.amplitude(i) + 0.5 * plus.amplitude(i);
  }
  amps[0] += cplx{0.5, 0.0};
  amps[3] += cplx{0.5, 0.0};
  return PureState(4, std::move(amps));
}

DensityMatrix density_from_ket(const PureState& k) {
  const std::size_t d = k.dim();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = k.amplitude(r) * std::conj(k.amplitude(c));
    }
  }
  return DensityMatrix(m);
}

cplx inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner product dimension mismatch");
  }
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return s;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx{1.0, 0.0};
  m(1, 0) = cplx{1.0, 0.0};
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx{0.0, -1.0};
  m(1, 0) = cplx{0.0, 1.0};
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = cplx{1.0, 0.0};
  m(1, 1) = cplx{-1.0, 0.0};
  return m;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSplit& split,
                            Subsystem keep) {
  const std::size_t da = split.dim_a;
  const std::size_t db = split.dim_b;
  if (da * db != rho.dim()) {
    throw std::invalid_argument("partial_trace split inconsistent with state dimension");
  }
  const ComplexMatrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < da; ++j) {
        cplx s{0.0, 0.0};
        for (std::size_t k = 0; k < db; ++k) {
          s += m(i * db + k, j * db + k);
        }
        out(i, j) = s;
      }
    }
    return DensityMatrix(out);
  }
  ComplexMatrix out(db, db);
  for (std::size_t k = 0; k < db; ++k) {
    for (std::size_t l = 0; l < db; ++l) {
      cplx s{0.0, 0.0};
      for (std::size_t i = 0; i < da; ++i) {
        s += m(i * db + k, i * db + l);
      }
      out(k, l) = s;
    }
  }
  return DensityMatrix(out);
}

PureState purify(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const EighResult es = eigh(rho.matrix(), kValidationTol);
  // Schmidt indices in descending eigenvalue order; ancilla is the SECOND
  // tensor factor, so eigenvector e_i lands at amplitudes [r*d + i].
  std::vector<cplx> amps(d * d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t src = d - 1 - i;  // eigh sorts ascending
    const double lambda = std::max(0.0, es.values[src]);
    if (lambda == 0.0) {
      continue;
    }
    const double w = std::sqrt(lambda);
    for (std::size_t r = 0; r < d; ++r) {
      amps[r * d + i] += w * es.vectors(r, src);
    }
  }
  // Eigenvalues sum to 1 only within tolerance; renormalize the residue away.
  const double n = norm2(amps);
  for (cplx& z : amps) {
    z /= n;
  }
  return PureState(d * d, std::move(amps));
}

double purity(const DensityMatrix& rho) {
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  const ComplexMatrix& m = rho.matrix();
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      s += std::norm(m(r, c));
    }
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const std::vector<double> eig = eigvals_hermitian(rho.matrix(), kValidationTol);
  double h = 0.0;
  for (double lambda : eig) {
    if (lambda > 0.0) {
      h -= lambda * std::log2(lambda);
    }
  }
  return h;
}

double fidelity_with_ket(const DensityMatrix& rho, const PureState& k) {
  if (rho.dim() != k.dim()) {
    throw std::invalid_argument("fidelity_with_ket dimension mismatch");
  }
  const ComplexMatrix& m = rho.matrix();
  cplx s{0.0, 0.0};
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      s += std::conj(k.amplitude(r)) * m(r, c) * k.amplitude(c);
    }
  }
  return s.real();
}

double expectation(const DensityMatrix& rho, const Observable& obs) {
  if (rho.dim() != obs.dim()) {
    throw std::invalid_argument("expectation dimension mismatch");
  }
  const ComplexMatrix& a = rho.matrix();
  const ComplexMatrix& b = obs.matrix();
  cplx s{0.0, 0.0};
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      s += a(r, c) * b(c, r);
    }
  }
  return s.real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_distance dimension mismatch");
  }
  ComplexMatrix diff = a.matrix();
  diff -= b.matrix();
  const std::vector<double> eig = eigvals_hermitian(diff, kValidationTol);
  double s = 0.0;
  for (double lambda : eig) {
    s += std::abs(lambda);
  }
  return 0.5 * s;
}

}  // namespace spiniso
