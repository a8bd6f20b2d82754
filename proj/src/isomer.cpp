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

#include "spiniso/isomer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spiniso {

namespace {

ComplexMatrix outer(const std::vector<cplx>& v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      m(r, c) = v[r] * std::conj(v[c]);
    }
  }
  return m;
}

// Partial transpose on the second qubit of a two-qubit matrix.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          out(i * 2 + k, j * 2 + l) = m(i * 2 + l, j * 2 + k);
        }
      }
    }
  }
  return out;
}

constexpr double kEntangleTol = 1e-10;
constexpr double kParaFloor = 1e-12;

}  // namespace

GasMixParams::GasMixParams(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gas singlet weight p must lie in [0, 1]");
  }
}

DensityMatrix rho_gas(const GasMixParams& params) {
  const double p = params.p();
  const PureState singlet = bell_psi(BellSign::Minus);
  const double inv_sqrt2 = std::sqrt(0.5);
  // |v> = |Psi+> + |00> + |11>, kept coherent and unnormalized: <v|v> = 3.
  const std::vector<cplx> v = {cplx{1.0, 0.0}, cplx{inv_sqrt2, 0.0},
                               cplx{inv_sqrt2, 0.0}, cplx{1.0, 0.0}};
  ComplexMatrix m = cplx{p, 0.0} * outer(singlet.amplitudes());
  m += cplx{(1.0 - p) / 3.0, 0.0} * outer(v);
  return DensityMatrix(m);
}

DensityMatrix rho_gas_mixed_variant(const GasMixParams& params) {
  const double p = params.p();
  ComplexMatrix m = cplx{p, 0.0} * outer(bell_psi(BellSign::Minus).amplitudes());
  const cplx w{(1.0 - p) / 3.0, 0.0};
  m += w * outer(bell_psi(BellSign::Plus).amplitudes());
  m += w * outer(basis_ket(4, 0).amplitudes());
  m += w * outer(basis_ket(4, 3).amplitudes());
  return DensityMatrix(m);
}

DensityMatrix rho_liq(const WernerParams& w) { return werner_state(w); }

double para_fraction(const DensityMatrix& rho) {
  return fidelity_with_ket(rho, bell_psi(BellSign::Minus));
}

double ortho_para_ratio(const DensityMatrix& rho) {
  const double para = para_fraction(rho);
  if (para <= kParaFloor) {
    return std::numeric_limits<double>::infinity();
  }
  return (1.0 - para) / para;
}

AdsorptionEvent adsorption_event(const GasMixParams& target) {
  const DensityMatrix gas = rho_gas(target);
  PureState joint = purify(gas);
  DensityMatrix reduced =
      partial_trace(density_from_ket(joint), BipartiteSplit(4, 4), Subsystem::A);
  return AdsorptionEvent{std::move(joint), std::move(reduced)};
}

TwirlResult gas_to_liquid(const DensityMatrix& rho, TwirlMethod method,
                          std::uint64_t mc_samples, std::uint64_t seed,
                          double damping) {
  if (!(damping >= 0.0 && damping <= 1.0)) {
    throw std::invalid_argument("damping factor must lie in [0, 1]");
  }
  if (method == TwirlMethod::Exact) {
    const TwirlResult twirled = werner_twirl_exact(rho);
    const WernerParams damped = singlet_damping(twirled.params, damping);
    return TwirlResult{damped, werner_state(damped)};
  }
  const DensityMatrix avg = werner_twirl_mc(rho, mc_samples, seed);
  // Damping interpolates the sampled average toward I/4, matching the exact
  // branch's p' -> damping * p' on Werner inputs.
  ComplexMatrix m = cplx{damping, 0.0} * avg.matrix();
  const double off = (1.0 - damping) / 4.0;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) += cplx{off, 0.0};
  }
  DensityMatrix state(m);
  const double f = para_fraction(state);
  double p_prime = (4.0 * f - 1.0) / 3.0;
  p_prime = std::min(1.0, std::max(-1.0 / 3.0, p_prime));
  return TwirlResult{WernerParams(p_prime), std::move(state)};
}

double negativity(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("negativity expects a two-qubit state");
  }
  const std::vector<double> eig =
      eigvals_hermitian(partial_transpose_b(rho.matrix()), kValidationTol);
  double s = 0.0;
  for (double lambda : eig) {
    if (lambda < 0.0) {
      s -= lambda;
    }
  }
  return s;
}

bool is_entangled(const DensityMatrix& rho) { return negativity(rho) > kEntangleTol; }

Observable collective_spin(SpinAxis axis) {
  ComplexMatrix sigma(2, 2);
  switch (axis) {
    case SpinAxis::X:
      sigma = pauli_x();
      break;
    case SpinAxis::Y:
      sigma = pauli_y();
      break;
    case SpinAxis::Z:
      sigma = pauli_z();
      break;
  }
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  ComplexMatrix s = tensor(sigma, id2);
  s += tensor(id2, sigma);
  s *= cplx{0.5, 0.0};
  return Observable(s);
}

double magnetization(const DensityMatrix& rho, SpinAxis axis) {
  return expectation(rho, collective_spin(axis));
}

IsomerReport report(const DensityMatrix& rho, std::optional<WernerParams> w) {
  IsomerReport r;
  r.para_fraction = para_fraction(rho);
  r.ortho_fraction = 1.0 - r.para_fraction;
  r.ortho_para_ratio = ortho_para_ratio(rho);
  if (w.has_value()) {
    r.werner_p_prime = w->p_prime();
  }
  r.negativity = negativity(rho);
  r.entangled = r.negativity > kEntangleTol;
  r.magnetization_xyz = {magnetization(rho, SpinAxis::X),
                         magnetization(rho, SpinAxis::Y),
                         magnetization(rho, SpinAxis::Z)};
  r.purity = purity(rho);
  r.entropy_bits = von_neumann_entropy(rho);
  return r;
}

}  // namespace spiniso
