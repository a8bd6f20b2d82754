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

#include <array>
#include <cstdint>
#include <optional>

#include "spiniso/channels.hpp"
#include "spiniso/qcore.hpp"

// The physics layer: gas- and liquid-phase proton spin states of the water
// molecule, para/ortho accounting, the adsorption entanglement event, the
// gas -> liquid pipeline, entanglement detection and NMR observables.
//
// para-water carries the proton singlet |Psi->; ortho-water the three
// triplet states |Psi+>, |00>, |11> (statistical weight 3, hence the
// textbook para/ortho concentration of 1/3).

namespace spiniso {

/// Probability weight p of the singlet (para) portion of the gas state.
class GasMixParams {
 public:
  explicit GasMixParams(double p);
  double p() const { return p_; }

 private:
  double p_;
};

/// Derived scalar diagnostics of a two-qubit spin state.
struct IsomerReport {
  double para_fraction = 0.0;
  double ortho_fraction = 0.0;
  /// ortho/para; +infinity flags a para-free state so sweeps stay
  /// rectangular.
  double ortho_para_ratio = 0.0;
  /// Present only for states that came through the liquid transition.
  std::optional<double> werner_p_prime;
  double negativity = 0.0;
  bool entangled = false;
  std::array<double, 3> magnetization_xyz{0.0, 0.0, 0.0};
  double purity = 0.0;
  double entropy_bits = 0.0;
};

enum class SpinAxis { X, Y, Z };
enum class TwirlMethod { Exact, Mc };

/// Gas-phase mixed state after adsorbent contact, exactly as printed:
///   rho = p |Psi-><Psi-| + (1-p)/3 |v><v|,  |v> = |Psi+> + |00> + |11>,
/// with |v> kept coherent and unnormalized (<v|v> = 3). Rank <= 2.
DensityMatrix rho_gas(const GasMixParams& params);

/// Alternative reading with an incoherent uniform triplet mixture:
///   rho = p |Psi-><Psi-| + (1-p)/3 (|Psi+><Psi+| + |00><00| + |11><11|).
/// Same singlet fidelity and computational-basis diagonal as rho_gas; the
/// two differ only in triplet-block coherences.
DensityMatrix rho_gas_mixed_variant(const GasMixParams& params);

/// Liquid-phase Werner state p' |Psi-><Psi-| + (1-p') I/4 with eigenvalues
/// {(1+3p')/4, (1-p')/4 x3}.
DensityMatrix rho_liq(const WernerParams& w);

/// <Psi-|rho|Psi->: the para (singlet) population.
double para_fraction(const DensityMatrix& rho);

/// ortho/para = (1 - para)/para; +infinity when para <= 1e-12.
double ortho_para_ratio(const DensityMatrix& rho);

/// Molecule-adsorbent contact: the composite is the purification of the
/// target gas state (a pure entangled state for 0 < p < 1), and the freed
/// molecule is its reduced state, mixed with purity p^2 + (1-p)^2.
struct AdsorptionEvent {
  PureState joint;        ///< dim-16 molecule (x) surface composite
  DensityMatrix reduced;  ///< dim-4 state of the freed molecule
};
AdsorptionEvent adsorption_event(const GasMixParams& target);

/// Gas -> liquid transition: U (x) U twirl (closed form or Monte Carlo)
/// followed by singlet damping. mc_samples and seed matter only for the
/// Monte-Carlo method; damping = 1 means no extra attenuation.
TwirlResult gas_to_liquid(const DensityMatrix& rho, TwirlMethod method,
                          std::uint64_t mc_samples, std::uint64_t seed,
                          double damping);

/// Sum of |negative eigenvalues| of the partial transpose (on the second
/// qubit). For two qubits PPT is necessary and sufficient, so this is a
/// decisive entanglement measure, not just a witness.
double negativity(const DensityMatrix& rho);

/// negativity(rho) > 1e-10.
bool is_entangled(const DensityMatrix& rho);

/// Collective spin component (sigma_axis (x) I + I (x) sigma_axis)/2 in
/// units of hbar; the z component has eigenvalues {-1, 0, 0, +1}.
Observable collective_spin(SpinAxis axis);

/// Tr(rho S_axis): the magnetization seen by NMR along the given axis.
double magnetization(const DensityMatrix& rho, SpinAxis axis);

/// Aggregate all scalar diagnostics of a state.
IsomerReport report(const DensityMatrix& rho,
                    std::optional<WernerParams> w = std::nullopt);

}  // namespace spiniso
