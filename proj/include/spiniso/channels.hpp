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

#include <cstdint>
#include <vector>

#include "spiniso/qcore.hpp"

// CPTP maps in operator-sum form and the channels the spin-isomer story
// needs: collective unitaries U (x) U, singlet/triplet block dephasing,
// two-qubit depolarizing, and the Haar U (x) U twirl in both Monte-Carlo
// and closed form.

namespace spiniso {

/// Operator-sum (Kraus) representation of a channel on a dim-dimensional
/// space. Construction checks shapes only; trace preservation is checked by
/// verify_cptp and enforced by apply, so deliberately broken channels can be
/// built and inspected.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
};

/// Deterministic Haar-sampling state: identical (seed, counter) pairs always
/// yield the identical unitary, regardless of where or when they are drawn.
struct UnitarySampler {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;
};

/// Singlet weight p' of the two-qubit Werner state
///   rho = p' |Psi-><Psi-| + (1 - p') I/4.
/// The full PSD family allows p' in [-1/3, 1]; twirling a gas state with
/// singlet weight below 1/4 lands below zero, so the negative range must be
/// representable.
class WernerParams {
 public:
  explicit WernerParams(double p_prime);
  double p_prime() const { return p_prime_; }

 private:
  double p_prime_;
};

struct TwirlResult {
  WernerParams params;
  DensityMatrix state;
};

/// sum_i K_i rho K_i^dagger. Throws std::invalid_argument on dimension
/// mismatch and ValidationError when the channel is not trace preserving
/// at 1e-10.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// True iff max |sum K^dagger K - I| <= tol.
bool verify_cptp(const KrausChannel& ch, double tol);

/// Both qubits see the same single-qubit unitary: one Kraus term U (x) U.
KrausChannel collective_unitary(const ComplexMatrix& u);

/// Environment-selected superselection between the singlet and triplet
/// blocks: Kraus set {P_singlet, P_triplet}. Coherences between the blocks
/// are erased; populations and the singlet term survive untouched.
KrausChannel block_dephasing();

/// Two-qubit depolarizing channel rho -> (1-q) rho + q I/4, realized by the
/// 16 Pauli products with weights sqrt(1 - 15q/16) on the identity and
/// sqrt(q/16) on the other fifteen.
KrausChannel depolarizing(double q);

/// Haar-distributed SU(2) element: a 2-vector of standard complex Gaussians
/// is normalized to form the first column and the unitary is completed.
/// Advances the sampler's counter.
ComplexMatrix haar_su2(UnitarySampler& sampler);

/// The Werner state for a given singlet weight.
DensityMatrix werner_state(const WernerParams& w);

/// Monte-Carlo U (x) U twirl: the average of n_samples collective-unitary
/// conjugations of rho. Per-sample unitaries come from counter-derived
/// streams keyed by (seed, sample index) and partial sums are accumulated in
/// fixed chunks, so the result is bit-identical regardless of how many
/// workers evaluate it (workers = 0 picks the hardware concurrency). The
/// averaged matrix is re-projected to its exact Hermitian part before
/// validation.
DensityMatrix werner_twirl_mc(const DensityMatrix& rho, std::uint64_t n_samples,
                              std::uint64_t seed, unsigned workers = 0);

/// Closed form of the Haar U (x) U average: with F = <Psi-|rho|Psi->, the
/// twirl output is the Werner state with p' = (4F - 1)/3, and its singlet
/// fidelity equals F exactly.
TwirlResult werner_twirl_exact(const DensityMatrix& rho);

/// Extra attenuation of the delivered singlet weight: p' -> lambda p'.
WernerParams singlet_damping(const WernerParams& w, double lambda);

}  // namespace spiniso
