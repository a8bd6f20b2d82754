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

#include "spiniso/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace spiniso {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 output mix (Steele, Lea, Flood). A bijection on 64-bit words.
std::uint64_t sm_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Output #counter of the splitmix64 sequence whose base state is the mixed
// seed. Distinct (seed, counter) pairs give decorrelated 64-bit keys in O(1),
// which is what makes sample streams evaluation-order independent.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t base = sm_mix(seed + kGolden);
  return sm_mix(base + (counter + 1) * kGolden);
}

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t state) : state_(state) {}
  std::uint64_t next() {
    state_ += kGolden;
    return sm_mix(state_);
  }
  // Uniform on (0, 1]: never zero, so Box-Muller's log stays finite.
  double next_unit_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// One standard-normal pair by Box-Muller.
void gauss_pair(SplitMix& rng, double& g0, double& g1) {
  const double u1 = rng.next_unit_open();
  const double u2 = rng.next_unit_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.141592653589793238462643 * u2;
  g0 = r * std::cos(theta);
  g1 = r * std::sin(theta);
}

ComplexMatrix singlet_projector() {
  const PureState s = bell_psi(BellSign::Minus);
  ComplexMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      m(r, c) = s.amplitude(r) * std::conj(s.amplitude(c));
    }
  }
  return m;
}

// K rho K^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix& k, const ComplexMatrix& rho) {
  return (k * rho).mul_adjoint(k);
}

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops)
    : dim_(dim), ops_(std::move(kraus_ops)) {
  if (dim_ == 0) {
    throw std::invalid_argument("KrausChannel dimension must be positive");
  }
  if (ops_.empty()) {
    throw std::invalid_argument("KrausChannel needs at least one Kraus operator");
  }
  for (const ComplexMatrix& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw std::invalid_argument("Kraus operator shape must be dim x dim");
    }
    if (!k.is_finite()) {
      throw std::invalid_argument("Kraus operators must be finite");
    }
  }
}

WernerParams::WernerParams(double p_prime) : p_prime_(p_prime) {
  if (!(p_prime >= -1.0 / 3.0 - kValidationTol && p_prime <= 1.0 + kValidationTol)) {
    throw ValidationError("WernerParams p_prime must lie in [-1/3, 1]");
  }
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) {
    throw std::invalid_argument("channel/state dimension mismatch");
  }
  if (!verify_cptp(ch, kValidationTol)) {
    throw ValidationError("channel is not trace preserving within 1e-10");
  }
  ComplexMatrix acc(ch.dim(), ch.dim());
  for (const ComplexMatrix& k : ch.kraus_ops()) {
    acc += conjugate_by(k, rho.matrix());
  }
  return DensityMatrix(acc.hermitian_part());
}

bool verify_cptp(const KrausChannel& ch, double tol) {
  ComplexMatrix acc(ch.dim(), ch.dim());
  for (const ComplexMatrix& k : ch.kraus_ops()) {
    acc += k.adjoint() * k;
  }
  return max_abs_diff(acc, ComplexMatrix::identity(ch.dim())) <= tol;
}

KrausChannel collective_unitary(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw std::invalid_argument("collective_unitary expects a 2x2 matrix");
  }
  if (max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)) > kValidationTol) {
    throw std::invalid_argument("collective_unitary expects a unitary matrix");
  }
  std::vector<ComplexMatrix> ops;
  ops.push_back(tensor(u, u));
  return KrausChannel(4, std::move(ops));
}

KrausChannel block_dephasing() {
  const ComplexMatrix ps = singlet_projector();
  ComplexMatrix pt = ComplexMatrix::identity(4);
  pt -= ps;
  std::vector<ComplexMatrix> ops;
  ops.push_back(ps);
  ops.push_back(pt);
  return KrausChannel(4, std::move(ops));
}

KrausChannel depolarizing(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
  }
  const ComplexMatrix paulis[4] = {ComplexMatrix::identity(2), pauli_x(), pauli_y(),
                                   pauli_z()};
  const double w_id = std::sqrt(1.0 - 15.0 * q / 16.0);
  const double w_rest = std::sqrt(q / 16.0);
  std::vector<ComplexMatrix> ops;
  ops.reserve(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double w = (i == 0 && j == 0) ? w_id : w_rest;
      ops.push_back(cplx{w, 0.0} * tensor(paulis[i], paulis[j]));
    }
  }
  return KrausChannel(4, std::move(ops));
}

ComplexMatrix haar_su2(UnitarySampler& sampler) {
  std::uint64_t key = stream_key(sampler.seed, sampler.counter);
  sampler.counter += 1;
  for (;;) {
    SplitMix rng(key);
    double g[4];
    gauss_pair(rng, g[0], g[1]);
    gauss_pair(rng, g[2], g[3]);
    const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
    if (n > 1e-154) {
      const cplx a{g[0] / n, g[1] / n};
      const cplx b{g[2] / n, g[3] / n};
      ComplexMatrix u(2, 2);
      u(0, 0) = a;
      u(0, 1) = -std::conj(b);
      u(1, 0) = b;
      u(1, 1) = std::conj(a);
      return u;
    }
    key = sm_mix(key);  // all four Gaussians zero: astronomically rare, rehash
  }
}

DensityMatrix werner_state(const WernerParams& w) {
  const double p = w.p_prime();
  ComplexMatrix m = cplx{p, 0.0} * singlet_projector();
  const double off = (1.0 - p) / 4.0;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) += cplx{off, 0.0};
  }
  return DensityMatrix(m);
}

DensityMatrix werner_twirl_mc(const DensityMatrix& rho, std::uint64_t n_samples,
                              std::uint64_t seed, unsigned workers) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("werner_twirl_mc expects a two-qubit state");
  }
  if (n_samples == 0) {
    throw std::invalid_argument("werner_twirl_mc needs at least one sample");
  }

  // Samples are grouped into fixed chunks; each chunk is summed sequentially
  // and chunk partials are reduced in chunk order. The partition depends only
  // on n_samples, so the result is bit-identical for any worker count.
  constexpr std::uint64_t kChunk = 2048;
  const std::uint64_t n_chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<ComplexMatrix> partials(n_chunks, ComplexMatrix(4, 4));

  const auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(n_samples, begin + kChunk);
    ComplexMatrix acc(4, 4);
    for (std::uint64_t k = begin; k < end; ++k) {
      UnitarySampler s{seed, k};
      const ComplexMatrix u = haar_su2(s);
      const ComplexMatrix uu = tensor(u, u);
      acc += conjugate_by(uu, rho.matrix());
    }
    partials[c] = acc;
  };

  unsigned n_workers = workers;
  if (n_workers == 0) {
    n_workers = std::max(1u, std::thread::hardware_concurrency());
  }
  n_workers = static_cast<unsigned>(
      std::min<std::uint64_t>(n_workers, n_chunks));

  if (n_workers <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
      run_chunk(c);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t c = t; c < n_chunks; c += n_workers) {
          run_chunk(c);
        }
      });
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }

  ComplexMatrix sum(4, 4);
  for (std::uint64_t c = 0; c < n_chunks; ++c) {
    sum += partials[c];
  }
  sum *= cplx{1.0 / static_cast<double>(n_samples), 0.0};
  return DensityMatrix(sum.hermitian_part());
}

TwirlResult werner_twirl_exact(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("werner_twirl_exact expects a two-qubit state");
  }
  const double f = fidelity_with_ket(rho, bell_psi(BellSign::Minus));
  double p_prime = (4.0 * f - 1.0) / 3.0;
  p_prime = std::min(1.0, std::max(-1.0 / 3.0, p_prime));
  WernerParams w(p_prime);
  return TwirlResult{w, werner_state(w)};
}

WernerParams singlet_damping(const WernerParams& w, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("damping factor must lie in [0, 1]");
  }
  return WernerParams(lambda * w.p_prime());
}

}  // namespace spiniso
