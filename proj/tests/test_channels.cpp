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
#include <cstring>
#include <random>
#include <vector>

#include "spiniso/channels.hpp"
#include "spiniso/isomer.hpp"
#include "test_helpers.hpp"

using spiniso::BellSign;
using spiniso::ComplexMatrix;
using spiniso::cplx;
using spiniso::DensityMatrix;
using spiniso::KrausChannel;
using spiniso::UnitarySampler;
using spiniso::WernerParams;

namespace {

DensityMatrix singlet_density() {
  return spiniso::density_from_ket(spiniso::bell_psi(BellSign::Minus));
}

DensityMatrix maximally_mixed4() {
  ComplexMatrix q = ComplexMatrix::identity(4);
  q *= cplx{0.25, 0.0};
  return DensityMatrix(q);
}

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  return std::memcmp(a.data(), b.data(), a.rows() * a.cols() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_CASE("apply: identity, block dephasing, full depolarization") {
  const DensityMatrix gas = spiniso::rho_gas(spiniso::GasMixParams(0.4));
  const KrausChannel id = spiniso::collective_unitary(ComplexMatrix::identity(2));
  CHECK(spiniso::trace_distance(spiniso::apply(id, gas), gas) <= 1e-12);

  const DensityMatrix singlet = singlet_density();
  CHECK(spiniso::trace_distance(spiniso::apply(spiniso::block_dephasing(), singlet),
                                singlet) <= 1e-12);

  const DensityMatrix depolarized =
      spiniso::apply(spiniso::depolarizing(1.0), spiniso::rho_gas(spiniso::GasMixParams(0.9)));
  CHECK(spiniso::trace_distance(depolarized, maximally_mixed4()) <= 1e-12);
}

TEST_CASE("apply rejects mismatched dimensions and broken channels") {
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  const DensityMatrix rho2(half);
  const KrausChannel id4 = spiniso::collective_unitary(ComplexMatrix::identity(2));
  CHECK_THROWS_AS(spiniso::apply(id4, rho2), std::invalid_argument);

  // A single Kraus operator I/2 is constructible but not trace preserving.
  std::vector<ComplexMatrix> ops;
  ops.push_back(half);
  const KrausChannel broken(2, ops);
  CHECK_FALSE(spiniso::verify_cptp(broken, 1e-10));
  CHECK_THROWS_AS(spiniso::apply(broken, rho2), spiniso::ValidationError);
}

TEST_CASE("verify_cptp on built-in channels") {
  CHECK(spiniso::verify_cptp(spiniso::block_dephasing(), 1e-10));
  CHECK(spiniso::verify_cptp(spiniso::depolarizing(0.0), 1e-10));
  CHECK(spiniso::verify_cptp(spiniso::depolarizing(0.37), 1e-10));
  CHECK(spiniso::verify_cptp(spiniso::depolarizing(1.0), 1e-10));
  UnitarySampler s{99, 0};
  CHECK(spiniso::verify_cptp(spiniso::collective_unitary(spiniso::haar_su2(s)), 1e-10));
}

TEST_CASE("collective unitary channel") {
  CHECK_THROWS_AS(spiniso::collective_unitary(ComplexMatrix(3, 3)), std::invalid_argument);
  ComplexMatrix not_unitary = ComplexMatrix::identity(2);
  not_unitary(0, 0) = cplx{2.0, 0.0};
  CHECK_THROWS_AS(spiniso::collective_unitary(not_unitary), std::invalid_argument);

  const DensityMatrix singlet = singlet_density();
  const KrausChannel flip = spiniso::collective_unitary(spiniso::pauli_x());
  CHECK(spiniso::trace_distance(spiniso::apply(flip, singlet), singlet) <= 1e-12);

  UnitarySampler s{7, 0};
  for (int i = 0; i < 50; ++i) {
    const KrausChannel ch = spiniso::collective_unitary(spiniso::haar_su2(s));
    const double f = spiniso::fidelity_with_ket(spiniso::apply(ch, singlet),
                                                spiniso::bell_psi(BellSign::Minus));
    CHECK(f >= 1.0 - 1e-10);
  }
}

TEST_CASE("block dephasing pins the gas pure state to the printed mixture") {
  const DensityMatrix pure = spiniso::density_from_ket(spiniso::gas_pure_state());
  const DensityMatrix dephased = spiniso::apply(spiniso::block_dephasing(), pure);
  CHECK(spiniso::trace_distance(dephased, spiniso::rho_gas(spiniso::GasMixParams(0.25))) <=
        1e-12);

  const DensityMatrix twice = spiniso::apply(spiniso::block_dephasing(), dephased);
  CHECK(spiniso::trace_distance(twice, dephased) <= 1e-12);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = spiniso_test::random_density(rng, 4);
    const double before = spiniso::fidelity_with_ket(rho, spiniso::bell_psi(BellSign::Minus));
    const double after = spiniso::fidelity_with_ket(
        spiniso::apply(spiniso::block_dephasing(), rho), spiniso::bell_psi(BellSign::Minus));
    CHECK(std::abs(before - after) <= 1e-12);
  }
}

TEST_CASE("depolarizing channel") {
  CHECK_THROWS_AS(spiniso::depolarizing(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(spiniso::depolarizing(1.1), std::invalid_argument);

  const DensityMatrix gas = spiniso::rho_gas(spiniso::GasMixParams(0.6));
  CHECK(spiniso::trace_distance(spiniso::apply(spiniso::depolarizing(0.0), gas), gas) <=
        1e-12);

  const DensityMatrix werner_half =
      spiniso::apply(spiniso::depolarizing(0.5), singlet_density());
  CHECK(spiniso::trace_distance(werner_half, spiniso::werner_state(WernerParams(0.5))) <=
        1e-12);
}

TEST_CASE("haar_su2 determinism and unitarity") {
  UnitarySampler a{123, 5};
  UnitarySampler b{123, 5};
  const ComplexMatrix ua = spiniso::haar_su2(a);
  const ComplexMatrix ub = spiniso::haar_su2(b);
  CHECK(bitwise_equal(ua, ub));
  CHECK(a.counter == 6);

  // Different counters give different matrices.
  const ComplexMatrix uc = spiniso::haar_su2(a);
  CHECK(spiniso::max_abs_diff(ua, uc) > 1e-6);

  UnitarySampler s{2024, 0};
  for (int i = 0; i < 200; ++i) {
    const ComplexMatrix u = spiniso::haar_su2(s);
    CHECK(spiniso::max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)) <= 1e-12);
  }
}

TEST_CASE("haar_su2 first-entry second moment") {
  UnitarySampler s{31337, 0};
  double acc = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const ComplexMatrix u = spiniso::haar_su2(s);
    acc += std::norm(u(0, 0));
  }
  CHECK(std::abs(acc / n - 0.5) <= 0.01);
}

TEST_CASE("Werner parameters and state") {
  CHECK_THROWS_AS(WernerParams(-0.4), spiniso::ValidationError);
  CHECK_THROWS_AS(WernerParams(1.01), spiniso::ValidationError);
  CHECK(WernerParams(-1.0 / 3.0).p_prime() == doctest::Approx(-1.0 / 3.0));
  CHECK(WernerParams(1.0).p_prime() == doctest::Approx(1.0));

  const DensityMatrix w = spiniso::werner_state(WernerParams(0.5));
  CHECK(w.matrix()(0, 0).real() == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(w.matrix()(1, 1).real() == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(w.matrix()(1, 2).real() == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("MC twirl: fixed points") {
  const DensityMatrix singlet = singlet_density();
  CHECK(spiniso::trace_distance(spiniso::werner_twirl_mc(singlet, 500, 7), singlet) <=
        1e-10);

  const DensityMatrix mixed = maximally_mixed4();
  CHECK(spiniso::trace_distance(spiniso::werner_twirl_mc(mixed, 500, 7), mixed) <= 1e-12);

  CHECK_THROWS_AS(spiniso::werner_twirl_mc(singlet, 0, 7), std::invalid_argument);
}

TEST_CASE("MC twirl converges to the closed form") {
  std::mt19937_64 rng(42);
  std::vector<DensityMatrix> states;
  states.push_back(spiniso::rho_gas(spiniso::GasMixParams(0.0)));
  states.push_back(spiniso::rho_gas(spiniso::GasMixParams(0.25)));
  states.push_back(spiniso::rho_gas(spiniso::GasMixParams(0.8)));
  states.push_back(spiniso_test::random_density(rng, 4));

  for (const DensityMatrix& rho : states) {
    const DensityMatrix mc = spiniso::werner_twirl_mc(rho, 100000, 1);
    const spiniso::TwirlResult exact = spiniso::werner_twirl_exact(rho);
    CHECK(spiniso::trace_distance(mc, exact.state) <= 5e-3);
  }

  // Worked case: the twirled rho_gas(0.25) is maximally mixed.
  const DensityMatrix mc = spiniso::werner_twirl_mc(
      spiniso::rho_gas(spiniso::GasMixParams(0.25)), 100000, 1);
  CHECK(spiniso::trace_distance(mc, maximally_mixed4()) <= 5e-3);
}

TEST_CASE("MC twirl determinism: reruns and worker counts") {
  const DensityMatrix gas = spiniso::rho_gas(spiniso::GasMixParams(0.3));
  const DensityMatrix a = spiniso::werner_twirl_mc(gas, 6000, 99);
  const DensityMatrix b = spiniso::werner_twirl_mc(gas, 6000, 99);
  CHECK(bitwise_equal(a.matrix(), b.matrix()));

  const DensityMatrix one = spiniso::werner_twirl_mc(gas, 6000, 99, 1);
  const DensityMatrix four = spiniso::werner_twirl_mc(gas, 6000, 99, 4);
  CHECK(bitwise_equal(one.matrix(), four.matrix()));

  const DensityMatrix other_seed = spiniso::werner_twirl_mc(gas, 6000, 100);
  CHECK_FALSE(bitwise_equal(a.matrix(), other_seed.matrix()));
}

TEST_CASE("exact twirl: Werner parameters and singlet fidelity") {
  const spiniso::TwirlResult pure = spiniso::werner_twirl_exact(
      spiniso::rho_gas(spiniso::GasMixParams(1.0)));
  CHECK(pure.params.p_prime() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spiniso::trace_distance(pure.state, singlet_density()) <= 1e-12);

  const spiniso::TwirlResult mixed = spiniso::werner_twirl_exact(
      spiniso::rho_gas(spiniso::GasMixParams(0.25)));
  CHECK(std::abs(mixed.params.p_prime()) <= 1e-12);
  CHECK(spiniso::trace_distance(mixed.state, maximally_mixed4()) <= 1e-12);

  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const DensityMatrix gas = spiniso::rho_gas(spiniso::GasMixParams(p));
    const spiniso::TwirlResult r = spiniso::werner_twirl_exact(gas);
    CHECK(std::abs(r.params.p_prime() - (4.0 * p - 1.0) / 3.0) <= 1e-12);
    if (p < 1.0) {
      CHECK(r.params.p_prime() < p);
    }
    const double f_in = spiniso::fidelity_with_ket(gas, spiniso::bell_psi(BellSign::Minus));
    const double f_out =
        spiniso::fidelity_with_ket(r.state, spiniso::bell_psi(BellSign::Minus));
    CHECK(std::abs(f_in - f_out) <= 1e-12);
  }
}

TEST_CASE("apply preserves trace and Hermiticity on random channel/state pairs") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  UnitarySampler s{55, 0};
  for (int i = 0; i < 100; ++i) {
    KrausChannel ch = [&]() -> KrausChannel {
      switch (i % 3) {
        case 0: return spiniso::collective_unitary(spiniso::haar_su2(s));
        case 1: return spiniso::block_dephasing();
        default: return spiniso::depolarizing(unit(rng));
      }
    }();
    const DensityMatrix rho = spiniso_test::random_density(rng, 4);
    const DensityMatrix out = spiniso::apply(ch, rho);
    CHECK(std::abs(out.matrix().trace() - cplx{1.0, 0.0}) <= 1e-10);
    CHECK(spiniso::hermitian_defect(out.matrix()) <= 1e-10);
  }
}

TEST_CASE("collective and Werner invariance over many Haar samples") {
  const DensityMatrix singlet = singlet_density();
  UnitarySampler s{2718, 0};
  for (int i = 0; i < 1000; ++i) {
    const KrausChannel ch = spiniso::collective_unitary(spiniso::haar_su2(s));
    CHECK(spiniso::fidelity_with_ket(spiniso::apply(ch, singlet),
                                     spiniso::bell_psi(BellSign::Minus)) >= 1.0 - 1e-10);
  }

  for (double pp : {-1.0 / 3.0, 0.0, 1.0 / 3.0, 0.7, 1.0}) {
    const DensityMatrix w = spiniso::werner_state(WernerParams(pp));
    UnitarySampler ws{314, 0};
    for (int i = 0; i < 1000; ++i) {
      const KrausChannel ch = spiniso::collective_unitary(spiniso::haar_su2(ws));
      CHECK(spiniso::trace_distance(spiniso::apply(ch, w), w) <= 1e-10);
    }
  }
}

TEST_CASE("depolarizing composes with the twirl as p' -> (1-q) p'") {
  for (double pp : {-0.2, 0.0, 0.5, 1.0}) {
    for (double q : {0.0, 0.3, 1.0}) {
      const DensityMatrix w = spiniso::werner_state(WernerParams(pp));
      const DensityMatrix out = spiniso::apply(spiniso::depolarizing(q), w);
      const spiniso::TwirlResult r = spiniso::werner_twirl_exact(out);
      CHECK(std::abs(r.params.p_prime() - (1.0 - q) * pp) <= 1e-12);
      // The depolarized Werner state is already Werner: the twirl is a no-op.
      CHECK(spiniso::trace_distance(r.state, out) <= 1e-12);
    }
  }
}

TEST_CASE("singlet damping") {
  CHECK(spiniso::singlet_damping(WernerParams(0.9), 1.0).p_prime() ==
        doctest::Approx(0.9).epsilon(1e-15));
  CHECK(spiniso::singlet_damping(WernerParams(0.9), 0.0).p_prime() ==
        doctest::Approx(0.0));
  CHECK(spiniso::singlet_damping(WernerParams(0.6), 0.5).p_prime() ==
        doctest::Approx(0.3).epsilon(1e-15));
  CHECK_THROWS_AS(spiniso::singlet_damping(WernerParams(0.5), 1.5), std::invalid_argument);
  CHECK_THROWS_AS(spiniso::singlet_damping(WernerParams(0.5), -0.1), std::invalid_argument);
}

TEST_CASE("KrausChannel construction checks shapes only") {
  CHECK_THROWS_AS(KrausChannel(4, {}), std::invalid_argument);
  std::vector<ComplexMatrix> wrong;
  wrong.push_back(ComplexMatrix::identity(2));
  CHECK_THROWS_AS(KrausChannel(4, wrong), std::invalid_argument);

  // Non-CPTP sets are constructible by design; only apply() enforces.
  ComplexMatrix half = ComplexMatrix::identity(4);
  half *= cplx{0.5, 0.0};
  std::vector<ComplexMatrix> ops;
  ops.push_back(half);
  const KrausChannel broken(4, ops);
  CHECK_FALSE(spiniso::verify_cptp(broken, 1e-10));
}
