// Copyright 2026 The Barenco Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "barenco/config.hpp"
#include "barenco/dynamics.hpp"
#include "barenco/errors.hpp"

namespace barenco {
namespace {

BlockadeSpec appendix_blockade() {
  return blockade_from_c6(appendix_a_preset().interaction.vdw);
}

ProtocolParams protocol1_params(const BlockadeSpec& b, double T, double beta0 = 0.0) {
  return make_params(Protocol::I, b, {beta0, 0.25 * kPi, std::nullopt}, T);
}

double pulsed_time(const std::vector<PulseSegment>& s) {
  double t = 0.0;
  for (const auto& x : s)
    if (x.kind == SegmentKind::pulse) t += x.duration;
  return t;
}

TEST(BuildSequence, SegmentCountsAndPulsedTime) {
  SimConfig cfg;
  cfg.omega = from_2pi_mhz(30.0);
  const auto b = appendix_blockade();
  const auto s1 = build_sequence(protocol1_params(b, 0.5), cfg);
  EXPECT_EQ(s1.size(), 3u);
  EXPECT_NEAR(pulsed_time(s1), 2.0 * kPi / cfg.omega, 1e-15);
  const auto p2 = make_params(Protocol::II, b, {0.0, 0.375 * kPi, std::nullopt}, 0.4);
  const auto s2 = build_sequence(p2, cfg);
  EXPECT_EQ(s2.size(), 8u);
  EXPECT_NEAR(pulsed_time(s2), 6.0 * kPi / cfg.omega, 1e-14);
  cfg.merge_pulses = true;
  EXPECT_EQ(build_sequence(p2, cfg).size(), 6u);
}

TEST(BuildSequence, WaitSegmentsCarryNoDrive) {
  SimConfig cfg;
  cfg.omega = 5.0;
  const auto p2 = make_params(Protocol::II, appendix_blockade(),
                              {0.0, 0.3, std::nullopt}, 0.4);
  for (const auto& s : build_sequence(p2, cfg)) {
    if (s.kind != SegmentKind::wait) {
      EXPECT_NEAR(s.duration, kPi / cfg.omega, 1e-15);
      continue;
    }
    EXPECT_EQ(s.control_rabi, Complex(0.0));
    for (auto a : s.target_rabi) EXPECT_EQ(a, Complex(0.0));
  }
}

TEST(BuildSequence, RejectsBadConfig) {
  SimConfig cfg;
  EXPECT_THROW(build_sequence(protocol1_params(appendix_blockade(), 0.5), cfg),
               ContractViolation);
  cfg.omega = 1.0;
  cfg.decay = DecaySpec{1.0, 0.0, 1.0};
  EXPECT_THROW(build_sequence(protocol1_params(appendix_blockade(), 0.5), cfg),
               ContractViolation);
}

TEST(BuildHamiltonian, WaitIsTwoShifts) {
  const BlockadeSpec b{1.5, -0.7, std::nullopt};
  const CMatrix h = build_hamiltonian({SegmentKind::wait, 1.0, 0.0, {}}, b);
  EXPECT_EQ((h.array() != Complex(0.0)).count(), 2);
  EXPECT_EQ(h(10, 10), Complex(1.5));
  EXPECT_EQ(h(11, 11), Complex(-0.7));
}

TEST(BuildHamiltonian, HermitianForRandomAmplitudes) {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> n;
  for (int k = 0; k < 100; ++k) {
    PulseSegment s{SegmentKind::pulse, 1.0, {n(rng), n(rng)}, {}};
    for (auto& a : s.target_rabi) a = {n(rng), n(rng)};
    const CMatrix h = build_hamiltonian(s, {n(rng), n(rng), std::nullopt});
    ASSERT_LE(hermiticity_defect(h), 1e-12);
  }
}

TEST(BuildHamiltonian, QuarterPiDriveIsDirectRotation) {
  // In the rotated basis the target drive couples only |0>-r2 and |1>-r3.
  const double w = 2.0;
  SimConfig cfg;
  cfg.omega = w;
  const RotatedBasis basis{0.0, 0.25 * kPi, std::nullopt};
  const auto seq = build_sequence(make_params(Protocol::I, {0, 0, std::nullopt}, basis, 0.1), cfg);
  const PulseSegment target_only{SegmentKind::pulse, 1.0, 0.0, seq[0].target_rabi};
  const CMatrix h = build_hamiltonian(target_only, {0.0, 0.0, std::nullopt});
  CMatrix ht = h.block(0, 0, 4, 4);  // control in |0>
  CMatrix m = CMatrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = basis_change(basis);
  const CMatrix rotated = m * ht * m.adjoint();
  EXPECT_NEAR(std::abs(rotated(2, 0)), 0.5 * w, 1e-14);
  EXPECT_NEAR(std::abs(rotated(3, 1)), 0.5 * w, 1e-14);
  EXPECT_NEAR(std::abs(rotated(3, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(rotated(2, 1)), 0.0, 1e-14);
}

TEST(Simulate, NoInteractionGivesControlledZ) {
  CMatrix cz = CMatrix::Identity(4, 4);
  cz(2, 2) = cz(3, 3) = -1.0;
  for (double mhz : {1.0, 30.0, 700.0}) {
    SimConfig cfg;
    cfg.omega = from_2pi_mhz(mhz);
    const BlockadeSpec zero{0.0, 0.0, std::nullopt};
    const auto r = simulate(protocol1_params(zero, 0.5), zero, cfg);
    EXPECT_LE(phase_aligned_deviation(r.u_qubit, cz), 1e-12);
    EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  }
}

TEST(Simulate, InteractionOffDuringPulsesReproducesComposition) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> bu(-3.0, 3.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> tu(0.0, 2.0);
  for (int k = 0; k < 60; ++k) {
    const BlockadeSpec b{bu(rng), bu(rng), std::nullopt};
    const bool two = k % 2 == 1;
    const RotatedBasis basis = two ? RotatedBasis{0.0, ang(rng), std::nullopt}
                                   : RotatedBasis{ang(rng), 0.25 * kPi, std::nullopt};
    const auto p = make_params(two ? Protocol::II : Protocol::I, b, basis, tu(rng));
    SimConfig cfg;
    cfg.omega = 7.0;
    cfg.include_interaction_during_pulses = false;
    cfg.merge_pulses = k % 4 == 3;
    const auto r = simulate(p, b, cfg);
    ASSERT_LE(phase_aligned_deviation(r.u_qubit, compose_ideal(p)), 1e-9) << k;
  }
}

TEST(Simulate, LargeRabiFrequencyApproachesIdeal) {
  SimConfig cfg;
  cfg.omega = from_2pi_mhz(3000.0);
  const auto b = appendix_blockade();
  const auto r = simulate(protocol1_params(b, 0.5), b, cfg);
  EXPECT_LE(1.0 - r.fidelity, 1e-5);
}

TEST(Simulate, BlockadeErrorScalesAsInverseSquare) {
  const auto b = appendix_blockade();
  const auto p = protocol1_params(b, 0.5);
  std::vector<double> x, y;
  for (double mhz : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    SimConfig cfg;
    cfg.omega = from_2pi_mhz(mhz);
    x.push_back(std::log(mhz));
    y.push_back(std::log(1.0 - simulate(p, b, cfg).fidelity));
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / 5.0;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / 5.0;
  double sxy = 0.0, sxx = 0.0;
  for (int k = 0; k < 5; ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  EXPECT_NEAR(sxy / sxx, -2.0, 0.3);
}

TEST(Simulate, ThirtyMegahertzNearBlockadeEstimate) {
  const auto b = appendix_blockade();
  const auto p = protocol1_params(b, 0.5);
  SimConfig cfg;
  cfg.omega = from_2pi_mhz(30.0);
  const auto r = simulate(p, b, cfg);
  const double estimate = blockade_error(p.interaction, cfg.omega, Protocol::I);
  const double ratio = (1.0 - r.fidelity) / estimate;
  EXPECT_GT(ratio, 1.0 / 3.0);
  EXPECT_LT(ratio, 3.0);
  EXPECT_GE(r.min_population, 1.0 - 5.0 * (estimate + 4.8e-4));
}

TEST(Simulate, PopulationStaysInSubspace) {
  const auto b = appendix_blockade();
  for (double beta1 : {0.2, 0.375 * kPi, 1.3}) {
    const auto p = make_params(Protocol::II, b, {0.0, beta1, std::nullopt}, 0.7);
    SimConfig cfg;
    cfg.omega = from_2pi_mhz(30.0);
    const auto r = simulate(p, b, cfg);
    const double estimate = blockade_error(p.interaction, cfg.omega, Protocol::II);
    EXPECT_GE(r.min_population, 1.0 - 5.0 * estimate) << beta1;
    EXPECT_GT(r.fidelity, 0.99);
  }
}

TEST(Simulate, LongLifetimesMatchDecayFreeRun) {
  const auto b = appendix_blockade();
  const auto p = protocol1_params(b, 0.5);
  SimConfig cfg;
  cfg.omega = from_2pi_mhz(30.0);
  const auto clean = simulate(p, b, cfg);
  cfg.decay = DecaySpec{1e9, 1e9, 1e9};
  const auto slow = simulate(p, b, cfg);
  EXPECT_LE((clean.u_qubit - slow.u_qubit).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR(clean.fidelity, slow.fidelity, 1e-6);
}

TEST(Simulate, DecayLowersFidelityNearBudget) {
  const auto b = appendix_blockade();
  const auto p = protocol1_params(b, 0.5);
  SimConfig cfg;
  cfg.omega = from_2pi_mhz(30.0);
  const auto clean = simulate(p, b, cfg);
  cfg.decay = DecaySpec{540.0, 540.0, 540.0};
  const auto lossy = simulate(p, b, cfg);
  EXPECT_LT(lossy.mean_population, 1.0);
  const double extra = clean.fidelity - lossy.fidelity;
  const double estimate = decay_error(0.5, cfg.omega, 540.0, 540.0, 0.25 * kPi);
  EXPECT_GT(extra, 0.3 * estimate);
  EXPECT_LT(extra, 3.0 * estimate);
}

TEST(Simulate, SpecialGatesAtHighRabi) {
  SimConfig cfg;
  cfg.omega = from_2pi_mhz(3000.0);
  const BlockadeSpec c{from_2pi_mhz(0.558), 0.0, std::nullopt};
  const auto r = simulate(special_gate(SpecialGate::cnot, c), c, cfg);
  EXPECT_GT(avg_gate_fidelity(r.u_qubit, cnot_matrix()), 1.0 - 1e-5);
  const BlockadeSpec b1{from_2pi_mhz(-0.5), from_2pi_mhz(0.3), std::nullopt};
  const auto s = simulate(special_gate(SpecialGate::b1, b1), b1, cfg);
  EXPECT_GT(s.fidelity, 1.0 - 1e-5);
  EXPECT_NEAR(s.angles.angles.angles.alpha, 0.25 * kPi, 1e-2);
}

TEST(Simulate, RejectsMismatchedBlockade) {
  SimConfig cfg;
  cfg.omega = 10.0;
  const auto p = protocol1_params(appendix_blockade(), 0.5);
  EXPECT_THROW(simulate(p, {1.0, 2.0, std::nullopt}, cfg), ContractViolation);
}

}  // namespace
}  // namespace barenco
