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

#include "barenco/config.hpp"
#include "barenco/errors.hpp"

namespace barenco {
namespace {

NoncollinearV rounded_v(double beta1) {
  return noncollinear_from_blockade({from_2pi_mhz(0.558), from_2pi_mhz(-0.157), std::nullopt},
                                    {0.0, beta1, std::nullopt});
}

TEST(DecayError, ExampleValue) {
  const double e = decay_error(0.5, from_2pi_mhz(30.0), 540.0, 540.0, 0.25 * kPi);
  EXPECT_NEAR(e, 1.43518518518519e-3, 1e-15);
}

TEST(DecayError, EqualLifetimesSimplify) {
  for (double beta1 : {0.0, 0.3, 0.25 * kPi, 1.2}) {
    const double w = 7.0, T = 0.8, tau = 123.0;
    EXPECT_NEAR(decay_error(T, w, tau, tau, beta1), 1.5 * (kPi / w + T) / tau, 1e-15);
  }
}

TEST(DecayError, VanishesForLongLifetimes) {
  EXPECT_LT(decay_error(0.5, 100.0, 1e15, 1e15, 0.4), 1e-14);
  EXPECT_LT(decay_error(0.5, 100.0, 1e15, 1e15, 0.4, Protocol::II), 1e-14);
}

TEST(DecayError, AffineInWait) {
  const double w = from_2pi_mhz(30.0);
  for (Protocol p : {Protocol::I, Protocol::II}) {
    const double e0 = decay_error(0.0, w, 300.0, 700.0, 0.7, p);
    const double e1 = decay_error(1.0, w, 300.0, 700.0, 0.7, p);
    const double e3 = decay_error(3.0, w, 300.0, 700.0, 0.7, p);
    EXPECT_NEAR(e3 - e0, 3.0 * (e1 - e0), 1e-15);
    EXPECT_GT(e1, e0);
  }
}

TEST(DecayError, RejectsBadInputs) {
  EXPECT_THROW(decay_error(0.5, 1.0, 0.0, 1.0, 0.1), ContractViolation);
  EXPECT_THROW(decay_error(0.5, 0.0, 1.0, 1.0, 0.1), ContractViolation);
}

TEST(BlockadeError, ExampleValue) {
  EXPECT_NEAR(blockade_error(rounded_v(0.25 * kPi), from_2pi_mhz(30.0), Protocol::I),
              1.78667777777778e-4, 1e-15);
}

TEST(BlockadeError, InverseSquareInRabi) {
  const auto v = rounded_v(0.375 * kPi);
  for (Protocol p : {Protocol::I, Protocol::II})
    EXPECT_NEAR(blockade_error(v, 2.0, p) / blockade_error(v, 4.0, p), 4.0, 1e-12);
  EXPECT_NEAR(blockade_error(v, 3.0, Protocol::II) / blockade_error(v, 3.0, Protocol::I),
              2.0, 1e-15);
}

TEST(LeakageError, ExampleAndLimits) {
  EXPECT_NEAR(leakage_error(from_2pi_mhz(30.0)), 4.77777777777778e-4, 1e-15);
  EXPECT_EQ(leakage_error(0.0), 0.0);
  EXPECT_LT(leakage_error(1.0, 1e12, 1e12), 1e-23);
  EXPECT_NEAR(leakage_error(4.0) / leakage_error(2.0), 4.0, 1e-12);
  EXPECT_THROW(leakage_error(1.0, 0.0, 1.0), ContractViolation);
}

TEST(Degradation, RabiDropFromThirtyToFive) {
  const double hi = from_2pi_mhz(30.0), lo = from_2pi_mhz(5.0);
  const auto rise = [&](const NoncollinearV& v, Protocol p) {
    return blockade_error(v, lo, p) + leakage_error(lo) - blockade_error(v, hi, p) -
           leakage_error(hi);
  };
  EXPECT_NEAR(rise(rounded_v(0.25 * kPi), Protocol::I) / 6e-3, 1.0, 0.25);
  EXPECT_NEAR(rise(rounded_v(0.375 * kPi), Protocol::II) / 32e-3, 1.0, 0.25);
}

TEST(TotalBudget, SumAndWarning) {
  BudgetInputs in;
  in.v = rounded_v(0.25 * kPi);
  in.T = 0.5;
  in.omega = from_2pi_mhz(30.0);
  in.tau1 = in.tau2 = 540.0;
  const auto b = total_budget(in);
  EXPECT_EQ(b.total, b.e_decay + b.e_blockade + b.e_leakage);
  EXPECT_NEAR(b.total, 2.09e-3, 0.01e-3);
  EXPECT_FALSE(b.validity_warning);
  in.omega = from_2pi_mhz(0.5);
  EXPECT_TRUE(total_budget(in).validity_warning);
}

TEST(TotalBudget, ZeroComponents) {
  BudgetInputs in;
  in.v = {0.0, 0.0, 0.0, 0.0};
  in.omega = 1.0;
  in.tau1 = in.tau2 = 1e200;
  in.delta1 = in.delta2 = 1e200;
  const auto b = total_budget(in);
  EXPECT_EQ(b.e_blockade, 0.0);
  EXPECT_EQ(b.e_leakage, 0.0);
  EXPECT_LT(b.total, 1e-199);
}

TEST(TotalBudget, StrictlyIncreasingInWait) {
  BudgetInputs in;
  in.v = rounded_v(0.375 * kPi);
  in.protocol = Protocol::II;
  in.beta1 = 0.375 * kPi;
  in.omega = from_2pi_mhz(30.0);
  in.tau1 = in.tau2 = 540.0;
  double prev = -1.0;
  for (int k = 0; k <= 50; ++k) {
    in.T = 0.04 * k;
    const double t = total_budget(in).total;
    EXPECT_GT(t, prev);
    prev = t;
  }
}

TEST(ForceDrift, AppendixValues) {
  const auto f = force_drift(c6_from_2pi_thz_um6(35.71), 20.0, 1.0);
  EXPECT_NEAR(f.delta_v_m_per_s / 7.6e-4, 1.0, 0.05);
  EXPECT_NEAR(f.delta_x_um / 3.8e-4, 1.0, 0.05);
  EXPECT_LT(f.force_N, 0.0);
}

TEST(ForceDrift, SeventhPowerAndQuadraticTime) {
  const double c6 = c6_from_2pi_thz_um6(35.71);
  EXPECT_NEAR(force_drift(c6, 10.0, 1.0).force_N / force_drift(c6, 20.0, 1.0).force_N,
              128.0, 1e-9);
  EXPECT_NEAR(force_drift(c6, 20.0, 2.0).delta_x_um / force_drift(c6, 20.0, 1.0).delta_x_um,
              4.0, 1e-12);
  EXPECT_THROW(force_drift(c6, 0.0, 1.0), ContractViolation);
}

TEST(TrapSigmas, PrintedForms) {
  const auto s = trap_sigmas({3.0, 1.1, 20.0, 100.0});
  EXPECT_NEAR(s.xi, 12.1169534677, 1e-9);
  EXPECT_NEAR(s.sigma_x, 0.106066017178, 1e-11);
  EXPECT_EQ(s.sigma_x, s.sigma_y);
  EXPECT_NEAR(s.sigma_z, s.xi * s.sigma_x, 1e-15);
  const auto cold = trap_sigmas({3.0, 1.1, 20.0, 0.0});
  EXPECT_EQ(cold.sigma_x, 0.0);
  EXPECT_EQ(cold.sigma_z, 0.0);
  EXPECT_FALSE(cold.thermal_regime);
  EXPECT_THROW(trap_sigmas({0.0, 1.1, 20.0, 10.0}), ContractViolation);
}

TEST(MonteCarlo, ZeroTemperatureGivesZero) {
  const auto p = appendix_a_preset();
  TrapSpec t = p.trap;
  t.temperature_uK = 0.0;
  const auto r = mc_position_error({}, p.interaction.vdw, t, 1000, 3);
  EXPECT_EQ(r.mean_error, 0.0);
  EXPECT_EQ(r.std_error_of_mean, 0.0);
  EXPECT_EQ(r.invalid_samples, 0u);
}

TEST(MonteCarlo, BitIdenticalAcrossRunsAndWorkers) {
  const auto p = appendix_a_preset();
  const auto a = mc_position_error({}, p.interaction.vdw, p.trap, 5000, 7, 1);
  const auto b = mc_position_error({}, p.interaction.vdw, p.trap, 5000, 7, 1);
  const auto c = mc_position_error({}, p.interaction.vdw, p.trap, 5000, 7, 3);
  EXPECT_EQ(a.mean_error, b.mean_error);
  EXPECT_EQ(a.mean_error, c.mean_error);
  EXPECT_EQ(a.std_error_of_mean, c.std_error_of_mean);
  const auto d = mc_position_error({}, p.interaction.vdw, p.trap, 5000, 8, 1);
  EXPECT_NE(a.mean_error, d.mean_error);
}

TEST(MonteCarlo, StandardErrorShrinksWithSamples) {
  const auto p = appendix_a_preset();
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto small = mc_position_error({}, p.interaction.vdw, p.trap, 2000, seed);
    const auto large = mc_position_error({}, p.interaction.vdw, p.trap, 8000, seed + 100);
    ratio_sum += large.std_error_of_mean / small.std_error_of_mean;
  }
  EXPECT_NEAR(ratio_sum / 5.0, 0.5, 0.1);
}

TEST(MonteCarlo, TemperatureEndpointsWithinFactorTwo) {
  const auto p = appendix_a_preset();
  TrapSpec t = p.trap;
  t.temperature_uK = 10.0;
  const auto cold = mc_position_error({}, p.interaction.vdw, t, 20000, 11);
  t.temperature_uK = 200.0;
  const auto hot = mc_position_error({}, p.interaction.vdw, t, 20000, 11);
  EXPECT_GT(cold.mean_error, 0.7e-4);
  EXPECT_LT(cold.mean_error, 2.8e-4);
  EXPECT_GT(hot.mean_error, 2.6e-3);
  EXPECT_LT(hot.mean_error, 10.4e-3);
}

TEST(MonteCarlo, RequiresEnoughSamples) {
  const auto p = appendix_a_preset();
  EXPECT_THROW(mc_position_error({}, p.interaction.vdw, p.trap, 999, 1), ContractViolation);
}

}  // namespace
}  // namespace barenco
