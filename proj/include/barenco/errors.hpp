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

#pragma once

// Error budget for the Rydberg implementation: analytic decay, blockade and
// leakage estimates, interatomic force drift, optical-tweezer position
// spread, and a Monte Carlo estimate of the position-fluctuation error.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "barenco/atoms.hpp"
#include "barenco/numerics.hpp"
#include "barenco/parallel.hpp"
#include "barenco/protocols.hpp"
#include "barenco/units.hpp"

namespace barenco {

/// Leakage detunings of the dominant nearby Rydberg channels.
inline constexpr double kDelta1Default = from_2pi_ghz(1.8);
inline constexpr double kDelta2Default = from_2pi_ghz(1.5);

inline constexpr double kBudgetValidityLimit = 0.1;

struct ErrorBudget {
  double e_decay = 0.0;
  double e_blockade = 0.0;
  double e_leakage = 0.0;
  double total = 0.0;
  bool validity_warning = false;  // total > 0.1: estimates no longer small
};

/// Rydberg decay error. For Protocol I this is
///   [(pi/Omega + T)(tau1 + tau2)/2] / [tau1 tau2 + sin^2 b1 cos^2 b1
///   (tau1 - tau2)^2] + (pi/(2 Omega) + T/2) / tau1.
/// Protocol II uses the same form with its longer Rydberg residence:
/// target 2 pi/Omega + 2T, control (5 pi/Omega + 2T) / 2.
inline double decay_error(double T, double omega, double tau1, double tau2,
                          double beta1, Protocol protocol = Protocol::I) {
  require(tau1 > 0.0 && tau2 > 0.0, "decay_error: lifetimes must be positive");
  require(omega > 0.0, "decay_error: omega must be positive");
  const double sc = std::sin(beta1) * std::cos(beta1);
  const double denom = tau1 * tau2 + sc * sc * (tau1 - tau2) * (tau1 - tau2);
  double target_time, control_time;
  if (protocol == Protocol::I) {
    target_time = kPi / omega + T;
    control_time = kPi / (2.0 * omega) + T / 2.0;
  } else {
    target_time = 2.0 * kPi / omega + 2.0 * T;
    control_time = 5.0 * kPi / (2.0 * omega) + T;
  }
  return target_time * (tau1 + tau2) / 2.0 / denom + control_time / tau1;
}

/// 2 (V1^2 + V2^2) / Omega^2 per excitation round; Protocol II has two.
inline double blockade_error(const NoncollinearV& v, double omega,
                             Protocol protocol) {
  require(omega > 0.0, "blockade_error: omega must be positive");
  const double rounds = protocol == Protocol::I ? 1.0 : 2.0;
  return rounds * 2.0 * (v.v1 * v.v1 + v.v2 * v.v2) / (omega * omega);
}

/// Omega^2 / Delta1^2 + Omega^2 / (2 Delta2^2).
inline double leakage_error(double omega, double delta1 = kDelta1Default,
                            double delta2 = kDelta2Default) {
  require(delta1 != 0.0 && delta2 != 0.0,
          "leakage_error: detunings must be nonzero");
  const double w2 = omega * omega;
  return w2 / (delta1 * delta1) + w2 / (2.0 * delta2 * delta2);
}

struct BudgetInputs {
  Protocol protocol = Protocol::I;
  NoncollinearV v;
  double beta1 = 0.25 * kPi;
  double T = 0.0;      // us
  double omega = 0.0;  // rad/us
  double tau1 = 0.0;   // us
  double tau2 = 0.0;   // us
  double delta1 = kDelta1Default;
  double delta2 = kDelta2Default;
};

inline ErrorBudget total_budget(const BudgetInputs& in) {
  ErrorBudget b;
  b.e_decay = decay_error(in.T, in.omega, in.tau1, in.tau2, in.beta1,
                          in.protocol);
  b.e_blockade = blockade_error(in.v, in.omega, in.protocol);
  b.e_leakage = leakage_error(in.omega, in.delta1, in.delta2);
  b.total = b.e_decay + b.e_blockade + b.e_leakage;
  b.validity_warning = b.total > kBudgetValidityLimit;
  return b;
}

struct ForceDrift {
  double force_N = 0.0;          // -6 hbar C6 / l^7
  double delta_v_m_per_s = 0.0;  // |force| t / mass
  double delta_x_um = 0.0;       // delta_v t / 2, starting at rest
};

/// Drift of a Rydberg pair held for t_ry. c6 in rad/us um^6, l in um,
/// t_ry in us; outputs SI except delta_x in um.
inline ForceDrift force_drift(double c6, double l, double t_ry,
                              double mass = kRb87Mass) {
  require(l > 0.0, "force_drift: distance must be positive");
  require(mass > 0.0, "force_drift: mass must be positive");
  const double c6_si = kHbar * c6 * 1e6 * 1e-36;  // J m^6
  const double l_m = l * 1e-6;
  const double t_s = t_ry * 1e-6;
  ForceDrift out;
  out.force_N = -6.0 * c6_si / std::pow(l_m, 7);
  out.delta_v_m_per_s = std::abs(out.force_N) * t_s / mass;
  out.delta_x_um = out.delta_v_m_per_s * t_s / 2.0 * 1e6;
  return out;
}

struct TrapSpec {
  double waist = 3.0;          // um
  double wavelength = 1.1;     // um
  double depth_mK = 20.0;      // mK
  double temperature_uK = 0.0; // uK
};

struct TrapSigmas {
  double sigma_x = 0.0;  // um
  double sigma_y = 0.0;  // um
  double sigma_z = 0.0;  // um, along the tweezer axis
  double xi = 0.0;       // sqrt(2) pi w / lambda
  double omega_radial = 0.0;  // rad/s
  double omega_axial = 0.0;   // rad/s
  bool thermal_regime = true; // k_B Ta / 2 >= hbar omega on all axes
};

/// sigma_x^2 = sigma_y^2 = (w^2 / 4)(Ta / U), sigma_z = xi sigma_x.
inline TrapSigmas trap_sigmas(const TrapSpec& t, double mass = kRb87Mass) {
  require(t.waist > 0.0 && t.wavelength > 0.0 && t.depth_mK > 0.0 &&
              t.temperature_uK >= 0.0,
          "trap_sigmas: trap parameters must be positive");
  TrapSigmas s;
  const double ratio = t.temperature_uK * 1e-3 / t.depth_mK;
  s.sigma_x = s.sigma_y = 0.5 * t.waist * std::sqrt(ratio);
  s.xi = std::sqrt(2.0) * kPi * t.waist / t.wavelength;
  s.sigma_z = s.xi * s.sigma_x;
  const double depth_J = t.depth_mK * 1e-3 * kBoltzmann;
  const double w = t.waist * 1e-6;
  const double rayleigh = kPi * w * w / (t.wavelength * 1e-6);
  s.omega_radial = std::sqrt(4.0 * depth_J / (mass * w * w));
  s.omega_axial = std::sqrt(2.0 * depth_J / (mass * rayleigh * rayleigh));
  const double thermal = kBoltzmann * t.temperature_uK * 1e-6 / 2.0;
  s.thermal_regime = thermal >= kHbar * std::max(s.omega_radial, s.omega_axial);
  return s;
}

/// Gate whose interaction is rebuilt from the sampled separation.
struct PositionTemplate {
  Protocol protocol = Protocol::I;
  RotatedBasis basis{0.0, 0.25 * kPi, std::nullopt};
  double T = 0.5;  // us
};

struct MCResult {
  double mean_error = 0.0;
  double std_error_of_mean = 0.0;
  std::size_t samples = 0;          // requested
  std::size_t invalid_samples = 0;  // separation below the vdW limit, excluded
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64 stream; one independent stream per (seed, sample index).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  SplitMix64(std::uint64_t seed, std::uint64_t stream)
      : state_(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL))) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

inline CanonicalAngles template_angles(const PositionTemplate& tpl,
                                       const VdwSpec& vdw) {
  const BlockadeSpec b = blockade_from_c6(vdw);
  return closed_form_angles(make_params(tpl.protocol, b, tpl.basis, tpl.T));
}

}  // namespace detail

/// Mean infidelity of the closed-form gate when both atoms are displaced by
/// independent thermal Gaussians (separation along the radial x axis),
/// relative to the gate at the nominal separation. Deterministic in
/// (seed, samples) regardless of the worker count.
inline MCResult mc_position_error(const PositionTemplate& tpl,
                                  const VdwSpec& vdw, const TrapSpec& trap,
                                  std::size_t samples, std::uint64_t seed,
                                  unsigned workers = 0) {
  require(samples >= 1000, "mc_position_error: need at least 1000 samples");
  const TrapSigmas sig = trap_sigmas(trap);
  const CMatrix nominal = barenco_matrix(detail::template_angles(tpl, vdw).angles);

  std::vector<double> err(samples, 0.0);
  std::vector<char> valid(samples, 1);
  parallel_for(
      samples,
      [&](std::size_t i) {
        detail::SplitMix64 rng(seed, i);
        std::normal_distribution<double> n(0.0, 1.0);
        const double ax = n(rng) * sig.sigma_x, ay = n(rng) * sig.sigma_y,
                     az = n(rng) * sig.sigma_z;
        const double bx = n(rng) * sig.sigma_x, by = n(rng) * sig.sigma_y,
                     bz = n(rng) * sig.sigma_z;
        const double r = std::sqrt((vdw.l + bx - ax) * (vdw.l + bx - ax) +
                                   (by - ay) * (by - ay) + (bz - az) * (bz - az));
        if (r < kVdwMinDistanceUm) {
          valid[i] = 0;
          return;
        }
        VdwSpec moved = vdw;
        moved.l = r;
        const CMatrix g = barenco_matrix(detail::template_angles(tpl, moved).angles);
        err[i] = 1.0 - avg_gate_fidelity(g, nominal);
      },
      workers);

  MCResult out;
  out.samples = samples;
  out.seed = seed;
  double sum = 0.0;
  std::size_t n_valid = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    if (!valid[i]) continue;
    sum += err[i];
    ++n_valid;
  }
  out.invalid_samples = samples - n_valid;
  if (n_valid == 0) return out;
  out.mean_error = sum / static_cast<double>(n_valid);
  double ss = 0.0;
  for (std::size_t i = 0; i < samples; ++i)
    if (valid[i]) ss += (err[i] - out.mean_error) * (err[i] - out.mean_error);
  if (n_valid > 1) {
    const double var = ss / static_cast<double>(n_valid - 1);
    out.std_error_of_mean = std::sqrt(var / static_cast<double>(n_valid));
  }
  return out;
}

}  // namespace barenco
