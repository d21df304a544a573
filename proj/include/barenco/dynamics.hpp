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

#include <array>
#include <optional>
#include <vector>

#include "barenco/protocols.hpp"

namespace barenco {

// Two-atom layout: control {|0>, |1>, |R0>}, target {|0>, |1>, |R1>, |R2>};
// index 4 c + t. R1 and R2 are the unrotated Rydberg levels with diagonal
// blockade shifts b01 and b02.
inline constexpr Index kSimDim = 12;
inline constexpr std::array<Index, 4> kSimComputational{0, 1, 4, 5};

enum class SegmentKind { pulse, wait };

inline const char* to_string(SegmentKind k) {
  return k == SegmentKind::pulse ? "pulse" : "wait";
}

struct PulseSegment {
  SegmentKind kind = SegmentKind::wait;
  double duration = 0.0;  // us
  Complex control_rabi{0.0};
  // |0>t<->|R1>, |0>t<->|R2>, |1>t<->|R1>, |1>t<->|R2>
  std::array<Complex, 4> target_rabi{};
};

struct DecaySpec {
  double tau1 = 0.0;   // |R1> lifetime, us
  double tau2 = 0.0;   // |R2> lifetime, us
  double tau_r1 = 0.0; // control Rydberg lifetime, us
};

struct SimConfig {
  double omega = 0.0;  // rad/us
  bool include_interaction_during_pulses = true;
  std::optional<DecaySpec> decay;
  bool merge_pulses = false;  // Protocol II: run pulses 1+2 and 5+6 together
};

inline void validate(const SimConfig& cfg) {
  require(cfg.omega > 0.0, "SimConfig: omega must be positive");
  if (cfg.decay) {
    require(cfg.decay->tau1 > 0.0 && cfg.decay->tau2 > 0.0 &&
                cfg.decay->tau_r1 > 0.0,
            "SimConfig: lifetimes must be positive");
  }
}

namespace detail {

// Target amplitudes coupling |0> to r2 and |1> to r3.
inline std::array<Complex, 4> direct_amplitudes(double omega, double beta0,
                                                double beta1) {
  const double c = std::cos(beta1), s = std::sin(beta1);
  const Complex e = std::exp(kI * beta0);
  return {omega * c, omega * s * e, omega * s * std::conj(e), -omega * c};
}

// Target amplitudes coupling |0> to r3 and |1> to r2.
inline std::array<Complex, 4> crossed_amplitudes(double omega, double beta0,
                                                 double beta1) {
  const double c = std::cos(beta1), s = std::sin(beta1);
  const Complex e = std::exp(kI * beta0);
  return {omega * s * std::conj(e), -omega * c, omega * c, omega * s * e};
}

inline std::array<Complex, 4> scaled(std::array<Complex, 4> a, double k) {
  for (auto& x : a) x *= k;
  return a;
}

inline PulseSegment pulse(double omega, Complex control,
                          std::array<Complex, 4> target) {
  return {SegmentKind::pulse, kPi / omega, control, target};
}

}  // namespace detail

/// Square-pulse sequence for a protocol. Every pulse lasts pi / omega.
inline std::vector<PulseSegment> build_sequence(const ProtocolParams& p,
                                                const SimConfig& cfg) {
  using namespace detail;
  validate(p);
  validate(cfg);
  const double w = cfg.omega;
  const double b0 = p.interaction.beta0;
  const auto direct = direct_amplitudes(w, b0, p.beta1);
  const auto crossed = crossed_amplitudes(w, b0, p.beta1);
  const std::array<Complex, 4> none{};
  const PulseSegment wait{SegmentKind::wait, p.T, 0.0, none};
  if (p.protocol == Protocol::I)
    return {pulse(w, w, direct), wait, pulse(w, w, scaled(direct, -1.0))};
  if (cfg.merge_pulses)
    return {pulse(w, w, direct),    wait, pulse(w, 0.0, direct),
            pulse(w, 0.0, crossed), wait, pulse(w, -w, crossed)};
  return {pulse(w, w, none),       pulse(w, 0.0, direct),
          wait,                    pulse(w, 0.0, direct),
          pulse(w, 0.0, crossed),  wait,
          pulse(w, 0.0, crossed),  pulse(w, -w, none)};
}

/// Segment Hamiltonian on the 12-level space. Each coupling contributes
/// (a / 2)|e><g| + h.c.; the blockade diagonal sits on |R0 R1> and |R0 R2>.
inline CMatrix build_hamiltonian(const PulseSegment& seg, const BlockadeSpec& b,
                                 bool include_interaction = true,
                                 const std::optional<DecaySpec>& decay = {}) {
  CMatrix h = CMatrix::Zero(kSimDim, kSimDim);
  const auto idx = [](Index c, Index t) { return 4 * c + t; };
  const auto couple = [&](Index g, Index e, Complex a) {
    h(e, g) += 0.5 * a;
    h(g, e) += 0.5 * std::conj(a);
  };
  if (seg.control_rabi != 0.0)
    for (Index t = 0; t < 4; ++t) couple(idx(1, t), idx(2, t), seg.control_rabi);
  static constexpr std::array<std::pair<Index, Index>, 4> kPairs{
      {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
  for (std::size_t k = 0; k < 4; ++k) {
    if (seg.target_rabi[k] == 0.0) continue;
    for (Index c = 0; c < 3; ++c)
      couple(idx(c, kPairs[k].first), idx(c, kPairs[k].second), seg.target_rabi[k]);
  }
  if (seg.kind == SegmentKind::wait || include_interaction) {
    h(idx(2, 2), idx(2, 2)) += b.b01;
    h(idx(2, 3), idx(2, 3)) += b.b02;
  }
  if (decay) {
    for (Index c = 0; c < 3; ++c) {
      for (Index t = 0; t < 4; ++t) {
        double rate = 0.0;
        if (c == 2) rate += 1.0 / decay->tau_r1;
        if (t == 2) rate += 1.0 / decay->tau1;
        if (t == 3) rate += 1.0 / decay->tau2;
        h(idx(c, t), idx(c, t)) -= 0.5 * kI * rate;
      }
    }
  }
  return h;
}

struct SimResult {
  CMatrix u_sim;    // 12 x 12
  CMatrix u_qubit;  // 4 x 4 restriction to the computational basis
  GateAngles ideal_angles;
  double fidelity = 0.0;
  ExtractedAngles angles;
  double mean_population = 0.0;  // Tr(U_q^dag U_q) / 4
  double min_population = 0.0;   // smallest column norm^2 of U_q
  std::vector<PulseSegment> segments;
};

/// Propagates the pulse sequence and compares the computational block with
/// the closed-form gate.
inline SimResult simulate(const ProtocolParams& p, const BlockadeSpec& b,
                          const SimConfig& cfg) {
  const NoncollinearV expect = noncollinear_from_blockade(
      {b.b01, b.b02, std::nullopt}, {p.interaction.beta0, p.beta1, std::nullopt});
  const double scale = 1.0 + std::abs(b.b01) + std::abs(b.b02);
  require(std::abs(expect.v1 - p.interaction.v1) <= 1e-9 * scale &&
              std::abs(expect.v2 - p.interaction.v2) <= 1e-9 * scale &&
              std::abs(expect.ve - p.interaction.ve) <= 1e-9 * scale,
          "simulate: protocol interaction does not match the blockade spec");
  SimResult r;
  r.segments = build_sequence(p, cfg);
  const Generator kind = cfg.decay ? Generator::non_hermitian : Generator::hermitian;
  r.u_sim = CMatrix::Identity(kSimDim, kSimDim);
  for (const auto& seg : r.segments) {
    const CMatrix h =
        build_hamiltonian(seg, b, cfg.include_interaction_during_pulses, cfg.decay);
    r.u_sim = propagate(h, seg.duration, kind) * r.u_sim;
  }
  r.u_qubit.resize(4, 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      r.u_qubit(i, j) = r.u_sim(kSimComputational[i], kSimComputational[j]);
  r.ideal_angles = closed_form_angles(p).angles;
  r.fidelity = avg_gate_fidelity(r.u_qubit, barenco_matrix(r.ideal_angles));
  r.angles = extract_angles(r.u_qubit);
  r.mean_population = r.u_qubit.squaredNorm() / 4.0;
  r.min_population = r.u_qubit.colwise().squaredNorm().minCoeff();
  return r;
}

}  // namespace barenco
