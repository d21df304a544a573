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

// Closed-form Barenco gate construction: the gate matrix, the angle maps of
// the two-pulse (Protocol I) and six-pulse (Protocol II) sequences, the
// special gates they reach, and an exact pulse-map composition used as the
// oracle for every closed-form angle formula.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barenco/atoms.hpp"
#include "barenco/numerics.hpp"
#include "barenco/units.hpp"

namespace barenco {

/// Angles of
///   [[1, 0, 0, 0],
///    [0, 1, 0, 0],
///    [0, 0, e^{ia} cos t,          -i e^{i(a-p)} sin t],
///    [0, 0, -i e^{i(a+p)} sin t,   e^{ia} cos t]]
/// on the ordered basis {|00>, |01>, |10>, |11>}.
struct GateAngles {
  double alpha = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Angles in the unique canonical chart: theta in [0, pi/2],
/// alpha, phi in (-pi, pi]; at theta = pi/2 alpha lies in [0, pi).
/// phi is meaningless at theta = 0 and is then reported as 0.
struct CanonicalAngles {
  GateAngles angles;
  bool phi_undefined = false;
};

inline constexpr double kAngleTolerance = 1e-12;

/// Resolves (t, p) ~ (-t, p + pi), (a, t, p) ~ (a + pi, pi - t, p + pi) and
/// 2 pi periodicity.
inline CanonicalAngles canonicalize(GateAngles raw) {
  double a = raw.alpha;
  double t = wrap_angle(raw.theta);
  double p = raw.phi;
  if (t < 0.0) {
    t = -t;
    p += kPi;
  }
  if (t > 0.5 * kPi) {
    a += kPi;
    t = kPi - t;
    p += kPi;
  }
  a = wrap_angle(a);
  p = wrap_angle(p);
  CanonicalAngles out;
  if (t <= kAngleTolerance) {
    out.phi_undefined = true;
    p = 0.0;
  } else if (std::abs(t - 0.5 * kPi) <= kAngleTolerance &&
             !(a >= 0.0 && a < kPi)) {
    a = wrap_angle(a + kPi);
    p = wrap_angle(p + kPi);
  }
  out.angles = {a + 0.0, t + 0.0, p + 0.0};  // no negative zeros
  return out;
}

/// Largest wrapped difference between two gates' canonical angles; phi is
/// ignored when both are non-entangling.
inline double angle_distance(GateAngles x, GateAngles y) {
  const auto cx = canonicalize(x);
  const auto cy = canonicalize(y);
  const auto diff = [](GateAngles u, GateAngles v, bool skip_phi) {
    double d = std::max(std::abs(wrap_angle(u.alpha - v.alpha)),
                        std::abs(u.theta - v.theta));
    if (!skip_phi) d = std::max(d, std::abs(wrap_angle(u.phi - v.phi)));
    return d;
  };
  const bool skip = cx.phi_undefined && cy.phi_undefined;
  const GateAngles& u = cx.angles;
  const GateAngles& v = cy.angles;
  // Near theta = pi/2 the tie-break may split the two charts.
  const GateAngles v_alt{v.alpha + kPi, kPi - v.theta, v.phi + kPi};
  return std::min(diff(u, v, skip), diff(u, v_alt, skip));
}

inline CMatrix barenco_matrix(const GateAngles& g) {
  CMatrix b = CMatrix::Identity(4, 4);
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  b(2, 2) = std::exp(kI * g.alpha) * c;
  b(3, 3) = b(2, 2);
  b(2, 3) = -kI * std::exp(kI * (g.alpha - g.phi)) * s;
  b(3, 2) = -kI * std::exp(kI * (g.alpha + g.phi)) * s;
  return b;
}

inline CMatrix cnot_matrix() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(3, 2) = m(2, 3) = 1.0;
  return m;
}

/// |10> -> -i|11>, |11> -> i|10>.
inline CMatrix controlled_y_matrix() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(3, 2) = -kI;
  m(2, 3) = kI;
  return m;
}

enum class Protocol { I, II };

inline const char* to_string(Protocol p) { return p == Protocol::I ? "I" : "II"; }

struct ProtocolParams {
  Protocol protocol = Protocol::I;
  NoncollinearV interaction;
  double beta1 = 0.25 * kPi;  // mixing angle that produced `interaction`
  double T = 0.0;             // wait duration per wait period, us
};

/// Builds parameters from a blockade spec and rotated basis.
inline ProtocolParams make_params(Protocol protocol, const BlockadeSpec& b,
                                  const RotatedBasis& basis, double T) {
  return {protocol, noncollinear_from_blockade(b, basis), basis.beta1, T};
}

/// Throws ContractViolation when the interaction does not suit the protocol.
inline void validate(const ProtocolParams& p) {
  require(p.T >= 0.0, "wait duration must be non-negative");
  const NoncollinearV& v = p.interaction;
  if (p.protocol == Protocol::I) {
    const double scale =
        std::max({std::abs(v.v1), std::abs(v.v2), std::abs(v.ve)});
    require(std::abs(v.v1 - v.v2) <= 1e-9 * scale,
            "Protocol I requires V1 = V2 (beta1 = pi/4)");
  } else {
    require(std::abs(wrap_angle(v.beta0)) <= kAngleTolerance,
            "Protocol II requires beta0 = 0");
  }
}

struct Protocol1Angles {
  GateAngles raw;  // alpha = pi - V1 T, theta = Ve T (signed), phi = beta0
  CanonicalAngles canonical;
  std::optional<double> slope;  // (b01 + b02) / (b01 - b02)
  bool non_entangling = false;
};

/// Protocol I angles from the blockade shifts at beta1 = pi/4 (V1 = V2).
/// theta carries the sign of Ve = (b01 - b02) / 2 before canonicalization.
inline Protocol1Angles protocol1_angles(const BlockadeSpec& b, double T,
                                        double beta0) {
  require(T >= 0.0, "protocol1_angles: T must be non-negative");
  Protocol1Angles out;
  out.raw = {kPi - 0.5 * (b.b01 + b.b02) * T, 0.5 * (b.b01 - b.b02) * T,
             beta0};
  out.canonical = canonicalize(out.raw);
  if (b.b01 != b.b02) {
    out.slope = (b.b01 + b.b02) / (b.b01 - b.b02);
  } else {
    out.non_entangling = true;
  }
  return out;
}

/// Same map written in terms of the interaction block (V1 = V2 assumed).
inline Protocol1Angles protocol1_angles(const NoncollinearV& v, double T) {
  require(T >= 0.0, "protocol1_angles: T must be non-negative");
  Protocol1Angles out;
  const double vd = 0.5 * (v.v1 + v.v2);
  out.raw = {kPi - vd * T, v.ve * T, v.beta0};
  out.canonical = canonicalize(out.raw);
  if (v.ve != 0.0) {
    out.slope = vd / v.ve;
  } else {
    out.non_entangling = true;
  }
  return out;
}

struct Protocol2Angles {
  GateAngles raw;  // alpha = -T (V1 + V2), theta in [-pi, pi], phi
  CanonicalAngles canonical;
  double sin_theta = 0.0;
  double cos_theta = 1.0;
  double sin_phi = 0.0;
  double cos_phi = 1.0;
};

/// Six-pulse angles evaluated directly from the (eta1, eta2, vbar) spectral
/// data of the interaction block.
inline Protocol2Angles protocol2_angles(const NoncollinearV& v, double T) {
  require(T >= 0.0, "protocol2_angles: T must be non-negative");
  require(std::abs(wrap_angle(v.beta0)) <= kAngleTolerance,
          "protocol2_angles: beta0 must be 0");
  const SpectralData sd = eig2(v.v1, v.v2, v.ve);
  const double e1 = sd.eta1;
  const double e2 = sd.eta2;
  const double vbar = sd.half_gap();
  const double cm1 = std::cos(2.0 * T * vbar) - 1.0;
  const double sn = std::sin(2.0 * T * vbar);
  const double diff = e1 * e1 - e2 * e2;

  Protocol2Angles out;
  out.sin_theta = 2.0 * e1 * e2 * std::sqrt(diff * diff * cm1 * cm1 + sn * sn);
  out.cos_theta = 1.0 + 4.0 * e1 * e1 * e2 * e2 * cm1;
  const double abs_sin = std::abs(out.sin_theta);
  if (abs_sin > kAngleTolerance) {
    // Signed division: with eta1 eta2 < 0 (ve < 0) the sign of sin(theta)
    // already encodes the pi shift of phi.
    out.sin_phi = 2.0 * e1 * e2 * diff * cm1 / out.sin_theta;
    out.cos_phi = 2.0 * e1 * e2 * sn / out.sin_theta;
  }
  out.raw = {-T * (v.v1 + v.v2), std::atan2(out.sin_theta, out.cos_theta),
             abs_sin > kAngleTolerance ? std::atan2(out.sin_phi, out.cos_phi)
                                       : 0.0};
  out.canonical = canonicalize(out.raw);
  return out;
}

/// Closed-form angles for either protocol.
inline CanonicalAngles closed_form_angles(const ProtocolParams& p) {
  validate(p);
  if (p.protocol == Protocol::I)
    return protocol1_angles(p.interaction, p.T).canonical;
  return protocol2_angles(p.interaction, p.T).canonical;
}

/// Wait-period evolution on (|r1 r2>, |r1 r3>) written through the
/// eigenpairs: |r1 r2> -> eta1 e^{-iT l+}|l+> + eta2 e^{-iT l- + i b0}|l->,
/// |r1 r3> -> eta2 e^{-iT l+ - i b0}|l+> - eta1 e^{-iT l-}|l->.
inline CMatrix wait_propagator(const NoncollinearV& v, double T) {
  const SpectralData sd = eig2(v.v1, v.v2, v.ve);
  const Complex eb = std::exp(kI * v.beta0);
  Eigen::Vector2cd plus(sd.eta1, sd.eta2 * eb);
  Eigen::Vector2cd minus(sd.eta2 * std::conj(eb), -sd.eta1);
  const Complex ep = std::exp(-kI * (T * sd.lambda_plus));
  const Complex em = std::exp(-kI * (T * sd.lambda_minus));
  CMatrix w(2, 2);
  w.col(0) = sd.eta1 * ep * plus + sd.eta2 * em * eb * minus;
  w.col(1) = sd.eta2 * ep * std::conj(eb) * plus - sd.eta1 * em * minus;
  return w;
}

namespace detail {

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Ideal level layout: control {|0>, |1>, |r1>}, target {|0>, |1>, |r2>,
// |r3>}; two-atom index 4 c + t.
inline constexpr std::array<Index, 4> kIdealComputational{0, 1, 4, 5};

// Exact resonant pi pulse with Rabi sign s on the listed (ground, excited)
// pairs: |g> -> -i s |e>, |e> -> -i s |g>.
inline CMatrix pi_map(Index dim, std::initializer_list<std::pair<Index, Index>> pairs,
                      double sign) {
  CMatrix u = CMatrix::Identity(dim, dim);
  for (auto [g, e] : pairs) {
    u(g, g) = u(e, e) = 0.0;
    u(e, g) = u(g, e) = -kI * sign;
  }
  return u;
}

inline CMatrix control_pulse(double sign) { return pi_map(3, {{1, 2}}, sign); }
// |0> <-> |r2>, |1> <-> |r3>
inline CMatrix target_pulse_direct(double sign) {
  return pi_map(4, {{0, 2}, {1, 3}}, sign);
}
// |0> <-> |r3>, |1> <-> |r2>
inline CMatrix target_pulse_crossed(double sign) {
  return pi_map(4, {{0, 3}, {1, 2}}, sign);
}

inline CMatrix ideal_wait(const NoncollinearV& v, double T) {
  CMatrix u = CMatrix::Identity(12, 12);
  u.block(10, 10, 2, 2) = wait_propagator(v, T);
  return u;
}

}  // namespace detail

/// Composes the ideal pulse maps and wait propagators on the two-atom space
/// and restricts to the computational basis.
///
/// Protocol I: [control +, target direct +], wait, [control +, target
/// direct -]. Protocol II: control +, target direct +, wait, target direct +,
/// target crossed +, wait, target crossed +, control - (exact inverse of
/// the first pulse).
inline CMatrix compose_ideal(const ProtocolParams& p) {
  using namespace detail;
  validate(p);
  const CMatrix i3 = CMatrix::Identity(3, 3);
  const CMatrix i4 = CMatrix::Identity(4, 4);
  const CMatrix wait = ideal_wait(p.interaction, p.T);
  std::vector<CMatrix> steps;
  if (p.protocol == Protocol::I) {
    steps = {kron(control_pulse(+1), target_pulse_direct(+1)), wait,
             kron(control_pulse(+1), target_pulse_direct(-1))};
  } else {
    steps = {kron(control_pulse(+1), i4),
             kron(i3, target_pulse_direct(+1)),
             wait,
             kron(i3, target_pulse_direct(+1)),
             kron(i3, target_pulse_crossed(+1)),
             wait,
             kron(i3, target_pulse_crossed(+1)),
             kron(control_pulse(-1), i4)};
  }
  CMatrix u = CMatrix::Identity(12, 12);
  for (const auto& s : steps) u = s * u;
  CMatrix out(4, 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      out(i, j) = u(kIdealComputational[i], kIdealComputational[j]);
  return out;
}

enum class SpecialGate { cnot, cy, b1 };

inline const char* to_string(SpecialGate g) {
  switch (g) {
    case SpecialGate::cnot: return "cnot";
    case SpecialGate::cy: return "cy";
    case SpecialGate::b1: return "b1";
  }
  return "?";
}

/// Parameters realizing CNOT or Controlled-Y (Protocol I, b02 = 0, b01 > 0,
/// T = pi / b01) or the B1 gate (Protocol II, b01 + b02 = -|b01 - b02| / 4,
/// i.e. -b01/b02 in {5/3, 3/5} with a negative sum, T = pi / (2 vbar)).
/// `beta1_b1` is the Protocol II mixing angle used for B1.
inline ProtocolParams special_gate(SpecialGate kind, const BlockadeSpec& b,
                                   double beta1_b1 = 0.375 * kPi) {
  if (kind == SpecialGate::cnot || kind == SpecialGate::cy) {
    if (!(b.b01 > 0.0))
      throw InfeasibleError(std::string(to_string(kind)) +
                            " requires b01 > 0");
    if (std::abs(b.b02) > 1e-12 * std::abs(b.b01))
      throw InfeasibleError(std::string(to_string(kind)) +
                            " requires b02 = 0");
    const double beta0 = kind == SpecialGate::cnot ? 0.0 : -0.5 * kPi;
    return make_params(Protocol::I, b, {beta0, 0.25 * kPi, std::nullopt},
                       kPi / b.b01);
  }
  const double gap = std::abs(b.b01 - b.b02);
  if (gap == 0.0) throw InfeasibleError("b1 requires b01 != b02");
  if (std::abs((b.b01 + b.b02) + 0.25 * gap) > 1e-9 * gap)
    throw InfeasibleError(
        "b1 requires -b01/b02 in {5/3, 3/5} with b01 + b02 < 0");
  const auto cb = canonical_beta1(beta1_b1);
  if (cb.beta1 <= 1e-9 || std::abs(cb.beta1 - 0.25 * kPi) <= 1e-9 ||
      std::abs(cb.beta1 - 0.5 * kPi) <= 1e-9)
    throw InfeasibleError("b1 requires beta1 outside {0, pi/4, pi/2}");
  return make_params(Protocol::II, b, {0.0, beta1_b1, std::nullopt},
                     kPi / gap);
}

struct ExtractedAngles {
  CanonicalAngles angles;
  double residual = 0.0;  // min over global phase of ||U - B(angles)||_F
};

/// Inverse of barenco_matrix for matrices of (approximately) that form.
/// The global phase is taken from the |00>, |01> block; alpha from the
/// determinant of the lower block, with the branch fixed by cos(theta) >= 0.
inline ExtractedAngles extract_angles(const CMatrix& u) {
  require(u.rows() == 4 && u.cols() == 4, "extract_angles: need a 4x4 matrix");
  Complex g = u(0, 0) + u(1, 1);
  const Complex phase = std::abs(g) > 1e-12 ? g / std::abs(g) : Complex{1.0};
  const CMatrix m = u.block(2, 2, 2, 2) / phase;
  double alpha = 0.5 * std::arg(m.determinant());
  const Complex mean_diag = 0.5 * (m(0, 0) + m(1, 1));
  double c = (std::exp(-kI * alpha) * mean_diag).real();
  if (c < 0.0) {
    alpha += kPi;
    c = -c;
  }
  const double s = 0.5 * (std::abs(m(0, 1)) + std::abs(m(1, 0)));
  const double theta = std::atan2(s, c);
  const double phi = std::arg(m(1, 0)) - alpha + 0.5 * kPi;
  ExtractedAngles out;
  out.angles = canonicalize({alpha, theta, phi});
  out.residual = phase_aligned_frobenius(u, barenco_matrix(out.angles.angles));
  return out;
}

}  // namespace barenco
