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

// Interaction specifications: blockade shifts from van der Waals
// coefficients, the rotated Rydberg basis, and the non-collinear block it
// induces between |r1 r2> and |r1 r3>.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "barenco/numerics.hpp"
#include "barenco/units.hpp"

namespace barenco {

/// Below this separation the pair interaction is no longer of vdW type.
inline constexpr double kVdwMinDistanceUm = 5.0;

struct VdwSpec {
  double c6_01 = 0.0;  // rad/us um^6, pair |R0 R1>
  double c6_02 = 0.0;  // rad/us um^6, pair |R0 R2>
  std::optional<double> c6_03;
  double l = 0.0;  // um
  // Exchange coefficient between |R0 R2> and |R2 R0>. Kept for reference;
  // never enters a Hamiltonian.
  std::optional<double> c6_exchange;
};

/// Diagonal blockade shifts b_0k in rad/us.
struct BlockadeSpec {
  double b01 = 0.0;
  double b02 = 0.0;
  std::optional<double> b03;
};

/// |r2> = cos b1 |R1> + sin b1 e^{i b0} |R2>,
/// |r3> = sin b1 e^{-i b0} |R1> - cos b1 |R2>, optionally with
/// |R2> -> cos b2 |R2> + sin b2 |R3>.
struct RotatedBasis {
  double beta0 = 0.0;
  double beta1 = 0.0;
  std::optional<double> beta2;
};

/// [[v1, ve e^{-i beta0}], [ve e^{i beta0}, v2]] on (|r1 r2>, |r1 r3>).
struct NoncollinearV {
  double v1 = 0.0;
  double v2 = 0.0;
  double ve = 0.0;
  double beta0 = 0.0;
};

/// Warnings for a geometry outside the vdW regime (empty when fine).
inline std::vector<std::string> validate(const VdwSpec& spec) {
  std::vector<std::string> warnings;
  if (spec.l < kVdwMinDistanceUm)
    warnings.push_back(
        "separation below 5 um: interaction is not of van der Waals type");
  return warnings;
}

/// b_0k = C6_0k / l^6.
inline BlockadeSpec blockade_from_c6(const VdwSpec& spec) {
  require(spec.l > 0.0, "blockade_from_c6: distance must be positive");
  const double l6 = std::pow(spec.l, 6);
  BlockadeSpec b;
  b.b01 = spec.c6_01 / l6;
  b.b02 = spec.c6_02 / l6;
  if (spec.c6_03) b.b03 = *spec.c6_03 / l6;
  return b;
}

/// b02 cos^2 b2 + b03 sin^2 b2: the shift seen by the dressed |R2>.
inline double b02_tuned(double b02, double b03, double beta2) {
  const double c = std::cos(beta2);
  const double s = std::sin(beta2);
  return b02 * c * c + b03 * s * s;
}

/// Applies the beta2 dressing when both beta2 and b03 are present.
inline BlockadeSpec effective_blockade(const BlockadeSpec& b,
                                       const RotatedBasis& basis) {
  if (!basis.beta2) return b;
  require(b.b03.has_value(), "beta2 dressing needs b03 (c6_03)");
  BlockadeSpec out = b;
  out.b02 = b02_tuned(b.b02, *b.b03, *basis.beta2);
  return out;
}

struct CanonicalBeta1 {
  double beta1 = 0.0;  // [0, pi/2]
  int ve_sign = 1;     // sign picked up by ve under the reduction
};

/// Reduces beta1 into [0, pi/2] using the period-pi symmetry of the
/// coefficient map and beta1 -> pi - beta1 (which flips ve only).
inline CanonicalBeta1 canonical_beta1(double beta1) {
  double b = std::fmod(beta1, kPi);
  if (b < 0.0) b += kPi;
  if (b > 0.5 * kPi) return {kPi - b, -1};
  return {b, 1};
}

/// V1 = b01 cos^2 + b02 sin^2, V2 = b01 sin^2 + b02 cos^2,
/// Ve = (b01 - b02) sin cos. Uses the beta2-dressed b02 when requested.
inline NoncollinearV noncollinear_from_blockade(const BlockadeSpec& blockade,
                                                const RotatedBasis& basis) {
  const BlockadeSpec b = effective_blockade(blockade, basis);
  const auto [beta1, sign] = canonical_beta1(basis.beta1);
  const double c = std::cos(beta1);
  const double s = std::sin(beta1);
  NoncollinearV v;
  v.v1 = b.b01 * c * c + b.b02 * s * s;
  v.v2 = b.b01 * s * s + b.b02 * c * c;
  v.ve = sign * (b.b01 - b.b02) * s * c;
  v.beta0 = basis.beta0;
  return v;
}

/// The 2x2 interaction block on (|r1 r2>, |r1 r3>).
inline CMatrix interaction_block(const NoncollinearV& v) {
  CMatrix h(2, 2);
  h(0, 0) = v.v1;
  h(1, 1) = v.v2;
  h(0, 1) = v.ve * std::exp(-kI * v.beta0);
  h(1, 0) = v.ve * std::exp(kI * v.beta0);
  return h;
}

/// Columns are |r2>, |r3> expressed in (|R1>, |R2>). The relative phase of
/// |R1> and |R2> is fixed so that beta0 sits on the |R2> component of |r2>.
inline CMatrix basis_change(const RotatedBasis& basis) {
  const double c = std::cos(basis.beta1);
  const double s = std::sin(basis.beta1);
  CMatrix m(2, 2);
  m(0, 0) = c;
  m(1, 0) = s * std::exp(kI * basis.beta0);
  m(0, 1) = s * std::exp(-kI * basis.beta0);
  m(1, 1) = -c;
  return m;
}

}  // namespace barenco
