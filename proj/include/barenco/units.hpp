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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace barenco {

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when requested gate parameters cannot be realized.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw ContractViolation(what);
}

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Internal units: angular frequency in rad/us, time in us, length in um,
// hbar = 1. Physical constants below are SI (CODATA 2018).
inline constexpr double kHbar = 1.054571817e-34;         // J s
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kAtomicMassUnit = 1.660539067e-27;  // kg
inline constexpr double kRb87Mass = 1.443160895e-25;     // kg

/// "x times 2 pi MHz" to rad/us.
constexpr double from_2pi_mhz(double x) { return kTwoPi * x; }
constexpr double to_2pi_mhz(double w) { return w / kTwoPi; }
constexpr double from_2pi_khz(double x) { return kTwoPi * x * 1e-3; }
constexpr double to_2pi_khz(double w) { return w / kTwoPi * 1e3; }
constexpr double from_2pi_ghz(double x) { return kTwoPi * x * 1e3; }

/// "x times 2 pi THz um^6" to rad/us um^6.
constexpr double c6_from_2pi_thz_um6(double x) { return kTwoPi * x * 1e6; }
constexpr double c6_to_2pi_thz_um6(double c6) { return c6 / kTwoPi * 1e-6; }

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

}  // namespace barenco
