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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "barenco/parallel.hpp"
#include "barenco/protocols.hpp"

namespace barenco {

inline constexpr double kProtocol1Tolerance = 1e-9;
inline constexpr double kProtocol2Tolerance = 1e-8;
inline constexpr double kBasinThreshold = 1e-3;

struct Basin {
  double beta1 = 0.0;
  double T = 0.0;          // representative in (0, period]
  double residual = 0.0;   // max(|d theta|, |d phi|) after refinement
};

struct DesignSolution {
  ProtocolParams params;
  GateAngles achieved;
  double residual = std::numeric_limits<double>::infinity();
  bool feasible = false;
  bool non_entangling = false;
  std::optional<double> period;  // T-period of the solution family, us
  std::optional<double> b02;     // free-ratio mode: the required b02
  std::vector<Basin> basins;     // Protocol II only
  std::string reason;            // why the solution is infeasible
};

namespace detail {

// Forward evaluation; the residual is never taken from a solver.
inline void finish(DesignSolution& s, const GateAngles& target, double tolerance) {
  const auto forward = closed_form_angles(s.params);
  s.achieved = forward.angles;
  s.residual = angle_distance(forward.angles, target);
  s.non_entangling = forward.phi_undefined;
  s.feasible = s.residual <= tolerance;
}

// Rational p/q with q <= max_q approximating x within tol, if any.
inline std::optional<std::pair<long long, long long>> small_rational(
    double x, long long max_q, double tol) {
  long double r = x;
  long long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int it = 0; it < 64; ++it) {
    const long double a = std::floor(r);
    if (std::abs(a) > 1e12L) break;
    const long long ai = static_cast<long long>(a);
    const long long h = ai * h1 + h2;
    const long long k = ai * k1 + k2;
    if (k > max_q) break;
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol)
      return std::make_pair(h, k);
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const long double frac = r - a;
    if (frac <= 0.0L) break;
    r = 1.0L / frac;
  }
  return std::nullopt;
}

}  // namespace detail

/// Common period of exp(-i b01 T) and exp(-i b02 T), when it exists with a
/// small rational ratio (q <= 100).
inline std::optional<double> protocol1_period(const BlockadeSpec& b) {
  if (b.b01 == 0.0 && b.b02 == 0.0) return std::nullopt;
  if (b.b02 == 0.0) return kTwoPi / std::abs(b.b01);
  if (b.b01 == 0.0) return kTwoPi / std::abs(b.b02);
  const auto pq = detail::small_rational(std::abs(b.b01 / b.b02), 100, 1e-12);
  if (!pq) return std::nullopt;
  return kTwoPi * static_cast<double>(pq->first) / std::abs(b.b01);
}

/// Protocol I for fixed blockade shifts: the smallest T >= 0 and the beta0
/// that realize the target, when alpha = pi - slope theta holds on some
/// branch of the angle equivalences.
inline DesignSolution solve_protocol1(const GateAngles& target_in,
                                      const BlockadeSpec& b,
                                      int max_branches = 20000) {
  const GateAngles target = canonicalize(target_in).angles;
  DesignSolution out;
  out.period = protocol1_period(b);
  const double d = b.b01 - b.b02;
  if (d == 0.0) {
    out.reason = "b01 = b02: Protocol I cannot entangle and theta is stuck at 0";
    const bool cz = angle_distance(target, {kPi, 0.0, 0.0}) <= kProtocol1Tolerance;
    out.params = make_params(Protocol::I, b, {0.0, 0.25 * kPi, std::nullopt}, 0.0);
    detail::finish(out, target, kProtocol1Tolerance);
    out.feasible = cz;
    if (cz) out.reason.clear();
    return out;
  }
  const double sum = b.b01 + b.b02;
  const double sd = d > 0.0 ? 1.0 : -1.0;
  const bool no_phi = target.theta <= kAngleTolerance;
  double best_T = std::numeric_limits<double>::infinity();
  double best_beta0 = 0.0;
  double closest = std::numeric_limits<double>::infinity();
  double closest_T = 0.0, closest_beta0 = 0.0;
  int limit = max_branches;
  if (out.period) {
    limit = static_cast<int>(std::ceil(*out.period * std::abs(d) / kTwoPi)) + 2;
  }
  for (int m = 0; m <= limit; ++m) {
    for (double sigma : {1.0, -1.0}) {
      const double theta_raw = sigma * target.theta + sd * m * kPi;
      if (sd * theta_raw < 0.0) continue;
      const double T = 2.0 * theta_raw / d;
      const double alpha_raw = target.alpha + sd * m * kPi;
      const double err = std::abs(wrap_angle(kPi - 0.5 * sum * T - alpha_raw));
      const double beta0 =
          no_phi ? 0.0 : wrap_angle(target.phi + (sigma < 0.0 ? kPi : 0.0));
      if (err < closest) {
        closest = err;
        closest_T = T;
        closest_beta0 = beta0;
      }
      if (err <= kProtocol1Tolerance && T < best_T) {
        best_T = T;
        best_beta0 = beta0;
      }
    }
    if (std::isfinite(best_T)) break;
  }
  const bool found = std::isfinite(best_T);
  out.params = make_params(Protocol::I, b,
                           {found ? best_beta0 : closest_beta0, 0.25 * kPi,
                            std::nullopt},
                           found ? best_T : closest_T);
  detail::finish(out, target, kProtocol1Tolerance);
  if (!out.feasible)
    out.reason = "alpha = pi - slope * theta has no solution within 1e-9 "
                 "for this b01/b02 (closest branch reported)";
  return out;
}

/// Protocol I with the ratio left free: b01 is given and the b02 that puts
/// the target on the Protocol I line is returned along with the smallest T.
inline DesignSolution solve_protocol1_free_ratio(const GateAngles& target_in,
                                                 double b01) {
  require(b01 != 0.0, "free-ratio design needs b01 != 0");
  const GateAngles target = canonicalize(target_in).angles;
  if (angle_distance(target, {kPi, 0.0, 0.0}) <= kProtocol1Tolerance) {
    DesignSolution out = solve_protocol1(target, {b01, 0.0, std::nullopt});
    out.b02 = 0.0;
    return out;
  }
  double best_T = std::numeric_limits<double>::infinity();
  double best_b02 = 0.0;
  for (double sigma : {1.0, -1.0}) {
    for (int k = -3; k <= 3; ++k) {
      for (int j = -3; j <= 3; ++j) {
        const double theta_raw = sigma * target.theta + k * kPi;
        if (std::abs(theta_raw) <= kAngleTolerance) continue;
        const double alpha_raw = target.alpha + k * kPi + kTwoPi * j;
        const double slope = (kPi - alpha_raw) / theta_raw;
        if (std::abs(slope + 1.0) <= 1e-12) continue;
        const double b02 = b01 * (slope - 1.0) / (slope + 1.0);
        const double T = (theta_raw + kPi - alpha_raw) / b01;
        if (!(T > 0.0)) continue;
        const bool better =
            T < best_T - 1e-12 ||
            (std::abs(T - best_T) <= 1e-12 && std::abs(b02) < std::abs(best_b02));
        if (better) {
          best_T = T;
          best_b02 = b02;
        }
      }
    }
  }
  if (!std::isfinite(best_T)) {
    DesignSolution out;
    out.reason = "no finite b02 places the target on a Protocol I line";
    return out;
  }
  DesignSolution out = solve_protocol1(target, {b01, best_b02, std::nullopt});
  out.b02 = best_b02;
  return out;
}

namespace detail {

struct P2Residual {
  double d_theta = 0.0;
  double d_phi = 0.0;
  double norm() const { return std::max(std::abs(d_theta), std::abs(d_phi)); }
};

inline P2Residual p2_residual(const BlockadeSpec& b, const GateAngles& target,
                              double beta1, double T) {
  const auto v = noncollinear_from_blockade(b, {0.0, beta1, std::nullopt});
  const auto a = protocol2_angles(v, T);
  const auto c = canonicalize({0.0, a.raw.theta, a.raw.phi}).angles;
  P2Residual best{1e300, 1e300};
  const GateAngles options[2] = {c, {0.0, kPi - c.theta, c.phi + kPi}};
  for (const auto& o : options) {
    P2Residual r{o.theta - target.theta, wrap_angle(o.phi - target.phi)};
    if (r.norm() < best.norm()) best = r;
  }
  return best;
}

}  // namespace detail

/// Protocol II for fixed blockade shifts. (beta1, T) are found from theta
/// and phi by a 64 x 64 grid scan over beta1 in (0, pi/2), T in (0, pi/vbar]
/// with damped Newton refinement; alpha = -T (b01 + b02) is then matched by
/// stepping T through whole periods of the (theta, phi) map.
inline DesignSolution solve_protocol2(const GateAngles& target_in,
                                      const BlockadeSpec& b,
                                      int max_periods = 2000,
                                      unsigned workers = 0) {
  const GateAngles target = canonicalize(target_in).angles;
  DesignSolution out;
  const double gap = std::abs(b.b01 - b.b02);
  const double sum = b.b01 + b.b02;
  if (gap == 0.0) {
    out.reason = "b01 = b02: the interaction block is proportional to identity";
    out.params = make_params(Protocol::II, b, {0.0, 0.0, std::nullopt}, 0.0);
    detail::finish(out, target, kProtocol2Tolerance);
    out.feasible = false;
    return out;
  }
  const double period = kPi / (0.5 * gap);
  out.period = period;

  if (target.theta <= kAngleTolerance) {
    double T = 0.0;
    if (sum != 0.0) {
      const double per = kTwoPi / std::abs(sum);
      T = std::fmod(-target.alpha / sum, per);
      if (T < 0.0) T += per;
      out.period = per;
    }
    out.params = make_params(Protocol::II, b, {0.0, 0.0, std::nullopt}, T);
    detail::finish(out, target, kProtocol2Tolerance);
    out.non_entangling = true;
    if (!out.feasible) out.reason = "alpha unreachable with b01 + b02 = 0";
    return out;
  }

  constexpr int kGrid = 64;
  const double half_pi = 0.5 * kPi;
  std::vector<double> grid(kGrid * kGrid);
  const auto beta_at = [&](int i) { return half_pi * (i + 0.5) / kGrid; };
  const auto t_at = [&](int j) { return period * (j + 0.5) / kGrid; };
  parallel_for(
      grid.size(),
      [&](std::size_t n) {
        const int i = static_cast<int>(n) / kGrid, j = static_cast<int>(n) % kGrid;
        grid[n] = detail::p2_residual(b, target, beta_at(i), t_at(j)).norm();
      },
      workers);

  // Local minima of the grid; T wraps, beta1 does not.
  std::vector<std::pair<double, double>> seeds;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double g = grid[i * kGrid + j];
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di;
          if (ii < 0 || ii >= kGrid) continue;
          const int jj = (j + dj + kGrid) % kGrid;
          if (grid[ii * kGrid + jj] < g) {
            minimum = false;
            break;
          }
        }
      }
      if (minimum) seeds.emplace_back(beta_at(i), t_at(j));
    }
  }

  const auto refine = [&](double beta1, double T) {
    const double h = 1e-7;
    auto r = detail::p2_residual(b, target, beta1, T);
    for (int it = 0; it < 60 && r.norm() > 1e-14; ++it) {
      const auto rb = detail::p2_residual(b, target, beta1 + h, T);
      const auto rbm = detail::p2_residual(b, target, beta1 - h, T);
      const auto rt = detail::p2_residual(b, target, beta1, T + h * period);
      const auto rtm = detail::p2_residual(b, target, beta1, T - h * period);
      Eigen::Matrix2d jac;
      jac << (rb.d_theta - rbm.d_theta) / (2 * h),
          (rt.d_theta - rtm.d_theta) / (2 * h * period),
          wrap_angle(rb.d_phi - rbm.d_phi) / (2 * h),
          wrap_angle(rt.d_phi - rtm.d_phi) / (2 * h * period);
      const Eigen::Vector2d rhs(r.d_theta, r.d_phi);
      const Eigen::Vector2d step = jac.colPivHouseholderQr().solve(rhs);
      if (!step.allFinite()) break;
      double lambda = 1.0;
      bool improved = false;
      for (int k = 0; k < 30; ++k, lambda *= 0.5) {
        const double nb = std::clamp(beta1 - lambda * step(0), 1e-9, half_pi - 1e-9);
        double nt = std::fmod(T - lambda * step(1), period);
        if (nt <= 0.0) nt += period;
        const auto nr = detail::p2_residual(b, target, nb, nt);
        if (nr.norm() < r.norm()) {
          beta1 = nb;
          T = nt;
          r = nr;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    return Basin{beta1, T, r.norm()};
  };

  std::vector<Basin> refined(seeds.size());
  parallel_for(
      seeds.size(),
      [&](std::size_t n) { refined[n] = refine(seeds[n].first, seeds[n].second); },
      workers);

  for (const auto& cand : refined) {
    if (!(cand.residual < kBasinThreshold)) continue;
    const bool duplicate = std::any_of(out.basins.begin(), out.basins.end(), [&](const Basin& x) {
      const double dt = std::abs(x.T - cand.T);
      return std::abs(x.beta1 - cand.beta1) < 1e-6 &&
             std::min(dt, period - dt) < 1e-6 * period;
    });
    if (!duplicate) out.basins.push_back(cand);
  }
  std::sort(out.basins.begin(), out.basins.end(), [](const Basin& x, const Basin& y) {
    return x.beta1 != y.beta1 ? x.beta1 < y.beta1 : x.T < y.T;
  });
  if (out.basins.empty()) {
    out.reason = "no (beta1, T) basin reaches theta and phi within 1e-3";
    out.params = make_params(Protocol::II, b, {0.0, 0.25 * kPi, std::nullopt}, 0.0);
    detail::finish(out, target, kProtocol2Tolerance);
    out.feasible = false;
    return out;
  }

  // Smallest T over basins and period shifts that also matches alpha.
  std::optional<ProtocolParams> best;
  double best_err = std::numeric_limits<double>::infinity();
  ProtocolParams closest;
  for (const auto& basin : out.basins) {
    if (basin.residual >= kProtocol2Tolerance) continue;
    for (int n = 0; n <= max_periods; ++n) {
      const double T = basin.T + n * period;
      if (best && T >= best->T) break;
      const auto p = make_params(Protocol::II, b, {0.0, basin.beta1, std::nullopt}, T);
      const double err = angle_distance(closed_form_angles(p).angles, target);
      if (err < best_err) {
        best_err = err;
        closest = p;
      }
      if (err < kProtocol2Tolerance) {
        best = p;
        break;
      }
    }
  }
  if (best) {
    out.params = *best;
  } else if (std::isfinite(best_err)) {
    out.params = closest;
  } else {
    out.params = make_params(Protocol::II, b,
                             {0.0, out.basins.front().beta1, std::nullopt},
                             out.basins.front().T);
  }
  detail::finish(out, target, kProtocol2Tolerance);
  if (!out.feasible)
    out.reason = std::isfinite(best_err)
                     ? "theta and phi are reachable but alpha = -T (b01 + b02) "
                       "is not within the scanned periods"
                     : "no basin converged below 1e-8";
  return out;
}

struct Convergent {
  long long p = 0;
  long long q = 1;
  double error = 0.0;  // |x - p / q|
};

struct RationalityReport {
  double value_over_pi = 0.0;
  std::vector<Convergent> convergents;
  bool flagged_rational = false;
};

/// Continued-fraction convergents of x up to denominators of 1e6; x is
/// flagged when a convergent with q <= 100 lies within 1e-9.
inline RationalityReport rationality_of(double x) {
  RationalityReport out;
  out.value_over_pi = x;
  long double r = x;
  long long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int it = 0; it < 64; ++it) {
    const long double a = std::floor(r);
    if (std::abs(a) > 1e12L) break;
    const long long ai = static_cast<long long>(a);
    const long long h = ai * h1 + h2;
    const long long k = ai * k1 + k2;
    if (k > 1000000) break;
    const double err = std::abs(x - static_cast<double>(h) / static_cast<double>(k));
    out.convergents.push_back({h, k, err});
    if (k <= 100 && err <= 1e-9) out.flagged_rational = true;
    const long double frac = r - a;
    if (err == 0.0 || frac <= 1e-18L) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    r = 1.0L / frac;
  }
  return out;
}

/// Heuristic check of angle / pi.
inline RationalityReport rationality_diagnostic(double angle) {
  return rationality_of(angle / kPi);
}

struct UniversalityReport {
  RationalityReport alpha, theta, phi;
  std::optional<RationalityReport> alpha_over_theta, alpha_over_phi, theta_over_phi;
  // True when no angle and no pairwise ratio looks rational. A heuristic,
  // not a proof.
  bool plausibly_universal = false;
};

inline UniversalityReport universality_diagnostic(const GateAngles& g) {
  UniversalityReport out;
  out.alpha = rationality_diagnostic(g.alpha);
  out.theta = rationality_diagnostic(g.theta);
  out.phi = rationality_diagnostic(g.phi);
  const auto ratio = [](double x, double y) -> std::optional<RationalityReport> {
    if (std::abs(y) <= kAngleTolerance) return std::nullopt;
    return rationality_of(x / y);
  };
  out.alpha_over_theta = ratio(g.alpha, g.theta);
  out.alpha_over_phi = ratio(g.alpha, g.phi);
  out.theta_over_phi = ratio(g.theta, g.phi);
  bool any = out.alpha.flagged_rational || out.theta.flagged_rational ||
             out.phi.flagged_rational;
  for (const auto* r : {&out.alpha_over_theta, &out.alpha_over_phi, &out.theta_over_phi})
    if (!r->has_value() || (*r)->flagged_rational) any = true;
  out.plausibly_universal = !any;
  return out;
}

}  // namespace barenco
