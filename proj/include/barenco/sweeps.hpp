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

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "barenco/config.hpp"
#include "barenco/errors.hpp"
#include "barenco/parallel.hpp"
#include "barenco/protocols.hpp"

namespace barenco {

enum class Figure { fig3, fig5, fig6 };

inline const char* to_string(Figure f) {
  switch (f) {
    case Figure::fig3: return "fig3";
    case Figure::fig5: return "fig5";
    case Figure::fig6: return "fig6";
  }
  return "?";
}

struct InteractionRatio {
  double v1 = 0.0, v2 = 0.0, ve = 0.0;  // in units of `unit`
};

struct SweepSpec {
  Figure figure = Figure::fig3;
  // fig3: b01/b02 ratios and a theta grid on [0, theta_max].
  std::vector<double> ratios{3.0, 2.0, 1.5};
  double theta_max = 0.5 * kPi;
  int theta_points = 101;
  // fig5: (V1:V2:Ve) sets; one unit is `unit` rad/us.
  std::vector<InteractionRatio> ratio_sets{{3, 1, 2}, {1, 3, 2}, {2, 1, 3},
                                           {1, 2, 3}, {3, 2, 1}, {2, 3, 1}};
  double unit = from_2pi_khz(100.0);
  // fig5 and fig6: wait grid.
  double t_min = 0.0;
  double t_max = 2.0;
  double t_step = 0.01;
  // fig6: error-budget inputs.
  double omega = from_2pi_mhz(30.0);
  std::vector<double> beta1{0.25 * kPi, 0.375 * kPi};  // Protocol I, II
  Preset preset = appendix_a_preset();
  unsigned workers = 0;
};

inline void validate(const SweepSpec& s) {
  switch (s.figure) {
    case Figure::fig3:
      require(!s.ratios.empty(), "sweep: ratio grid is empty");
      require(s.theta_points >= 2 && s.theta_max > 0.0, "sweep: theta grid is empty");
      for (double r : s.ratios) require(r != 1.0, "sweep: ratio 1 has no Protocol I line");
      break;
    case Figure::fig5:
      require(!s.ratio_sets.empty(), "sweep: ratio-set grid is empty");
      require(s.unit > 0.0, "sweep: unit must be positive");
      break;
    case Figure::fig6:
      require(s.beta1.size() == 2, "sweep: fig6 needs one beta1 per protocol");
      require(s.omega > 0.0, "sweep: omega must be positive");
      break;
  }
  if (s.figure != Figure::fig3) {
    require(s.t_step > 0.0, "sweep: T step must be positive");
    require(s.t_min >= 0.0 && s.t_max >= s.t_min, "sweep: T range is empty");
  }
}

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::vector<double> wait_grid(const SweepSpec& s) {
  const auto n = static_cast<std::size_t>((s.t_max - s.t_min) / s.t_step + 1e-9) + 1;
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = s.t_min + s.t_step * static_cast<double>(k);
  return t;
}

inline std::string ratio_label(const InteractionRatio& r) {
  return fmt(r.v1) + ":" + fmt(r.v2) + ":" + fmt(r.ve);
}

}  // namespace detail

inline const char* sweep_header(Figure f) {
  switch (f) {
    case Figure::fig3: return "ratio_b01_over_b02,theta_rad,alpha_rad";
    case Figure::fig5: return "v1_v2_ve,T_us,alpha_rad,theta_rad,phi_rad";
    case Figure::fig6:
      return "protocol,T_us,alpha_rad,theta_rad,phi_rad,e_decay,e_blockade,"
             "e_leakage,total";
  }
  return "";
}

/// Rows (without the header) in input order.
inline std::vector<std::string> sweep_rows(const SweepSpec& s) {
  using detail::fmt;
  validate(s);
  std::vector<std::string> rows;
  if (s.figure == Figure::fig3) {
    // Raw Protocol I line alpha = pi - slope theta, b02 = 1.
    for (double ratio : s.ratios) {
      const BlockadeSpec b{ratio, 1.0, std::nullopt};
      for (int k = 0; k < s.theta_points; ++k) {
        const double theta = s.theta_max * k / (s.theta_points - 1);
        const double T = 2.0 * theta / std::abs(b.b01 - b.b02);
        const auto a = protocol1_angles(b, T, 0.0);
        rows.push_back(fmt(ratio) + "," + fmt(std::abs(a.raw.theta)) + "," +
                       fmt(a.raw.alpha));
      }
    }
    return rows;
  }
  const auto waits = detail::wait_grid(s);
  if (s.figure == Figure::fig5) {
    rows.resize(s.ratio_sets.size() * waits.size());
    parallel_for(
        rows.size(),
        [&](std::size_t n) {
          const auto& r = s.ratio_sets[n / waits.size()];
          const double T = waits[n % waits.size()];
          const NoncollinearV v{r.v1 * s.unit, r.v2 * s.unit, r.ve * s.unit, 0.0};
          const auto a = protocol2_angles(v, T);
          rows[n] = detail::ratio_label(r) + "," + fmt(T) + "," + fmt(a.raw.alpha) +
                    "," + fmt(a.raw.theta) + "," + fmt(a.raw.phi);
        },
        s.workers);
    return rows;
  }
  const BlockadeSpec b = blockade_from_c6(s.preset.interaction.vdw);
  rows.resize(2 * waits.size());
  parallel_for(
      rows.size(),
      [&](std::size_t n) {
        const Protocol protocol = n < waits.size() ? Protocol::I : Protocol::II;
        const double beta1 = s.beta1[n < waits.size() ? 0 : 1];
        const double T = waits[n % waits.size()];
        const auto p = make_params(protocol, b, {0.0, beta1, std::nullopt}, T);
        const auto a = closed_form_angles(p).angles;
        BudgetInputs in;
        in.protocol = protocol;
        in.v = p.interaction;
        in.beta1 = beta1;
        in.T = T;
        in.omega = s.omega;
        in.tau1 = s.preset.tau1;
        in.tau2 = s.preset.tau2;
        in.delta1 = s.preset.delta1;
        in.delta2 = s.preset.delta2;
        const auto e = total_budget(in);
        rows[n] = std::string(to_string(protocol)) + "," + fmt(T) + "," +
                  fmt(a.alpha) + "," + fmt(a.theta) + "," + fmt(a.phi) + "," +
                  fmt(e.e_decay) + "," + fmt(e.e_blockade) + "," +
                  fmt(e.e_leakage) + "," + fmt(e.total);
      },
      s.workers);
  return rows;
}

inline void write_sweep(const SweepSpec& s, std::ostream& out) {
  const auto rows = sweep_rows(s);
  out << sweep_header(s.figure) << '\n';
  for (const auto& r : rows) out << r << '\n';
}

}  // namespace barenco
