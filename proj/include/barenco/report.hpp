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

#include <string>

#include "json.hpp"

#include "barenco/design.hpp"
#include "barenco/dynamics.hpp"
#include "barenco/errors.hpp"
#include "barenco/protocols.hpp"

namespace barenco::report {

using nlohmann::ordered_json;

inline ordered_json angles(const GateAngles& g) {
  return {{"alpha_rad", g.alpha}, {"theta_rad", g.theta}, {"phi_rad", g.phi}};
}

inline ordered_json angles(const CanonicalAngles& c) {
  auto j = angles(c.angles);
  j["phi_undefined"] = c.phi_undefined;
  return j;
}

/// Rows of [re, im] pairs.
inline ordered_json matrix(const CMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

inline ordered_json blockade(const BlockadeSpec& b) {
  ordered_json j{{"b01_2pi_mhz", to_2pi_mhz(b.b01)}, {"b02_2pi_mhz", to_2pi_mhz(b.b02)}};
  if (b.b03) j["b03_2pi_mhz"] = to_2pi_mhz(*b.b03);
  return j;
}

inline ordered_json interaction(const NoncollinearV& v) {
  return {{"v1_2pi_khz", to_2pi_khz(v.v1)},
          {"v2_2pi_khz", to_2pi_khz(v.v2)},
          {"ve_2pi_khz", to_2pi_khz(v.ve)},
          {"beta0_rad", v.beta0}};
}

inline ordered_json params(const ProtocolParams& p) {
  return {{"protocol", to_string(p.protocol)},
          {"T_us", p.T},
          {"beta1_rad", p.beta1},
          {"interaction", interaction(p.interaction)}};
}

inline ordered_json rationality(const RationalityReport& r) {
  ordered_json conv = ordered_json::array();
  for (const auto& c : r.convergents) conv.push_back({{"p", c.p}, {"q", c.q}, {"error", c.error}});
  return {{"value_over_pi", r.value_over_pi},
          {"flagged_rational", r.flagged_rational},
          {"convergents", conv}};
}

inline ordered_json universality(const UniversalityReport& u) {
  const auto opt = [](const std::optional<RationalityReport>& r) -> ordered_json {
    return r ? rationality(*r) : ordered_json(nullptr);
  };
  // Ratio reports carry x / y rather than x / pi in value_over_pi.
  return {{"alpha", rationality(u.alpha)},
          {"theta", rationality(u.theta)},
          {"phi", rationality(u.phi)},
          {"alpha_over_theta", opt(u.alpha_over_theta)},
          {"alpha_over_phi", opt(u.alpha_over_phi)},
          {"theta_over_phi", opt(u.theta_over_phi)},
          {"plausibly_universal", u.plausibly_universal}};
}

/// Closed-form gate plus the residual against the composed pulse product.
inline ordered_json gate(const ProtocolParams& p) {
  const auto closed = closed_form_angles(p);
  const CMatrix ideal = barenco_matrix(closed.angles);
  const CMatrix composed = compose_ideal(p);
  ordered_json j;
  j["params"] = params(p);
  j["angles"] = angles(closed);
  j["matrix"] = matrix(ideal);
  j["oracle_residual"] = phase_aligned_deviation(composed, ideal);
  j["alpha_offset_rad"] = 0.0;
  j["universality"] = universality(universality_diagnostic(closed.angles));
  return j;
}

inline ordered_json budget(const ErrorBudget& b) {
  return {{"e_decay", b.e_decay},
          {"e_blockade", b.e_blockade},
          {"e_leakage", b.e_leakage},
          {"total", b.total},
          {"validity_warning", b.validity_warning}};
}

inline ordered_json force(const ForceDrift& f) {
  return {{"force_N", f.force_N},
          {"delta_v_m_per_s", f.delta_v_m_per_s},
          {"delta_x_um", f.delta_x_um}};
}

inline ordered_json trap(const TrapSpec& t, const TrapSigmas& s) {
  return {{"waist_um", t.waist},
          {"wavelength_um", t.wavelength},
          {"depth_mK", t.depth_mK},
          {"temperature_uK", t.temperature_uK},
          {"sigma_x_um", s.sigma_x},
          {"sigma_y_um", s.sigma_y},
          {"sigma_z_um", s.sigma_z},
          {"xi", s.xi},
          {"omega_radial_rad_per_s", s.omega_radial},
          {"omega_axial_rad_per_s", s.omega_axial},
          {"thermal_regime", s.thermal_regime}};
}

inline ordered_json monte_carlo(const MCResult& r) {
  return {{"mean_error", r.mean_error},
          {"std_error_of_mean", r.std_error_of_mean},
          {"samples", r.samples},
          {"invalid_samples", r.invalid_samples},
          {"seed", r.seed}};
}

inline ordered_json design(const DesignSolution& s) {
  ordered_json basins = ordered_json::array();
  for (const auto& b : s.basins)
    basins.push_back({{"beta1_rad", b.beta1}, {"T_us", b.T}, {"residual", b.residual}});
  ordered_json j;
  j["feasible"] = s.feasible;
  j["params"] = params(s.params);
  j["achieved"] = angles(s.achieved);
  j["residual"] = s.residual;
  j["non_entangling"] = s.non_entangling;
  j["period_us"] = s.period ? ordered_json(*s.period) : ordered_json(nullptr);
  if (s.b02) j["b02_2pi_mhz"] = to_2pi_mhz(*s.b02);
  j["basins"] = basins;
  if (!s.reason.empty()) j["reason"] = s.reason;
  return j;
}

inline ordered_json simulation(const ProtocolParams& p, const BlockadeSpec& b,
                               const SimConfig& cfg, const SimResult& r) {
  ordered_json segs = ordered_json::array();
  for (const auto& s : r.segments)
    segs.push_back({{"kind", to_string(s.kind)}, {"duration_us", s.duration}});
  ordered_json config{{"omega_2pi_mhz", to_2pi_mhz(cfg.omega)},
                      {"include_interaction_during_pulses",
                       cfg.include_interaction_during_pulses},
                      {"merge_pulses", cfg.merge_pulses},
                      {"blockade", blockade(b)},
                      {"params", params(p)}};
  if (cfg.decay)
    config["decay"] = {{"tau1_us", cfg.decay->tau1},
                       {"tau2_us", cfg.decay->tau2},
                       {"tau_r1_us", cfg.decay->tau_r1}};
  ordered_json j;
  j["config"] = config;
  j["segments"] = segs;
  j["u_qubit"] = matrix(r.u_qubit);
  j["fidelity"] = r.fidelity;
  j["infidelity"] = 1.0 - r.fidelity;
  j["ideal_angles"] = angles(r.ideal_angles);
  j["extracted_angles"] = angles(r.angles.angles);
  j["extraction_residual"] = r.angles.residual;
  j["flags"] = {{"mean_population", r.mean_population},
                {"min_population", r.min_population},
                {"extraction_residual_above_1e-6", r.angles.residual > 1e-6}};
  return j;
}

}  // namespace barenco::report
