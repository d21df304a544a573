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

// Bundled presets and the flat key=value interaction config format.

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "barenco/atoms.hpp"
#include "barenco/errors.hpp"
#include "barenco/units.hpp"

namespace barenco {

/// Parses "1.2", "0.25pi", "-pi", "pi" into radians (or a plain number).
inline double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "empty numeric value");
  double factor = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = kPi;
    s.erase(s.size() - 2);
    if (s.empty() || s == "+") s = "1";
    if (s == "-") s = "-1";
    if (s.back() == '*') s.pop_back();
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ContractViolation("not a number: '" + text + "'");
  }
  require(used == s.size(), "not a number: '" + text + "'");
  return v * factor;
}

struct InteractionConfig {
  VdwSpec vdw;
  RotatedBasis basis;
};

/// Reads `key = value` lines ('#' starts a comment). Keys:
/// c6_01_2pi_THz_um6, c6_02_2pi_THz_um6, c6_03_2pi_THz_um6 (optional),
/// l_um, beta0_rad, beta1_rad, beta2_rad (optional). Angle values accept a
/// trailing "pi".
inline InteractionConfig parse_interaction_config(std::istream& in) {
  std::map<std::string, double> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos,
            "config line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    kv[key] = parse_angle(trim(line.substr(eq + 1)));
  }
  static const char* known[] = {"c6_01_2pi_THz_um6", "c6_02_2pi_THz_um6",
                                "c6_03_2pi_THz_um6", "l_um",
                                "beta0_rad",         "beta1_rad",
                                "beta2_rad"};
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    require(ok, "unknown config key '" + k + "'");
  }
  for (const char* must : {"c6_01_2pi_THz_um6", "c6_02_2pi_THz_um6", "l_um"})
    require(kv.count(must) == 1, std::string("missing config key '") + must + "'");

  InteractionConfig cfg;
  cfg.vdw.c6_01 = c6_from_2pi_thz_um6(kv["c6_01_2pi_THz_um6"]);
  cfg.vdw.c6_02 = c6_from_2pi_thz_um6(kv["c6_02_2pi_THz_um6"]);
  if (kv.count("c6_03_2pi_THz_um6"))
    cfg.vdw.c6_03 = c6_from_2pi_thz_um6(kv["c6_03_2pi_THz_um6"]);
  cfg.vdw.l = kv["l_um"];
  require(cfg.vdw.l > 0.0, "l_um must be positive");
  cfg.basis.beta0 = kv.count("beta0_rad") ? kv["beta0_rad"] : 0.0;
  cfg.basis.beta1 = kv.count("beta1_rad") ? kv["beta1_rad"] : 0.25 * kPi;
  if (kv.count("beta2_rad")) cfg.basis.beta2 = kv["beta2_rad"];
  return cfg;
}

inline InteractionConfig load_interaction_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  return parse_interaction_config(in);
}

/// Everything needed to reproduce the bundled numerical example.
struct Preset {
  std::string name;
  InteractionConfig interaction;
  double delta1 = kDelta1Default;
  double delta2 = kDelta2Default;
  double tau1 = 0.0;    // us
  double tau2 = 0.0;    // us
  double tau_r1 = 0.0;  // us
  bool lifetimes_assumed = false;
  TrapSpec trap;
};

/// Rb-87 pair with (n1, n2) = (96, 102) s states at l = 20 um. The 540 us
/// lifetimes are an assumption; no source value exists for them.
inline Preset appendix_a_preset() {
  Preset p;
  p.name = "appendixA";
  p.interaction.vdw.c6_01 = c6_from_2pi_thz_um6(35.71);
  p.interaction.vdw.c6_02 = c6_from_2pi_thz_um6(-10.07);
  p.interaction.vdw.c6_exchange = c6_from_2pi_thz_um6(-5e-3);
  p.interaction.vdw.l = 20.0;
  p.interaction.basis = {0.0, 0.25 * kPi, std::nullopt};
  p.tau1 = p.tau2 = p.tau_r1 = 540.0;
  p.lifetimes_assumed = true;
  p.trap = {3.0, 1.1, 20.0, 100.0};
  return p;
}

inline Preset preset_by_name(const std::string& name) {
  if (name == "appendixA") return appendix_a_preset();
  throw ContractViolation("unknown preset '" + name + "'");
}

}  // namespace barenco
