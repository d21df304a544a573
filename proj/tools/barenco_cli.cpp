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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "barenco.hpp"

namespace {

using namespace barenco;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interaction source shared by most subcommands.
struct Source {
  std::string preset = "appendixA";
  std::string config;
  std::optional<double> b01_mhz, b02_mhz;
  std::optional<std::string> beta0, beta1;

  void add(CLI::App* app) {
    app->add_option("--preset", preset, "Bundled parameter set")
        ->check(CLI::IsMember({"appendixA"}))
        ->capture_default_str();
    app->add_option("--config", config, "Interaction file (key = value)");
    app->add_option("--b01-2pi-mhz", b01_mhz, "Blockade shift b01 in units of 2pi MHz");
    app->add_option("--b02-2pi-mhz", b02_mhz, "Blockade shift b02 in units of 2pi MHz");
    app->add_option("--beta0", beta0, "Rotated-basis phase beta0, rad (suffix 'pi' allowed)");
    app->add_option("--beta1", beta1, "Mixing angle beta1, rad (suffix 'pi' allowed)");
  }

  Preset base() const {
    Preset p = preset_by_name(preset);
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw IoError("cannot read config file: " + config);
      p.interaction = parse_interaction_config(in);
    }
    return p;
  }

  BlockadeSpec blockade() const {
    if (b01_mhz || b02_mhz) {
      require(b01_mhz.has_value() && b02_mhz.has_value(),
              "--b01-2pi-mhz and --b02-2pi-mhz must be given together");
      return {from_2pi_mhz(*b01_mhz), from_2pi_mhz(*b02_mhz), std::nullopt};
    }
    const Preset p = base();
    return effective_blockade(blockade_from_c6(p.interaction.vdw), p.interaction.basis);
  }

  RotatedBasis basis() const {
    RotatedBasis r = base().interaction.basis;
    r.beta2.reset();  // already folded into blockade()
    if (beta0) r.beta0 = parse_angle(*beta0);
    if (beta1) r.beta1 = parse_angle(*beta1);
    return r;
  }
};

Protocol protocol_from(int n) { return n == 1 ? Protocol::I : Protocol::II; }

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barenco two-qubit gates from a non-collinear Rydberg interaction"};
  app.require_subcommand(1);

  // gate
  auto* gate = app.add_subcommand("gate", "Closed-form gate angles, matrix and oracle residual");
  Source gate_src;
  gate_src.add(gate);
  int gate_protocol = 1;
  double gate_T = 0.0;
  std::string gate_special;
  gate->add_option("--protocol", gate_protocol, "Protocol number")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  gate->add_option("--T", gate_T, "Wait duration per wait period, us")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gate->add_option("--special", gate_special, "Named gate; overrides protocol, T and basis")
      ->check(CLI::IsMember({"cnot", "cy", "b1"}));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Pulse-level simulation at finite Rabi frequency");
  Source sim_src;
  sim_src.add(sim);
  int sim_protocol = 1;
  double sim_T = 0.0, sim_omega = 0.0;
  bool sim_no_interaction = false, sim_merge = false, sim_decay = false;
  std::optional<double> sim_tau1, sim_tau2, sim_tau_r1;
  sim->add_option("--protocol", sim_protocol, "Protocol number")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  sim->add_option("--T", sim_T, "Wait duration per wait period, us")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sim->add_option("--omega-2pi-mhz", sim_omega, "Rabi frequency in units of 2pi MHz")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_flag("--no-interaction-during-pulses", sim_no_interaction,
                "Switch the blockade off while pulses are applied");
  sim->add_flag("--merge-pulses", sim_merge, "Protocol II: apply pulses 1+2 and 5+6 together");
  sim->add_flag("--decay", sim_decay, "Add Rydberg decay with the preset lifetimes");
  sim->add_option("--tau1-us", sim_tau1, "Lifetime of R1, us (implies --decay)");
  sim->add_option("--tau2-us", sim_tau2, "Lifetime of R2, us (implies --decay)");
  sim->add_option("--tau-r1-us", sim_tau_r1, "Lifetime of the control Rydberg level, us");

  // errors
  auto* errors = app.add_subcommand("errors", "Error estimates");
  errors->require_subcommand(1);

  auto* budget = errors->add_subcommand("budget", "Decay, blockade and leakage estimates");
  Source budget_src;
  budget_src.add(budget);
  int budget_protocol = 1;
  double budget_T = 0.5, budget_omega = 30.0;
  std::optional<double> budget_tau1, budget_tau2, budget_d1, budget_d2;
  budget->add_option("--protocol", budget_protocol, "Protocol number")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  budget->add_option("--T", budget_T, "Wait duration, us")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  budget->add_option("--omega-2pi-mhz", budget_omega, "Rabi frequency in units of 2pi MHz")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  budget->add_option("--tau1-us", budget_tau1, "Lifetime of R1, us (default: preset)");
  budget->add_option("--tau2-us", budget_tau2, "Lifetime of R2, us (default: preset)");
  budget->add_option("--delta1-2pi-ghz", budget_d1, "Leakage detuning 1 in units of 2pi GHz");
  budget->add_option("--delta2-2pi-ghz", budget_d2, "Leakage detuning 2 in units of 2pi GHz");

  auto* force = errors->add_subcommand("force", "Interatomic force and drift of a Rydberg pair");
  Source force_src;
  force_src.add(force);
  double force_t = 1.0;
  std::optional<double> force_l;
  force->add_option("--t-ry", force_t, "Time spent in the Rydberg pair state, us")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  force->add_option("--l-um", force_l, "Separation, um (default: preset)");

  auto* trap = errors->add_subcommand("trap", "Thermal position spread in the tweezer");
  auto* mc = errors->add_subcommand("mc", "Monte Carlo infidelity from position fluctuations");
  Source mc_src;
  mc_src.add(mc);
  std::optional<double> ta_uk, waist_um, wavelength_um, depth_mk;
  for (auto* sub : {trap, mc}) {
    sub->add_option("--Ta-uK", ta_uk, "Atom temperature, uK (default: preset)");
    sub->add_option("--waist-um", waist_um, "Tweezer waist, um (default: preset)");
    sub->add_option("--wavelength-um", wavelength_um, "Trap wavelength, um (default: preset)");
    sub->add_option("--depth-mK", depth_mk, "Trap depth, mK (default: preset)");
  }
  int mc_protocol = 1;
  double mc_T = 0.5;
  std::size_t mc_samples = 100000;
  std::uint64_t mc_seed = 1;
  mc->add_option("--protocol", mc_protocol, "Protocol number")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  mc->add_option("--T", mc_T, "Wait duration, us")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  mc->add_option("--samples", mc_samples, "Number of samples (>= 1000)")->capture_default_str();
  mc->add_option("--seed", mc_seed, "Random seed")->capture_default_str();

  // design
  auto* design = app.add_subcommand("design", "Protocol parameters for target gate angles");
  Source design_src;
  design_src.add(design);
  int design_protocol = 1;
  std::string alpha_s, theta_s, phi_s = "0";
  bool free_ratio = false;
  design->add_option("--protocol", design_protocol, "Protocol number")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  design->add_option("--alpha", alpha_s, "Target alpha, rad (suffix 'pi' allowed)")->required();
  design->add_option("--theta", theta_s, "Target theta, rad (suffix 'pi' allowed)")->required();
  design->add_option("--phi", phi_s, "Target phi, rad (suffix 'pi' allowed)")
      ->capture_default_str();
  design->add_flag("--free-ratio", free_ratio,
                   "Protocol I: keep b01 and solve for the b02 that reaches the target");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Figure data as CSV");
  sweep->require_subcommand(1);
  SweepSpec spec;
  std::string out_path = "-";
  double sweep_omega = 30.0;
  std::optional<double> sweep_tau;
  auto* fig3 = sweep->add_subcommand("fig3", "Protocol I: alpha against theta per b01/b02");
  auto* fig5 = sweep->add_subcommand("fig5", "Protocol II: angles against T per (V1:V2:Ve)");
  auto* fig6 = sweep->add_subcommand("fig6", "Angles and error budget against T, both protocols");
  for (auto* sub : {fig3, fig5, fig6})
    sub->add_option("--out", out_path, "Output CSV path, '-' for stdout")->capture_default_str();
  fig3->add_option("--ratios", spec.ratios, "b01/b02 values")->capture_default_str();
  fig3->add_option("--theta-points", spec.theta_points, "Points per line")->capture_default_str();
  for (auto* sub : {fig5, fig6}) {
    sub->add_option("--t-min", spec.t_min, "First wait, us")->capture_default_str();
    sub->add_option("--t-max", spec.t_max, "Last wait, us")->capture_default_str();
    sub->add_option("--t-step", spec.t_step, "Wait step, us")->capture_default_str();
  }
  fig6->add_option("--omega-2pi-mhz", sweep_omega, "Rabi frequency in units of 2pi MHz")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fig6->add_option("--tau-us", sweep_tau, "Lifetime of R1 and R2, us (default: preset)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gate) {
      const BlockadeSpec b = gate_src.blockade();
      ProtocolParams p;
      if (!gate_special.empty()) {
        const SpecialGate kind = gate_special == "cnot" ? SpecialGate::cnot
                                 : gate_special == "cy" ? SpecialGate::cy
                                                        : SpecialGate::b1;
        p = gate_src.beta1 && kind == SpecialGate::b1
                ? special_gate(kind, b, parse_angle(*gate_src.beta1))
                : special_gate(kind, b);
      } else {
        p = make_params(protocol_from(gate_protocol), b, gate_src.basis(), gate_T);
      }
      auto j = report::gate(p);
      j["blockade"] = report::blockade(b);
      if (!gate_special.empty()) j["special"] = gate_special;
      print(j);
    } else if (*sim) {
      const Preset preset = sim_src.base();
      const BlockadeSpec b = sim_src.blockade();
      const auto p = make_params(protocol_from(sim_protocol), b, sim_src.basis(), sim_T);
      SimConfig cfg;
      cfg.omega = from_2pi_mhz(sim_omega);
      cfg.include_interaction_during_pulses = !sim_no_interaction;
      cfg.merge_pulses = sim_merge;
      if (sim_decay || sim_tau1 || sim_tau2 || sim_tau_r1) {
        DecaySpec d{preset.tau1, preset.tau2, preset.tau_r1};
        if (sim_tau1) d.tau1 = *sim_tau1;
        if (sim_tau2) d.tau2 = *sim_tau2;
        if (sim_tau_r1) d.tau_r1 = *sim_tau_r1;
        cfg.decay = d;
      }
      print(report::simulation(p, b, cfg, simulate(p, b, cfg)));
    } else if (*budget) {
      const Preset preset = budget_src.base();
      const auto protocol = protocol_from(budget_protocol);
      RotatedBasis basis = budget_src.basis();
      if (protocol == Protocol::II && !budget_src.beta1) basis.beta1 = 0.375 * kPi;
      const auto p = make_params(protocol, budget_src.blockade(), basis, budget_T);
      BudgetInputs in;
      in.protocol = protocol;
      in.v = p.interaction;
      in.beta1 = basis.beta1;
      in.T = budget_T;
      in.omega = from_2pi_mhz(budget_omega);
      in.tau1 = budget_tau1.value_or(preset.tau1);
      in.tau2 = budget_tau2.value_or(preset.tau2);
      in.delta1 = budget_d1 ? from_2pi_ghz(*budget_d1) : preset.delta1;
      in.delta2 = budget_d2 ? from_2pi_ghz(*budget_d2) : preset.delta2;
      ordered_json j;
      j["params"] = report::params(p);
      j["omega_2pi_mhz"] = budget_omega;
      j["tau1_us"] = in.tau1;
      j["tau2_us"] = in.tau2;
      j["lifetimes_assumed"] = preset.lifetimes_assumed && !budget_tau1 && !budget_tau2;
      j["budget"] = report::budget(total_budget(in));
      print(j);
    } else if (*force) {
      const Preset preset = force_src.base();
      const double l = force_l.value_or(preset.interaction.vdw.l);
      ordered_json j;
      j["c6_01_2pi_THz_um6"] = c6_to_2pi_thz_um6(preset.interaction.vdw.c6_01);
      j["l_um"] = l;
      j["t_ry_us"] = force_t;
      j["drift"] = report::force(force_drift(preset.interaction.vdw.c6_01, l, force_t));
      print(j);
    } else if (*trap || *mc) {
      const Preset preset = (*mc ? mc_src : Source{}).base();
      TrapSpec t = preset.trap;
      if (ta_uk) t.temperature_uK = *ta_uk;
      if (waist_um) t.waist = *waist_um;
      if (wavelength_um) t.wavelength = *wavelength_um;
      if (depth_mk) t.depth_mK = *depth_mk;
      ordered_json j;
      j["trap"] = report::trap(t, trap_sigmas(t));
      if (*mc) {
        PositionTemplate tpl;
        tpl.protocol = protocol_from(mc_protocol);
        tpl.basis = mc_src.basis();
        if (tpl.protocol == Protocol::II && !mc_src.beta1) tpl.basis.beta1 = 0.375 * kPi;
        tpl.T = mc_T;
        j["protocol"] = to_string(tpl.protocol);
        j["T_us"] = mc_T;
        j["beta1_rad"] = tpl.basis.beta1;
        j["monte_carlo"] = report::monte_carlo(
            mc_position_error(tpl, preset.interaction.vdw, t, mc_samples, mc_seed));
      }
      print(j);
    } else if (*design) {
      const BlockadeSpec b = design_src.blockade();
      const GateAngles target{parse_angle(alpha_s), parse_angle(theta_s), parse_angle(phi_s)};
      DesignSolution s;
      if (design_protocol == 1) {
        s = free_ratio ? solve_protocol1_free_ratio(target, b.b01) : solve_protocol1(target, b);
      } else {
        require(!free_ratio, "--free-ratio applies to Protocol I only");
        s = solve_protocol2(target, b);
      }
      ordered_json j;
      j["target"] = report::angles(canonicalize(target));
      j["blockade"] = report::blockade(b);
      j["solution"] = report::design(s);
      j["universality"] = report::universality(universality_diagnostic(canonicalize(target).angles));
      print(j);
      if (!s.feasible) return kExitInfeasible;
    } else if (*sweep) {
      spec.figure = *fig3 ? Figure::fig3 : *fig5 ? Figure::fig5 : Figure::fig6;
      spec.omega = from_2pi_mhz(sweep_omega);
      if (sweep_tau) spec.preset.tau1 = spec.preset.tau2 = *sweep_tau;
      const auto rows = sweep_rows(spec);
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (out_path != "-") {
        file.open(out_path);
        if (!file) throw IoError("cannot write " + out_path);
        out = &file;
      }
      *out << sweep_header(spec.figure) << '\n';
      for (const auto& r : rows) *out << r << '\n';
      out->flush();
      if (!*out) throw IoError("write failed: " + out_path);
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ContractViolation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
