#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqom/analog.hpp"
#include "cqom/errors.hpp"
#include "cqom/io.hpp"
#include "cqom/membrane.hpp"
#include "cqom/params.hpp"
#include "cqom/squid.hpp"
#include "cqom/sweep.hpp"
#include "cqom/validity.hpp"

using namespace cqom;
using nlohmann::json;

namespace {

struct Output {
  std::string out;
  std::string format = "csv";
};

void emit(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

json field_value(const std::string& s) {
  if (s.empty()) return nullptr;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end && *end == '\0') return v;
  return s;
}

json table_json(const io::CsvTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) {
    json row = json::object();
    for (std::size_t i = 0; i < r.size(); ++i) row[t.columns()[i]] = field_value(r[i]);
    rows.push_back(row);
  }
  return rows;
}

void emit_table(const Output& o, const io::CsvTable& t) {
  if (o.format == "json") {
    emit(o, table_json(t).dump(2) + "\n");
  } else {
    emit(o, t.str());
  }
}

void emit_report(const Output& o, const json& j) {
  if (o.format == "csv") {
    std::vector<std::string> cols;
    std::vector<std::string> row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      cols.push_back(it.key());
      if (it->is_number_integer()) {
        row.push_back(std::to_string(it->get<long long>()));
      } else if (it->is_number()) {
        row.push_back(io::format_number(it->get<double>()));
      } else if (it->is_string()) {
        row.push_back(it->get<std::string>());
      } else if (it->is_array()) {
        std::string s;
        for (const auto& w : *it) s += (s.empty() ? "" : "; ") + (w.is_string() ? w.get<std::string>() : w.dump());
        row.push_back(s);
      } else {
        row.push_back(it->dump());
      }
    }
    io::CsvTable t(cols);
    t.add_row(row);
    emit(o, t.str());
  } else {
    emit(o, j.dump(2) + "\n");
  }
}

void add_output_flags(CLI::App* cmd, Output& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--out", o.out, "write output to this path instead of stdout");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::string num(double x) { return io::format_number(x); }

// Pair spec with optional overrides: xi in units of d, omega_c in units of v0/d.
CoupledPairSpec modes_spec(const std::string& path, std::optional<double> xi, std::optional<double> wc) {
  CoupledPairSpec spec = io::pair_from_json(io::load_json(path));
  const double d = spec.total_length();
  if (xi) spec = spec.with_lengths(0.5 * d + *xi * d, 0.5 * d - *xi * d);
  if (wc) {
    if (!(*wc > 0.0)) throw UsageError("--omega-c-over must be positive");
    const double omega_c = *wc * spec.wave_speed() / d;
    spec = CoupledPairSpec(spec.left_len(), spec.right_len(), 1.0 / (spec.impedance() * omega_c),
                           spec.cap_per_len(), spec.ind_per_len());
  }
  return spec;
}

std::vector<double> grid(std::optional<double> value, double lo, double hi, int points, double fallback) {
  if (value) return {*value};
  if (points <= 0) return {fallback};
  if (points < 2) throw UsageError("--points must be at least 2");
  sweep::Axis a{"", lo, hi, points, sweep::Spacing::linear};
  return a.values();
}

json state_json(const validity::QuadratureStats& s) {
  return {{"mean", s.mean}, {"fluctuation", s.fluctuation}, {"max_over_cycle", s.max_over_cycle}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmission-line analogs of quadratic optomechanics"};
  app.require_subcommand(1);

  // modes
  Output modes_out;
  std::string modes_spec_path;
  std::optional<double> modes_xi, modes_wc;
  int modes_nmax = 5;
  auto* modes = app.add_subcommand("modes", "normal modes of a capacitively coupled line pair");
  modes->add_option("--spec", modes_spec_path, "spec file with a 'pair' section")->required();
  modes->add_option("--xi", modes_xi, "displacement of the coupling point, units of d");
  modes->add_option("--omega-c-over", modes_wc, "coupling frequency, units of v0/d");
  modes->add_option("--n-max", modes_nmax, "highest mode index")->check(CLI::NonNegativeNumber);
  add_output_flags(modes, modes_out, "csv");

  // tunable
  Output tun_out;
  std::string tun_spec_path;
  std::optional<double> tun_phi;
  double tun_lo = 0.0, tun_hi = 0.45;
  int tun_points = 0, tun_nmax = 3;
  bool tun_plasma = false;
  auto* tunable = app.add_subcommand("tunable", "SQUID-terminated resonator modes");
  tunable->add_option("--spec", tun_spec_path, "spec file with a 'tunable' section")->required();
  tunable->add_option("--phi", tun_phi, "external flux, units of Phi0");
  tunable->add_option("--phi-lo", tun_lo, "flux sweep start, units of Phi0");
  tunable->add_option("--phi-hi", tun_hi, "flux sweep end, units of Phi0");
  tunable->add_option("--points", tun_points, "flux sweep points");
  tunable->add_option("--n-max", tun_nmax, "highest mode index")->check(CLI::PositiveNumber);
  tunable->add_flag("--plasma-branch", tun_plasma, "keep modes above the SQUID plasma frequency");
  add_output_flags(tunable, tun_out, "csv");

  // analog-spectrum
  Output spec_out;
  std::string spec_path;
  std::optional<double> spec_delta;
  double spec_lo = -0.01, spec_hi = 0.01;
  int spec_points = 0, spec_nmax = 5;
  auto* aspec = app.add_subcommand("analog-spectrum", "resonator A spectrum under a flux imbalance");
  aspec->add_option("--spec", spec_path, "analog system spec file")->required();
  aspec->add_option("--delta", spec_delta, "flux imbalance, units of Phi0");
  aspec->add_option("--delta-lo", spec_lo, "imbalance sweep start, units of Phi0");
  aspec->add_option("--delta-hi", spec_hi, "imbalance sweep end, units of Phi0");
  aspec->add_option("--points", spec_points, "imbalance sweep points");
  aspec->add_option("--n-max", spec_nmax, "highest mode index")->check(CLI::NonNegativeNumber);
  add_output_flags(aspec, spec_out, "csv");

  // coupling
  Output cpl_out;
  std::string cpl_path, cpl_variant;
  int cpl_n = 1, cpl_m = 2;
  auto* coupling = app.add_subcommand("coupling", "quadratic coupling report for one (n, m) pair");
  coupling->add_option("--spec", cpl_path, "analog system spec file")->required();
  coupling->add_option("--n", cpl_n, "resonator A mode")->check(CLI::NonNegativeNumber);
  coupling->add_option("--m", cpl_m, "resonator B mode")->check(CLI::PositiveNumber);
  coupling->add_option("--variant", cpl_variant, "closed_form, simplified or biot_savart_numeric");
  add_output_flags(coupling, cpl_out, "json");

  // baseline
  Output base_out;
  std::string base_path, base_analog;
  std::optional<double> base_given;
  auto* baseline = app.add_subcommand("baseline", "cavity optomechanics comparison table");
  baseline->add_option("--spec", base_path, "spec file with a 'cavity' section")->required();
  baseline->add_option("--given-sensitivity", base_given,
                       "second cavity with a quoted sensitivity, rad/s/m^2");
  baseline->add_option("--analog-spec", base_analog, "analog spec whose n=1, m=2 ratio is added");
  add_output_flags(baseline, base_out, "csv");

  // validity
  Output val_out;
  std::string val_path, val_state = "vacuum";
  std::optional<double> val_T;
  double val_beta = 0.0, val_beta_im = 0.0;
  int val_n = 9, val_m = 2;
  auto* valid = app.add_subcommand("validity", "quadratic-regime check for a resonator B state");
  valid->add_option("--spec", val_path, "analog system spec file")->required();
  valid->add_option("--state", val_state, "vacuum, thermal or coherent")
      ->check(CLI::IsMember({"vacuum", "thermal", "coherent"}));
  valid->add_option("--T", val_T, "temperature, K");
  valid->add_option("--beta", val_beta, "coherent amplitude, real part");
  valid->add_option("--beta-im", val_beta_im, "coherent amplitude, imaginary part");
  valid->add_option("--n", val_n, "resonator A mode")->check(CLI::NonNegativeNumber);
  valid->add_option("--m", val_m, "resonator B mode")->check(CLI::PositiveNumber);
  add_output_flags(valid, val_out, "json");

  // sweep
  Output sw_out;
  std::string sw_target, sw_spec, sw_param;
  std::optional<double> sw_lo, sw_hi;
  int sw_points = sweep::kDefaultPoints, sw_jobs = 1, sw_n = 1, sw_m = 2;
  bool sw_log = false;
  auto* sw = app.add_subcommand("sweep", "figure datasets and custom one-axis sweeps");
  sw->add_option("--target", sw_target, "fig3_4, fig5, fig7, fig8, fig10, fig11, fig12 or custom")->required();
  sw->add_option("--spec", sw_spec, "base analog spec (fig10, fig11, fig12, custom)");
  sw->add_option("--param", sw_param, "swept parameter; dotted spec path for custom");
  sw->add_option("--lo", sw_lo, "axis start");
  sw->add_option("--hi", sw_hi, "axis end");
  sw->add_option("--points", sw_points, "axis points");
  sw->add_flag("--log", sw_log, "logarithmic axis spacing");
  sw->add_option("--n", sw_n, "resonator A mode (custom)");
  sw->add_option("--m", sw_m, "resonator B mode");
  sw->add_option("--jobs", sw_jobs, "worker threads");
  add_output_flags(sw, sw_out, "csv");

  // design
  Output des_out;
  std::string des_spec;
  std::vector<std::string> des_free;
  sweep::DesignConstraints des_c;
  int des_n = 1, des_m = 2, des_grid = 41;
  auto* design = app.add_subcommand("design", "constrained search for the largest |g/Omega|");
  design->add_option("--spec", des_spec, "base analog spec")->required();
  design->add_option("--free", des_free, "name:lo:hi with name in coupling_cap, bias_flux, area_ratio")
      ->required();
  design->add_option("--max-lj0-ratio", des_c.max_lj0_ratio, "upper bound on L_J0/(l D)");
  design->add_option("--max-cj-ratio", des_c.max_cj_ratio, "upper bound on C_J/(c D)");
  design->add_option("--min-x-star", des_c.min_x_star, "lower bound on the maximal amplitude");
  design->add_option("--n", des_n, "resonator A mode");
  design->add_option("--m", des_m, "resonator B mode");
  design->add_option("--grid", des_grid, "coarse grid points per axis");
  add_output_flags(design, des_out, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*modes) {
      const auto spec = modes_spec(modes_spec_path, modes_xi, modes_wc);
      const auto sol = membrane::solve_modes(spec, modes_nmax);
      io::CsvTable t({"n", "omega_rad_s", "k_per_m", "refl_abs", "residual", "omega_v0_per_d"});
      const double unit = spec.wave_speed() / spec.total_length();
      for (const auto& m : sol) {
        t.add_row({std::to_string(m.index), num(m.omega), num(m.wavenumber), num(m.refl_abs),
                   num(m.residual), num(m.omega / unit)});
      }
      emit_table(modes_out, t);
    } else if (*tunable) {
      const auto base = io::tunable_from_json(io::load_json(tun_spec_path));
      io::CsvTable t({"phi_over_phi0", "n", "omega_rad_s", "omega_approx_rad_s", "eta", "delta_d_m"});
      auto phis = grid(tun_phi, tun_lo, tun_hi, tun_points, base.flux().ratio());
      if (!tun_phi && tun_points > 0) phis = sweep::exclude_half_flux(phis);
      squid::SolveOptions opt;
      opt.include_plasma_branch = tun_plasma;
      for (double phi : phis) {
        const TunableResonatorSpec spec(base.line(), base.squid(), Flux::from_ratio(phi));
        const auto sol = squid::solve_modes(spec, tun_nmax, opt);
        const auto approx = squid::approx_modes(spec, tun_nmax);
        const double dd = squid::effective_length(spec);
        for (const auto& m : sol) {
          const double wa = approx[m.index - 1].second * spec.line().wave_speed();
          t.add_row({num(phi), std::to_string(m.index), num(m.omega), num(wa), num(m.eta), num(dd)});
        }
      }
      emit_table(tun_out, t);
    } else if (*aspec) {
      const auto spec = io::analog_from_json(io::load_json(spec_path));
      io::CsvTable t({"delta_phi_over_phi0", "n", "omega_rad_s", "omega_quadratic_rad_s", "epsilon"});
      std::vector<analog::QuadraticShift> shifts;
      for (int n = 0; n <= spec_nmax; ++n) shifts.push_back(analog::quadratic_shift(spec, n));
      for (double d : grid(spec_delta, spec_lo, spec_hi, spec_points, 0.0)) {
        const auto r = analog::spectrum(spec, Flux::from_ratio(d), spec_nmax);
        for (const auto& m : r.modes) {
          t.add_row({num(d), std::to_string(m.index), num(m.omega),
                     num(shifts[m.index].evaluate(m.index, Flux::from_ratio(d))), num(r.epsilon)});
        }
      }
      emit_table(spec_out, t);
    } else if (*coupling) {
      auto spec = io::analog_from_json(io::load_json(cpl_path));
      if (!cpl_variant.empty()) spec = spec.with_variant(coupling_variant_from_string(cpl_variant));
      emit_report(cpl_out, io::to_json(analog::coupling_strength(spec, cpl_n, cpl_m)));
    } else if (*baseline) {
      const auto cav = io::cavity_from_json(io::load_json(base_path));
      const auto b = analog::cavity_baseline(cav);
      io::CsvTable t({"system", "omega_pp_rad_s_per_m2", "omega_pp_over_2pi_Hz_per_nm2", "g_over_Omega"});
      const double to_hz_nm2 = 1e-18 / (2.0 * constants::pi);
      t.add_row({"cavity", num(b.omega_pp), num(b.omega_pp * to_hz_nm2), num(b.g_over_Omega)});
      double best_cavity = b.g_over_Omega;
      if (base_given) {
        const double g = analog::cavity_coupling_ratio(*base_given, cav.mass(), cav.mech_freq());
        t.add_row({"cavity_given", num(*base_given), num(*base_given * to_hz_nm2), num(g)});
        best_cavity = std::max(best_cavity, g);
      }
      if (!base_analog.empty()) {
        const auto r = analog::coupling_strength(io::analog_from_json(io::load_json(base_analog)), 1, 2);
        t.add_row({"circuit_n1_m2", "nan", "nan", num(std::abs(r.normalized))});
        t.add_row({"improvement_ratio", "nan", "nan", num(std::abs(r.normalized) / best_cavity)});
      }
      emit_table(base_out, t);
    } else if (*valid) {
      const auto spec = io::analog_from_json(io::load_json(val_path));
      const auto bound = validity::maximal_amplitude(spec, val_n, val_m);
      const double Omega = analog::resonator_b_mode(spec.res_b(), val_m).omega;
      validity::StateSpec state = validity::StateSpec::vacuum(Omega);
      double nbar = 0.0;
      if (val_state == "thermal") {
        if (!val_T) throw UsageError("--state thermal needs --T");
        state = validity::StateSpec::thermal(*val_T, Omega);
        if (*val_T > 0.0) {
          nbar = 1.0 / std::expm1(constants::hbar * Omega / (constants::boltzmann * *val_T));
        }
      } else if (val_state == "coherent") {
        state = validity::StateSpec::coherent({val_beta, val_beta_im}, Omega);
        nbar = std::norm(std::complex<double>(val_beta, val_beta_im));
      }
      const auto stats = validity::quadrature_stats(state);
      const auto check = validity::check_state(stats, bound);
      json j;
      j["n"] = val_n;
      j["m"] = val_m;
      j["state"] = val_state;
      j["Omega_m_rad_s"] = Omega;
      if (bound.unconstrained) {
        j["x_star"] = "unconstrained";
      } else {
        j["x_star"] = bound.value;
      }
      j["quadrature"] = state_json(stats);
      j["nbar"] = nbar;
      j["pass"] = check.pass;
      if (std::isfinite(check.margin)) {
        j["margin"] = check.margin;
      } else {
        j["margin"] = "unbounded";
      }
      if (!bound.unconstrained && bound.value >= 1.0) {
        const auto th = validity::max_photon_number(validity::BoundKind::thermal, bound.value, Omega);
        const auto co = validity::max_photon_number(validity::BoundKind::coherent, bound.value, Omega);
        j["nbar_max_thermal"] = th.n_max;
        j["T_max_K"] = th.t_max;
        j["nbar_max_coherent"] = co.n_max;
      }
      if (val_out.format == "csv") {
        json flat = j;
        flat.erase("quadrature");
        flat["mean"] = stats.mean;
        flat["fluctuation"] = stats.fluctuation;
        flat["max_over_cycle"] = stats.max_over_cycle;
        flat["pass"] = check.pass ? "true" : "false";
        emit_report(val_out, flat);
      } else {
        emit_report(val_out, j);
      }
    } else if (*sw) {
      sweep::SweepPlan plan;
      plan.target = sweep::target_from_string(sw_target);
      plan.jobs = sw_jobs;
      plan.n = sw_n;
      plan.m = sw_m;
      if (!sw_spec.empty()) plan.base_spec = io::load_json(sw_spec);
      if (!sw_param.empty() || sw_lo || sw_hi || sw_log || sw_points != sweep::kDefaultPoints) {
        sweep::Axis axis = sweep::default_axis(plan.target);
        if (!sw_param.empty()) axis.parameter = sw_param;
        if (sw_lo) axis.lo = *sw_lo;
        if (sw_hi) axis.hi = *sw_hi;
        axis.points = sw_points;
        if (sw_log) axis.spacing = sweep::Spacing::log;
        plan.axis = axis;
      }
      emit_table(sw_out, sweep::run_sweep(plan));
    } else if (*design) {
      const auto spec = io::analog_from_json(io::load_json(des_spec));
      std::vector<sweep::FreeAxis> free;
      for (const auto& f : des_free) {
        std::stringstream ss(f);
        std::string name, lo, hi;
        if (!std::getline(ss, name, ':') || !std::getline(ss, lo, ':') || !std::getline(ss, hi)) {
          throw PlanInvalid("--free expects name:lo:hi, got '" + f + "'");
        }
        try {
          free.push_back({sweep::free_param_from_string(name), std::stod(lo), std::stod(hi)});
        } catch (const std::invalid_argument&) {
          throw PlanInvalid("--free bounds must be numbers, got '" + f + "'");
        }
      }
      const auto r = sweep::design_search(spec, des_c, free, des_n, des_m, des_grid);
      json j;
      json arg = json::object();
      for (const auto& [p, v] : r.argmax) arg[sweep::to_string(p)] = v;
      j["argmax"] = arg;
      j["objective_abs_g_over_Omega"] = r.objective;
      j["best_grid_objective"] = r.best_grid_objective;
      j["binding"] = r.binding;
      j["evaluations"] = r.evaluations;
      j["report"] = io::to_json(r.report);
      if (des_out.format == "csv") {
        json flat = io::to_json(r.report);
        for (const auto& [p, v] : r.argmax) flat["argmax_" + sweep::to_string(p)] = v;
        flat["binding"] = r.binding;
        emit_report(des_out, flat);
      } else {
        emit_report(des_out, j);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
