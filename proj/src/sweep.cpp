#include "cqom/sweep.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "cqom/errors.hpp"
#include "cqom/membrane.hpp"
#include "cqom/squid.hpp"
#include "cqom/validity.hpp"

namespace cqom::sweep {

namespace {

using Rows = std::vector<std::vector<std::string>>;
using io::format_number;

const std::vector<double> kFig34OmegaC{0.1, 1.0, 10.0, 100.0};
const std::vector<double> kFig5OmegaC{0.1, 10.0, 1000.0};
const std::vector<double> kFig5Xi{0.0, 0.1, -0.3};
const std::vector<double> kFig7Lj{1.0, 0.1, 0.01};
const std::vector<double> kFig7Cj{1.0, 0.1, 0.01};
const std::vector<double> kFig8Phi{0.32, 0.38, 0.44};

std::string num(double x) { return format_number(x); }
std::string num(int x) { return std::to_string(x); }
const std::string kNan = "nan";

// Dimensionless SQUID-terminated line with l0 = c0 = d = 1.
TunableResonatorSpec unit_tunable(double lj0, double cj, double phi) {
  const double p = constants::reduced_flux_quantum;
  return {TransmissionLine(1.0, 1.0, 1.0), Squid(p * p / (2.0 * lj0), cj), Flux::from_ratio(phi)};
}

std::string error_text(const std::exception& e) {
  std::string s = e.what();
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::vector<double> flux_axis_values(const Axis& axis) {
  return exclude_half_flux(axis.values());
}

Rows fig3_4_point(double wc, double xi) {
  Rows rows;
  const int n_max = 5;
  try {
    const auto spec = CoupledPairSpec::dimensionless(wc, xi);
    const auto modes = membrane::solve_modes(spec, n_max);
    for (const auto& m : modes) {
      const auto e = membrane::expand_modes(spec, m.index);
      double nearest = std::numeric_limits<double>::infinity();
      for (bool left : {true, false}) {
        const double len = left ? spec.left_len() : spec.right_len();
        const double k = std::max(0.0, std::round(m.omega * len / constants::pi - 0.5));
        for (double kk : {k - 1.0, k, k + 1.0}) {
          if (kk < 0.0) continue;
          const double w = membrane::decoupled_frequency(spec, static_cast<int>(kk), left);
          if (std::abs(w - m.omega) < std::abs(nearest - m.omega)) nearest = w;
        }
      }
      rows.push_back({num(wc), num(xi), num(m.index), num(m.omega), num(e.third_order(xi)),
                      num(e.validity_extent), num(nearest), ""});
    }
  } catch (const std::exception& ex) {
    for (int n = 0; n <= n_max; ++n) {
      rows.push_back({num(wc), num(xi), num(n), kNan, kNan, kNan, kNan, error_text(ex)});
    }
  }
  return rows;
}

Rows fig5_panel(double wc, double xi, const std::vector<double>& ys) {
  Rows rows;
  const int n_max = 3;
  try {
    const auto spec = CoupledPairSpec::dimensionless(wc, xi);
    const auto modes = membrane::solve_modes(spec, n_max);
    for (const auto& m : modes) {
      for (double y : ys) {
        std::string u, err;
        try {
          u = num(membrane::mode_function(spec, m, y - spec.left_len()));
        } catch (const std::exception& ex) {
          u = kNan;
          err = error_text(ex);
        }
        rows.push_back({num(wc), num(xi), num(m.index), num(y), u, err});
      }
    }
  } catch (const std::exception& ex) {
    for (int n = 0; n <= n_max; ++n) {
      for (double y : ys) rows.push_back({num(wc), num(xi), num(n), num(y), kNan, error_text(ex)});
    }
  }
  return rows;
}

Rows fig7_point(double lj, double cj, double phi) {
  Rows rows;
  const int n_max = 3;
  try {
    const auto spec = unit_tunable(lj, cj, phi);
    squid::SolveOptions opt;
    opt.include_plasma_branch = true;
    const auto modes = squid::solve_modes(spec, n_max, opt);
    const auto approx = squid::approx_modes(spec, n_max);
    for (std::size_t i = 0; i < modes.size(); ++i) {
      rows.push_back({num(lj), num(cj), num(phi), num(modes[i].index), num(modes[i].omega),
                      num(approx[i].second), num(modes[i].eta), ""});
    }
  } catch (const std::exception& ex) {
    for (int n = 1; n <= n_max; ++n) {
      rows.push_back({num(lj), num(cj), num(phi), num(n), kNan, kNan, kNan, error_text(ex)});
    }
  }
  return rows;
}

Rows fig8_panel(double phi, const std::vector<double>& xs) {
  Rows rows;
  try {
    const auto spec = unit_tunable(1e-2, 1e-1, phi);
    const auto modes = squid::solve_modes(spec, 1);
    if (modes.empty()) throw RootNotBracketed("fundamental mode lies above the plasma frequency");
    const auto& m = modes.front();
    const double xe = squid::virtual_end(spec, m);
    const double dd = squid::effective_length(spec);
    for (double x : xs) {
      rows.push_back({num(phi), num(x), num(squid::continued_mode(spec, m, x)),
                      x < 0.0 ? "virtual" : "real", num(xe), num(dd), ""});
    }
  } catch (const std::exception& ex) {
    for (double x : xs) rows.push_back({num(phi), num(x), kNan, kNan, kNan, kNan, error_text(ex)});
  }
  return rows;
}

Rows coupling_rows(const AnalogSystemSpec& spec, double axis_value, int n_lo, int n_hi, int m,
                   bool with_refl) {
  Rows rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    try {
      const auto r = analog::coupling_strength(spec, n, m);
      std::vector<std::string> row{num(axis_value), num(n), num(m)};
      if (with_refl) {
        const double x = spec.res_a().omega_c() / (2.0 * r.omega_n0);
        row.push_back(num(x / std::sqrt(1.0 + x * x)));
      }
      row.insert(row.end(), {num(r.omega_n0), num(r.Omega_m), num(r.g_nm), num(std::abs(r.normalized)), ""});
      rows.push_back(row);
    } catch (const std::exception& ex) {
      std::vector<std::string> row{num(axis_value), num(n), num(m)};
      if (with_refl) row.push_back(kNan);
      row.insert(row.end(), {kNan, kNan, kNan, kNan, error_text(ex)});
      rows.push_back(row);
    }
  }
  return rows;
}

Rows fig12_point(const AnalogSystemSpec& base, double phi, int m) {
  Rows rows;
  for (int n = 0; n <= 9; ++n) {
    try {
      const auto spec = base.with_res_a(base.res_a().with_bias(Flux::from_ratio(phi)));
      const auto x = validity::maximal_amplitude(spec, n, m);
      rows.push_back({num(phi), num(n), num(m), num(x.value), x.unconstrained ? "1" : "0", ""});
    } catch (const std::exception& ex) {
      rows.push_back({num(phi), num(n), num(m), kNan, kNan, error_text(ex)});
    }
  }
  return rows;
}

nlohmann::json* find_path(nlohmann::json& doc, const std::string& path) {
  nlohmann::json* node = &doc;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (!node->is_object() || !node->contains(part)) return nullptr;
    node = &(*node)[part];
  }
  return node->is_number() ? node : nullptr;
}

Rows custom_point(const nlohmann::json& base, const std::string& path, double value, int n, int m) {
  try {
    nlohmann::json doc = base;
    *find_path(doc, path) = value;
    const auto spec = io::analog_from_json(doc);
    const auto r = analog::coupling_strength(spec, n, m);
    return {{num(value), num(n), num(m), num(r.omega_n0), num(r.Omega_m), num(r.g_nm),
             num(r.normalized), num(r.x_star), ""}};
  } catch (const std::exception& ex) {
    return {{num(value), num(n), num(m), kNan, kNan, kNan, kNan, kNan, error_text(ex)}};
  }
}

template <class F>
io::CsvTable collect(std::vector<std::string> cols, std::size_t count, int jobs, F&& f) {
  io::CsvTable table(std::move(cols));
  const auto chunks = parallel_map(count, jobs, f);
  for (const auto& rows : chunks) {
    for (const auto& r : rows) table.add_row(r);
  }
  return table;
}

}  // namespace

Target target_from_string(const std::string& s) {
  if (s == "fig3_4") return Target::fig3_4;
  if (s == "fig5") return Target::fig5;
  if (s == "fig7") return Target::fig7;
  if (s == "fig8") return Target::fig8;
  if (s == "fig10") return Target::fig10;
  if (s == "fig11") return Target::fig11;
  if (s == "fig12") return Target::fig12;
  if (s == "custom") return Target::custom;
  throw PlanInvalid("unknown sweep target '" + s + "'");
}

std::string to_string(Target t) {
  switch (t) {
    case Target::fig3_4: return "fig3_4";
    case Target::fig5: return "fig5";
    case Target::fig7: return "fig7";
    case Target::fig8: return "fig8";
    case Target::fig10: return "fig10";
    case Target::fig11: return "fig11";
    case Target::fig12: return "fig12";
    case Target::custom: return "custom";
  }
  return "custom";
}

std::vector<double> Axis::values() const {
  std::vector<double> v;
  v.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double t = (points == 1) ? 0.0 : static_cast<double>(i) / (points - 1);
    if (spacing == Spacing::log) {
      v.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    } else {
      v.push_back(lo + t * (hi - lo));
    }
  }
  if (points > 1) v.back() = hi;
  return v;
}

std::vector<double> exclude_half_flux(const std::vector<double>& phi) {
  std::vector<double> out;
  for (double p : phi) {
    const double dist = std::abs(p - (std::floor(p) + 0.5));
    if (dist >= kHalfFluxWindow) out.push_back(p);
  }
  return out;
}

Axis default_axis(Target t) {
  switch (t) {
    case Target::fig3_4: return {"xi_over_d", -0.45, 0.45, kDefaultPoints, Spacing::linear};
    case Target::fig5: return {"y_over_d", 0.0, 1.0, kDefaultPoints, Spacing::linear};
    case Target::fig7: return {"phi_over_phi0", 0.0, 0.5, kDefaultPoints, Spacing::linear};
    case Target::fig8: return {"x_over_d", -0.1, 1.0, kDefaultPoints, Spacing::linear};
    case Target::fig10: return {"phi_over_phi0", 0.0, 0.5, kDefaultPoints, Spacing::linear};
    case Target::fig11: return {"coupling_cap_F", 1e-16, 1e-13, kDefaultPoints, Spacing::log};
    case Target::fig12: return {"phi_over_phi0", 0.0, 0.5, kDefaultPoints, Spacing::linear};
    case Target::custom: return {"", 0.0, 1.0, kDefaultPoints, Spacing::linear};
  }
  return {};
}

std::vector<std::string> columns(const SweepPlan& plan) {
  switch (plan.target) {
    case Target::fig3_4:
      return {"omega_c_v0_per_d", "xi_over_d", "n", "omega_v0_per_d", "omega_expansion_v0_per_d",
              "xi_star_over_d", "omega_decoupled_v0_per_d", "error"};
    case Target::fig5:
      return {"omega_c_v0_per_d", "xi_over_d", "n", "y_over_d", "u", "error"};
    case Target::fig7:
      return {"lj0_over_l0d", "cj_over_c0d", "phi_over_phi0", "n", "omega_v0_per_d",
              "omega_approx_v0_per_d", "eta", "error"};
    case Target::fig8:
      return {"phi_over_phi0", "x_over_d", "u", "region", "virtual_end_over_d", "delta_d_over_d", "error"};
    case Target::fig10:
      return {"phi_over_phi0", "n", "m", "omega_n0_rad_s", "Omega_m_rad_s", "g_nm_rad_s",
              "abs_g_over_Omega", "error"};
    case Target::fig11:
      return {"coupling_cap_F", "n", "m", "refl_abs", "omega_n0_rad_s", "Omega_m_rad_s", "g_nm_rad_s",
              "abs_g_over_Omega", "error"};
    case Target::fig12:
      return {"phi_over_phi0", "n", "m", "x_star", "unconstrained", "error"};
    case Target::custom: {
      const std::string p = plan.axis ? plan.axis->parameter : "value";
      return {p, "n", "m", "omega_n0_rad_s", "Omega_m_rad_s", "g_nm_rad_s", "normalized_coupling",
              "x_star", "error"};
    }
  }
  return {};
}

void validate(const SweepPlan& plan) {
  const Axis axis = plan.axis ? *plan.axis : default_axis(plan.target);
  if (plan.axis) {
    if (plan.target != Target::custom && axis.parameter != default_axis(plan.target).parameter) {
      throw PlanInvalid("target " + to_string(plan.target) + " sweeps '" +
                        default_axis(plan.target).parameter + "', not '" + axis.parameter + "'");
    }
  }
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi)) throw PlanInvalid("axis range must be finite");
  if (axis.points < 2) throw PlanInvalid("axis needs at least 2 points");
  if (!(axis.hi > axis.lo)) throw PlanInvalid("axis upper bound must exceed the lower bound");
  if (axis.spacing == Spacing::log && !(axis.lo > 0.0)) throw PlanInvalid("log axis needs a positive range");
  if (plan.jobs < 1) throw PlanInvalid("jobs must be at least 1");
  const bool needs_spec = plan.target == Target::fig10 || plan.target == Target::fig11 ||
                          plan.target == Target::fig12 || plan.target == Target::custom;
  if (needs_spec && !plan.base_spec) throw PlanInvalid("target " + to_string(plan.target) + " needs --spec");
  if (needs_spec) {
    try {
      io::analog_from_json(*plan.base_spec);
    } catch (const Error& e) {
      throw PlanInvalid(std::string("base spec rejected: ") + e.what());
    }
  }
  if (plan.target == Target::custom) {
    if (axis.parameter.empty()) throw PlanInvalid("custom target needs an axis parameter");
    nlohmann::json copy = *plan.base_spec;
    if (!find_path(copy, axis.parameter)) {
      throw PlanInvalid("parameter '" + axis.parameter + "' is not a numeric field of the spec");
    }
  }
}

io::CsvTable run_sweep(const SweepPlan& plan) {
  validate(plan);
  const Axis axis = plan.axis ? *plan.axis : default_axis(plan.target);
  const auto cols = columns(plan);
  switch (plan.target) {
    case Target::fig3_4: {
      const auto xs = axis.values();
      return collect(cols, kFig34OmegaC.size() * xs.size(), plan.jobs, [&](std::size_t i) {
        return fig3_4_point(kFig34OmegaC[i / xs.size()], xs[i % xs.size()]);
      });
    }
    case Target::fig5: {
      const auto ys = axis.values();
      return collect(cols, kFig5OmegaC.size() * kFig5Xi.size(), plan.jobs, [&](std::size_t i) {
        return fig5_panel(kFig5OmegaC[i / kFig5Xi.size()], kFig5Xi[i % kFig5Xi.size()], ys);
      });
    }
    case Target::fig7: {
      const auto phis = flux_axis_values(axis);
      const std::size_t panels = kFig7Lj.size() * kFig7Cj.size();
      return collect(cols, panels * phis.size(), plan.jobs, [&](std::size_t i) {
        const std::size_t panel = i / phis.size();
        return fig7_point(kFig7Lj[panel / kFig7Cj.size()], kFig7Cj[panel % kFig7Cj.size()],
                          phis[i % phis.size()]);
      });
    }
    case Target::fig8: {
      const auto xs = axis.values();
      return collect(cols, kFig8Phi.size(), plan.jobs,
                     [&](std::size_t i) { return fig8_panel(kFig8Phi[i], xs); });
    }
    case Target::fig10: {
      const auto base = io::analog_from_json(*plan.base_spec);
      const auto phis = flux_axis_values(axis);
      return collect(cols, phis.size(), plan.jobs, [&](std::size_t i) {
        try {
          const auto spec = base.with_res_a(base.res_a().with_bias(Flux::from_ratio(phis[i])));
          return coupling_rows(spec, phis[i], 0, 9, plan.m, false);
        } catch (const std::exception& ex) {
          Rows rows;
          for (int n = 0; n <= 9; ++n) {
            rows.push_back({num(phis[i]), num(n), num(plan.m), kNan, kNan, kNan, kNan, error_text(ex)});
          }
          return rows;
        }
      });
    }
    case Target::fig11: {
      const auto base = io::analog_from_json(*plan.base_spec);
      const auto ccs = axis.values();
      return collect(cols, ccs.size(), plan.jobs, [&](std::size_t i) {
        const auto spec = base.with_res_a(base.res_a().with_coupling_cap(ccs[i]));
        return coupling_rows(spec, ccs[i], 0, 5, plan.m, true);
      });
    }
    case Target::fig12: {
      const auto base = io::analog_from_json(*plan.base_spec);
      const auto phis = flux_axis_values(axis);
      return collect(cols, phis.size(), plan.jobs,
                     [&](std::size_t i) { return fig12_point(base, phis[i], plan.m); });
    }
    case Target::custom: {
      const auto vals = axis.values();
      return collect(cols, vals.size(), plan.jobs, [&](std::size_t i) {
        return custom_point(*plan.base_spec, axis.parameter, vals[i], plan.n, plan.m);
      });
    }
  }
  throw PlanInvalid("unhandled target");
}

FreeParam free_param_from_string(const std::string& s) {
  if (s == "coupling_cap" || s == "cc") return FreeParam::coupling_cap;
  if (s == "bias_flux" || s == "phi") return FreeParam::bias_flux;
  if (s == "area_ratio" || s == "area") return FreeParam::area_ratio;
  throw PlanInvalid("unknown free parameter '" + s + "' (expected coupling_cap|bias_flux|area_ratio)");
}

std::string to_string(FreeParam p) {
  switch (p) {
    case FreeParam::coupling_cap: return "coupling_cap";
    case FreeParam::bias_flux: return "bias_flux";
    case FreeParam::area_ratio: return "area_ratio";
  }
  return "bias_flux";
}

AnalogSystemSpec apply_free(const AnalogSystemSpec& base, FreeParam p, double value) {
  switch (p) {
    case FreeParam::coupling_cap:
      return base.with_res_a(base.res_a().with_coupling_cap(value));
    case FreeParam::bias_flux:
      return base.with_res_a(base.res_a().with_bias(Flux::from_ratio(value)));
    case FreeParam::area_ratio: {
      const auto& g = base.geometry();
      const double db = base.res_b().line().length();
      const double w = value * db * g.near_edge() / (g.far_edge() - g.near_edge());
      return base.with_geometry(LoopGeometry(g.squid_position(), g.near_edge(), g.far_edge(), w));
    }
  }
  return base;
}

double free_value(const AnalogSystemSpec& spec, FreeParam p) {
  switch (p) {
    case FreeParam::coupling_cap: return spec.res_a().coupling_cap();
    case FreeParam::bias_flux: return spec.res_a().bias().ratio();
    case FreeParam::area_ratio:
      return spec.geometry().area() / (spec.res_b().line().length() * spec.geometry().near_edge());
  }
  return 0.0;
}

namespace {

struct Evaluator {
  const AnalogSystemSpec& base;
  const DesignConstraints& c;
  const std::vector<FreeAxis>& free;
  int n, m;
  int evaluations = 0;

  AnalogSystemSpec build(const std::vector<double>& x) const {
    AnalogSystemSpec s = base;
    for (std::size_t i = 0; i < free.size(); ++i) s = apply_free(s, free[i].param, x[i]);
    return s;
  }

  // |g/Omega| at a feasible point, -inf otherwise
  double operator()(const std::vector<double>& x) {
    ++evaluations;
    try {
      const AnalogSystemSpec s = build(x);
      if (s.lj_ratio() > c.max_lj0_ratio || s.cj_ratio() > c.max_cj_ratio) {
        return -std::numeric_limits<double>::infinity();
      }
      const auto r = analog::coupling_strength(s, n, m);
      if (c.min_x_star > 0.0 && r.x_star < c.min_x_star) return -std::numeric_limits<double>::infinity();
      return std::abs(r.normalized);
    } catch (const Error&) {
      return -std::numeric_limits<double>::infinity();
    }
  }
};

bool is_log(FreeParam p) { return p == FreeParam::coupling_cap || p == FreeParam::area_ratio; }

double to_axis(FreeParam p, double v) { return is_log(p) ? std::log(v) : v; }
double from_axis(FreeParam p, double t) { return is_log(p) ? std::exp(t) : t; }

}  // namespace

DesignResult design_search(const AnalogSystemSpec& base, const DesignConstraints& constraints,
                           const std::vector<FreeAxis>& free, int n, int m, int grid_points) {
  if (free.empty()) throw PlanInvalid("design search needs at least one free parameter");
  if (grid_points < 2) throw PlanInvalid("design grid needs at least 2 points per axis");
  for (const auto& f : free) {
    if (!(f.hi > f.lo)) throw PlanInvalid("free axis " + to_string(f.param) + " has an empty range");
    if (is_log(f.param) && !(f.lo > 0.0)) {
      throw PlanInvalid("free axis " + to_string(f.param) + " needs a positive range");
    }
  }
  Evaluator eval{base, constraints, free, n, m};
  const std::size_t dims = free.size();
  std::vector<double> lo(dims), hi(dims), step(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    lo[i] = to_axis(free[i].param, free[i].lo);
    hi[i] = to_axis(free[i].param, free[i].hi);
    step[i] = (hi[i] - lo[i]) / (grid_points - 1);
  }
  auto point = [&](const std::vector<double>& t) {
    std::vector<double> x(dims);
    for (std::size_t i = 0; i < dims; ++i) x[i] = from_axis(free[i].param, t[i]);
    return x;
  };

  std::vector<int> idx(dims, 0);
  std::vector<double> best_t;
  double best = -std::numeric_limits<double>::infinity();
  for (;;) {
    std::vector<double> t(dims);
    for (std::size_t i = 0; i < dims; ++i) t[i] = (idx[i] == grid_points - 1) ? hi[i] : lo[i] + idx[i] * step[i];
    const double f = eval(point(t));
    if (f > best) {
      best = f;
      best_t = t;
    }
    std::size_t k = 0;
    while (k < dims && ++idx[k] == grid_points) idx[k++] = 0;
    if (k == dims) break;
  }
  if (!std::isfinite(best)) throw InfeasibleConstraints("no feasible point on the coarse design grid");

  DesignResult result;
  result.best_grid_objective = best;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (std::size_t i = 0; i < dims; ++i) {
      double a = std::max(lo[i], best_t[i] - step[i]);
      double b = std::min(hi[i], best_t[i] + step[i]);
      auto f1 = [&](double ti) {
        std::vector<double> t = best_t;
        t[i] = ti;
        return eval(point(t));
      };
      double c = b - golden * (b - a);
      double d = a + golden * (b - a);
      double fc = f1(c), fd = f1(d);
      while (b - a > 1e-12 * std::max(1.0, std::abs(hi[i] - lo[i]))) {
        if (fc < fd) {
          a = c;
          c = d;
          fc = fd;
          d = a + golden * (b - a);
          fd = f1(d);
        } else {
          b = d;
          d = c;
          fd = fc;
          c = b - golden * (b - a);
          fc = f1(c);
        }
      }
      for (double t : {a, b, 0.5 * (a + b)}) {
        const double f = f1(t);
        if (f > best) {
          best = f;
          best_t[i] = t;
        }
      }
    }
  }

  const std::vector<double> x = point(best_t);
  const AnalogSystemSpec s = eval.build(x);
  result.report = analog::coupling_strength(s, n, m);
  result.objective = best;
  for (std::size_t i = 0; i < dims; ++i) result.argmax.emplace_back(free[i].param, x[i]);
  const double rel = 1e-6;
  if (constraints.min_x_star > 0.0 &&
      std::abs(result.report.x_star - constraints.min_x_star) <= 1e-3 * constraints.min_x_star) {
    result.binding.push_back("min_x_star");
  }
  if (std::abs(s.lj_ratio() - constraints.max_lj0_ratio) <= 1e-3 * constraints.max_lj0_ratio) {
    result.binding.push_back("max_lj0_ratio");
  }
  if (std::abs(s.cj_ratio() - constraints.max_cj_ratio) <= 1e-3 * constraints.max_cj_ratio) {
    result.binding.push_back("max_cj_ratio");
  }
  for (std::size_t i = 0; i < dims; ++i) {
    const double span = hi[i] - lo[i];
    if (std::abs(best_t[i] - lo[i]) <= rel * span) result.binding.push_back("bound:" + to_string(free[i].param) + "_lo");
    if (std::abs(best_t[i] - hi[i]) <= rel * span) result.binding.push_back("bound:" + to_string(free[i].param) + "_hi");
  }
  result.evaluations = eval.evaluations;
  return result;
}

}  // namespace cqom::sweep
