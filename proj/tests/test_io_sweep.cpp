#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cqom/errors.hpp"
#include "cqom/io.hpp"
#include "cqom/sweep.hpp"
#include "fixtures.hpp"

using namespace cqom;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using nlohmann::json;

namespace {

json fig9_json() { return io::load_json(std::string(CQOM_SPEC_DIR) + "/fig9.json"); }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CQOM_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string header(const io::CsvTable& t) {
  const std::string s = t.str();
  return s.substr(0, s.find("\r\n"));
}

}  // namespace

TEST_CASE("spec files load and match the fixture", "[io]") {
  const auto spec = io::analog_from_json(fig9_json());
  const auto ref = fixtures::fig9();
  CHECK(spec.res_a().line().length() == ref.res_a().line().length());
  CHECK(spec.res_a().bias().ratio() == 0.4);
  CHECK(spec.coupling_variant() == CouplingVariant::simplified);
  CHECK(spec.geometry().area() == ref.geometry().area());
  CHECK_NOTHROW(io::pair_from_json(io::load_json(std::string(CQOM_SPEC_DIR) + "/pair.json")));
  CHECK_NOTHROW(io::tunable_from_json(io::load_json(std::string(CQOM_SPEC_DIR) + "/tunable.json")));
  CHECK_NOTHROW(io::cavity_from_json(io::load_json(std::string(CQOM_SPEC_DIR) + "/cavity.json")));
}

TEST_CASE("schema violations are usage errors", "[io]") {
  json doc = fig9_json();
  SECTION("missing schema") {
    doc.erase("schema");
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("wrong schema version") {
    doc["schema"] = 2;
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("unknown top-level key") {
    doc["extra"] = 1;
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("unknown nested key") {
    doc["resonator_a"]["squid"]["junction_cap_pF"] = 30;
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("missing key") {
    doc["loop"].erase("width_m");
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("non-numeric value") {
    doc["resonator_b"]["length_m"] = "0.4";
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("unknown enum") {
    doc["coupling_variant"] = "exact";
    CHECK_THROWS_AS(io::analog_from_json(doc), SchemaError);
  }
  SECTION("physically invalid value is a domain error") {
    doc["resonator_a"]["coupling_cap_F"] = -1e-15;
    CHECK_THROWS_AS(io::analog_from_json(doc), InvalidSpec);
  }
  CHECK_THROWS_AS(io::load_json("/nonexistent/spec.json"), SchemaError);
}

TEST_CASE("csv formatting", "[io]") {
  CHECK(io::format_number(1.0) == "1.000000000000e+00");
  CHECK(io::format_number(-2.5e-7) == "-2.500000000000e-07");
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  io::CsvTable t({"a", "b"});
  t.add_row({"1", "x,y"});
  CHECK(t.str() == "a,b\r\n1,\"x,y\"\r\n");
  CHECK_THROWS(t.add_row({"1"}));
  const json r = io::to_json(analog::coupling_strength(fixtures::fig9(), 1, 2));
  CHECK(r.contains("normalized_coupling"));
  CHECK(io::to_json(analog::coupling_strength(fixtures::fig9(0.0), 1, 2))["x_star"] == "unconstrained");
}

TEST_CASE("golden sweep headers", "[sweep][golden]") {
  using sweep::Target;
  auto cols = [](Target t) {
    sweep::SweepPlan p;
    p.target = t;
    io::CsvTable table(sweep::columns(p));
    return header(table);
  };
  CHECK(cols(Target::fig3_4) == "omega_c_v0_per_d,xi_over_d,n,omega_v0_per_d,omega_expansion_v0_per_d,"
                                "xi_star_over_d,omega_decoupled_v0_per_d,error");
  CHECK(cols(Target::fig5) == "omega_c_v0_per_d,xi_over_d,n,y_over_d,u,error");
  CHECK(cols(Target::fig7) == "lj0_over_l0d,cj_over_c0d,phi_over_phi0,n,omega_v0_per_d,"
                              "omega_approx_v0_per_d,eta,error");
  CHECK(cols(Target::fig8) == "phi_over_phi0,x_over_d,u,region,virtual_end_over_d,delta_d_over_d,error");
  CHECK(cols(Target::fig10) == "phi_over_phi0,n,m,omega_n0_rad_s,Omega_m_rad_s,g_nm_rad_s,abs_g_over_Omega,error");
  CHECK(cols(Target::fig11) == "coupling_cap_F,n,m,refl_abs,omega_n0_rad_s,Omega_m_rad_s,g_nm_rad_s,"
                               "abs_g_over_Omega,error");
  CHECK(cols(Target::fig12) == "phi_over_phi0,n,m,x_star,unconstrained,error");
  CHECK(cols(Target::custom) == "value,n,m,omega_n0_rad_s,Omega_m_rad_s,g_nm_rad_s,normalized_coupling,x_star,error");
}

TEST_CASE("sweeps are deterministic and independent of the worker count", "[sweep]") {
  for (auto t : {sweep::Target::fig3_4, sweep::Target::fig7, sweep::Target::fig10}) {
    sweep::SweepPlan p;
    p.target = t;
    p.base_spec = fig9_json();
    p.axis = sweep::default_axis(t);
    p.axis->points = 41;
    const std::string a = sweep::run_sweep(p).str();
    const std::string b = sweep::run_sweep(p).str();
    p.jobs = 3;
    const std::string c = sweep::run_sweep(p).str();
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("sweep plans are validated", "[sweep]") {
  sweep::SweepPlan p;
  p.target = sweep::Target::fig10;
  CHECK_THROWS_AS(sweep::validate(p), PlanInvalid);
  p.base_spec = fig9_json();
  CHECK_NOTHROW(sweep::validate(p));
  p.axis = sweep::Axis{"phi_over_phi0", 0.0, 0.4, 1, sweep::Spacing::linear};
  CHECK_THROWS_AS(sweep::validate(p), PlanInvalid);
  p.axis = sweep::Axis{"phi_over_phi0", 0.0, INFINITY, 11, sweep::Spacing::linear};
  CHECK_THROWS_AS(sweep::validate(p), PlanInvalid);
  p.axis = sweep::Axis{"coupling_cap_F", 0.0, 0.4, 11, sweep::Spacing::linear};
  CHECK_THROWS_AS(sweep::validate(p), PlanInvalid);
  p.target = sweep::Target::custom;
  p.axis = sweep::Axis{"resonator_a.no_such_key", 0.0, 1.0, 11, sweep::Spacing::linear};
  CHECK_THROWS_AS(sweep::validate(p), PlanInvalid);
  p.axis = sweep::Axis{"resonator_a.coupling_cap_F", 1e-16, 1e-14, 5, sweep::Spacing::log};
  const auto t = sweep::run_sweep(p);
  CHECK(t.rows().size() == 5);
  CHECK_THROWS_AS(sweep::target_from_string("fig99"), PlanInvalid);
}

TEST_CASE("per-point failures become error rows", "[sweep]") {
  sweep::SweepPlan p;
  p.target = sweep::Target::custom;
  p.base_spec = fig9_json();
  p.axis = sweep::Axis{"resonator_a.bias_flux_phi0", 0.3, 0.5, 3, sweep::Spacing::linear};
  const auto t = sweep::run_sweep(p);
  REQUIRE(t.rows().size() == 3);
  CHECK(t.rows()[0].back().empty());
  CHECK(t.rows()[2].back().find("HalfQuantumFlux") != std::string::npos);
  CHECK(t.rows()[2][3] == "nan");
}

TEST_CASE("half-flux exclusion window", "[sweep]") {
  const auto v = sweep::exclude_half_flux({0.0, 0.494, 0.496, 0.5, 0.504, 0.506, -0.5});
  CHECK(v == std::vector<double>{0.0, 0.494, 0.506});
}

TEST_CASE("design search examples", "[sweep][design]") {
  const auto spec = fixtures::fig9();
  sweep::DesignConstraints c;
  SECTION("bias flux argmax at the upper bound") {
    const auto r = sweep::design_search(spec, c, {{sweep::FreeParam::bias_flux, 0.0, 0.45}}, 1, 2);
    CHECK_THAT(r.argmax[0].second, WithinAbs(0.45, 1e-9));
    CHECK(r.objective >= r.best_grid_objective);
  }
  SECTION("coupling capacitance argmax at the smallest value") {
    const auto r = sweep::design_search(spec, c, {{sweep::FreeParam::coupling_cap, 1e-16, 1e-13}}, 1, 2);
    CHECK_THAT(r.argmax[0].second, WithinRel(1e-16, 1e-9));
  }
  SECTION("amplitude constraint binds at the flux where X* equals the bound") {
    const double target = analog::coupling_strength(spec, 9, 2).x_star;
    c.min_x_star = target;
    const auto r = sweep::design_search(spec, c, {{sweep::FreeParam::bias_flux, 0.0, 0.45}}, 9, 2);
    // brute-force oracle at 1e-3 Phi0 resolution
    double best = 0.0, arg = 0.0;
    for (int i = 0; i <= 450; ++i) {
      const double phi = 1e-3 * i;
      const auto rep = analog::coupling_strength(fixtures::fig9(phi), 9, 2);
      if (rep.x_star >= target && std::abs(rep.normalized) > best) {
        best = std::abs(rep.normalized);
        arg = phi;
      }
    }
    CHECK_THAT(r.argmax[0].second, WithinAbs(arg, 1e-3));
    CHECK_THAT(r.argmax[0].second, WithinAbs(0.4, 1e-3));
    CHECK(std::find(r.binding.begin(), r.binding.end(), "min_x_star") != r.binding.end());
  }
  SECTION("infeasible constraints") {
    c.max_lj0_ratio = 1e-9;
    CHECK_THROWS_AS(sweep::design_search(spec, c, {{sweep::FreeParam::bias_flux, 0.0, 0.45}}, 1, 2),
                    InfeasibleConstraints);
  }
  CHECK_THROWS_AS(sweep::design_search(spec, c, {}, 1, 2), PlanInvalid);
}

TEST_CASE("cli exit codes and outputs", "[cli]") {
  const std::string spec = std::string(CQOM_SPEC_DIR);
  CHECK(run_cli("coupling --spec " + spec + "/fig9.json --n 1 --m 2") == 0);
  CHECK(run_cli("validity --spec " + spec + "/fig9.json --state thermal --T 0.02") == 0);
  CHECK(run_cli("tunable --spec " + spec + "/tunable.json --phi 0.5") == 1);
  CHECK(run_cli("coupling --spec " + spec + "/fig9.json --m 3") == 1);
  CHECK(run_cli("coupling --spec /nonexistent.json") == 2);
  CHECK(run_cli("sweep --target nope") == 2);
  CHECK(run_cli("modes") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("validity --spec " + spec + "/fig9.json --state thermal") == 2);

  const std::string out = "cli_modes_test.csv";
  REQUIRE(run_cli("modes --spec " + spec + "/pair.json --xi 0 --omega-c-over 10 --n-max 5 --out " + out) == 0);
  const std::string csv = slurp(out);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,omega_rad_s,k_per_m,refl_abs,residual,omega_v0_per_d\r");
  int rows = 0;
  double first = 0.0;
  while (std::getline(lines, line)) {
    if (rows == 0) first = std::stod(line.substr(line.rfind(',') + 1));
    ++rows;
  }
  CHECK(rows == 6);
  CHECK_THAT(first, WithinRel(2.2844537096, 1e-9));

  const std::string rep = "cli_coupling_test.json";
  REQUIRE(run_cli("coupling --spec " + spec + "/fig9.json --n 1 --m 2 --out " + rep) == 0);
  const json j = json::parse(slurp(rep));
  CHECK(j.contains("normalized_coupling"));
  CHECK(j["n"] == 1);
  std::remove(out.c_str());
  std::remove(rep.c_str());
}
