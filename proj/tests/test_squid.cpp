#include <catch_amalgamated.hpp>

#include <cmath>

#include "cqom/errors.hpp"
#include "cqom/numeric.hpp"
#include "cqom/squid.hpp"
#include "oracle.hpp"

using namespace cqom;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// l0 = c0 = d = 1 with L_J0 and C_J given in units of l0 d and c0 d.
TunableResonatorSpec unit_spec(double lj0, double cj, double phi) {
  const double p = constants::reduced_flux_quantum;
  return {TransmissionLine(1.0, 1.0, 1.0), Squid(p * p / (2.0 * lj0), cj), Flux::from_ratio(phi)};
}

}  // namespace

TEST_CASE("effective inductance follows the SQUID flux law", "[squid][params]") {
  const Squid sq(6.17e-22, 30e-15);
  const double p = constants::reduced_flux_quantum;
  CHECK_THAT(sq.lj0(), WithinRel(p * p / (2.0 * 6.17e-22), 1e-14));
  CHECK_THAT(effective_inductance(sq, Flux::from_ratio(0.25)), WithinRel(sq.lj0() / std::cos(M_PI / 4), 1e-14));
  for (double phi : {0.05, 0.2, 0.41}) {
    CHECK_THAT(effective_inductance(sq, Flux::from_ratio(phi)),
               WithinRel(effective_inductance(sq, Flux::from_ratio(-phi)), 1e-14));
    CHECK_THAT(effective_inductance(sq, Flux::from_ratio(phi)),
               WithinRel(effective_inductance(sq, Flux::from_ratio(phi + 1.0)), 1e-12));
  }
  CHECK_THROWS_AS(effective_inductance(sq, Flux::from_ratio(0.5)), HalfQuantumFlux);
  CHECK_THROWS_AS(effective_inductance(sq, Flux::from_ratio(-1.5)), HalfQuantumFlux);
}

TEST_CASE("SQUID-terminated roots match an independent oracle", "[squid][oracle]") {
  for (double lj : {1e-2, 0.1, 1.0}) {
    for (double cj : {1e-2, 0.1}) {
      for (double phi : {0.0, 0.3, 0.45}) {
        const auto spec = unit_spec(lj, cj, phi);
        squid::SolveOptions opt;
        opt.include_plasma_branch = true;
        const auto modes = squid::solve_modes(spec, 4, opt);
        const auto ref = oracle::squid_roots(1.0, 1.0, 1.0, spec.josephson_inductance(), cj, 4);
        REQUIRE(modes.size() == 4);
        for (int i = 0; i < 4; ++i) {
          INFO("lj = " << lj << ", cj = " << cj << ", phi = " << phi << ", n = " << i + 1);
          CHECK(modes[i].index == i + 1);
          CHECK_THAT(modes[i].omega, WithinRel(ref[i], 1e-9));
          CHECK(modes[i].residual < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("frequencies decrease with flux toward a half quantum", "[squid][property]") {
  double prev = 1e300;
  for (double phi : {0.0, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49}) {
    const double w = squid::solve_modes(unit_spec(1e-2, 1e-1, phi), 1).front().omega;
    CHECK(w < prev);
    prev = w;
  }
}

TEST_CASE("modes are orthonormal with the junction capacitance", "[squid][quadrature]") {
  for (double phi : {0.0, 0.35}) {
    const auto spec = unit_spec(0.1, 0.1, phi);
    squid::SolveOptions opt;
    opt.include_plasma_branch = true;
    const auto modes = squid::solve_modes(spec, 6, opt);
    for (int a = 0; a < 6; ++a) {
      for (int b = a; b < 6; ++b) {
        auto f = [&](double x) {
          return squid::mode_function(spec, modes[a], x) * squid::mode_function(spec, modes[b], x);
        };
        const double s = numeric::integrate(f, 0.0, 1.0, 1e-12) +
                         spec.squid().junction_cap() * squid::mode_function(spec, modes[a], 0.0) *
                             squid::mode_function(spec, modes[b], 0.0);
        INFO("phi = " << phi << ", (" << a << ", " << b << ")");
        CHECK_THAT(s / spec.total_capacitance(), WithinAbs(a == b ? 1.0 : 0.0, 1e-6));
      }
    }
  }
}

TEST_CASE("effective-length approximation in the weak-junction regime", "[squid]") {
  const auto spec = unit_spec(1e-2, 1e-1, 0.2);
  const auto modes = squid::solve_modes(spec, 3);
  const auto approx = squid::approx_modes(spec, 3);
  for (int i = 0; i < 3; ++i) CHECK_THAT(approx[i].second, WithinRel(modes[i].omega, 1e-2));
  CHECK_THAT(squid::effective_length(spec), WithinRel(spec.josephson_inductance(), 1e-14));
}

TEST_CASE("plasma branch is excluded unless requested", "[squid]") {
  const auto spec = unit_spec(1.0, 1.0, 0.0);
  const auto low = squid::solve_modes(spec, 4);
  for (const auto& m : low) CHECK(m.eta < 1.0);
  squid::SolveOptions opt;
  opt.include_plasma_branch = true;
  CHECK(squid::solve_modes(spec, 4, opt).size() == 4);
  CHECK(low.size() < 4);
}

TEST_CASE("virtual end sits one effective length behind the SQUID", "[squid]") {
  const auto spec = unit_spec(1e-3, 1e-3, 0.0);
  const auto m = squid::solve_modes(spec, 1).front();
  const double xe = squid::virtual_end(spec, m);
  CHECK(xe < 0.0);
  CHECK_THAT(squid::continued_mode(spec, m, xe), WithinAbs(0.0, 1e-12));
  CHECK_THAT(-xe, WithinRel(squid::effective_length(spec), 1e-2));
  CHECK_THROWS_AS(squid::mode_function(spec, m, -0.01), OutOfDomain);
}

TEST_CASE("secant normalization matches the solved amplitude", "[squid]") {
  const auto spec = unit_spec(0.1, 0.05, 0.2);
  for (const auto& m : squid::solve_modes(spec, 3)) {
    CHECK_THAT(squid::secant_normalization(spec, m), WithinRel(m.normalization, 1e-9));
  }
}

TEST_CASE("linearized effective length", "[squid]") {
  const Squid sq(6.17e-22, 30e-15);
  const double l = 4.57e-7;
  const double p = constants::reduced_flux_quantum;
  const auto pub = squid::linearize_length(l, sq, Flux::from_ratio(0.4), LengthModel::published);
  CHECK_THAT(pub.delta_d0, WithinRel(p * p / (l * sq.josephson_energy()), 1e-14));
  CHECK_THAT(pub.delta_d1, WithinRel(0.5 * p / (l * sq.josephson_energy()) * std::tan(0.4 * M_PI), 1e-12));
  const auto tan = squid::linearize_length(l, sq, Flux::from_ratio(0.4), LengthModel::tangent);
  // tangent model is the flux derivative of L_J / l
  const double h = 1e-6;
  const double fd = (effective_inductance(sq, Flux::from_ratio(0.4 + h)) -
                     effective_inductance(sq, Flux::from_ratio(0.4 - h))) /
                    (2.0 * h * constants::flux_quantum * l);
  CHECK_THAT(tan.delta_d1, WithinRel(fd, 1e-7));
  CHECK(squid::linearize_length(l, sq, Flux::from_ratio(0.0)).delta_d1 == 0.0);
}
