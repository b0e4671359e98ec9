#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cqom/errors.hpp"
#include "cqom/membrane.hpp"
#include "cqom/numeric.hpp"
#include "oracle.hpp"

using namespace cqom;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double overlap(const CoupledPairSpec& s, const ModeSolution& a, const ModeSolution& b) {
  auto left = [&](double x) { return membrane::mode_function(s, a, x, Side::left) * membrane::mode_function(s, b, x, Side::left); };
  auto right = [&](double x) { return membrane::mode_function(s, a, x, Side::right) * membrane::mode_function(s, b, x, Side::right); };
  const double line = s.cap_per_len() * (numeric::integrate(left, -s.left_len(), 0.0, 1e-12) +
                                         numeric::integrate(right, 0.0, s.right_len(), 1e-12));
  return line + s.coupling_cap() * membrane::mode_jump(s, a) * membrane::mode_jump(s, b);
}

}  // namespace

TEST_CASE("symmetric pair at omega_c = 10 reproduces the reference roots", "[membrane]") {
  const auto modes = membrane::solve_modes(CoupledPairSpec::dimensionless(10.0, 0.0), 5);
  const double ref[] = {2.2844537096, M_PI, 7.4636761720, 3 * M_PI, 13.2862415040, 5 * M_PI};
  REQUIRE(modes.size() == 6);
  for (int n = 0; n < 6; ++n) {
    CHECK(modes[n].index == n);
    CHECK_THAT(modes[n].omega, WithinRel(ref[n], 1e-9));
    CHECK(modes[n].residual < 1e-12);
  }
}

TEST_CASE("roots match an independent bisection oracle", "[membrane][oracle]") {
  for (double wc : {0.1, 1.0, 10.0, 100.0}) {
    for (double xi : {0.0, 0.07, -0.2, 0.31}) {
      const auto spec = CoupledPairSpec::dimensionless(wc, xi);
      const auto modes = membrane::solve_modes(spec, 5);
      const auto ref = oracle::pair_roots(wc, spec.left_len(), spec.right_len(), 6);
      REQUIRE(ref.size() == 6);
      for (int n = 0; n < 6; ++n) {
        INFO("omega_c = " << wc << ", xi = " << xi << ", n = " << n);
        CHECK_THAT(modes[n].omega, WithinRel(ref[n], 1e-9));
      }
    }
  }
}

TEST_CASE("SI pair agrees with the dimensionless pair", "[membrane]") {
  const TransmissionLine line(0.02, 1.46e-10, 4.57e-7);
  const auto si = CoupledPairSpec::centered(line, 1e-15, 0.0);
  const auto unit = CoupledPairSpec::dimensionless(si.omega_c() * line.length() / line.wave_speed(), 0.0);
  const auto a = membrane::solve_modes(si, 4);
  const auto b = membrane::solve_modes(unit, 4);
  for (int n = 0; n < 5; ++n) {
    CHECK_THAT(a[n].omega * line.length() / line.wave_speed(), WithinRel(b[n].omega, 1e-11));
  }
}

TEST_CASE("scattering amplitudes are unitary", "[membrane][property]") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> logw(-3.0, 4.0);
  const auto spec = CoupledPairSpec::dimensionless(10.0, 0.0);
  for (int i = 0; i < 2000; ++i) {
    const double w = std::pow(10.0, logw(rng));
    const auto s = membrane::scattering(spec, w);
    CHECK_THAT(std::norm(s.r) + std::norm(s.t), WithinAbs(1.0, 1e-12));
  }
  CHECK_THROWS_AS(membrane::scattering(spec, 0.0), NonPositiveFrequency);
}

TEST_CASE("spectrum is even in the displacement", "[membrane][property]") {
  for (double wc : {1.0, 10.0, 100.0}) {
    for (double xi : {0.013, 0.1, 0.27, 0.44}) {
      const auto p = membrane::solve_modes(CoupledPairSpec::dimensionless(wc, xi), 5);
      const auto m = membrane::solve_modes(CoupledPairSpec::dimensionless(wc, -xi), 5);
      for (int n = 0; n < 6; ++n) CHECK_THAT(p[n].omega, WithinRel(m[n].omega, 1e-10));
    }
  }
}

TEST_CASE("mode functions are orthonormal with the coupling capacitor", "[membrane][quadrature]") {
  for (double wc : {0.1, 10.0, 1000.0}) {
    for (double xi : {0.0, 0.1, -0.3}) {
      const auto spec = CoupledPairSpec::dimensionless(wc, xi);
      const auto modes = membrane::solve_modes(spec, 5);
      const double cs = spec.total_capacitance();
      for (int a = 0; a < 6; ++a) {
        for (int b = a; b < 6; ++b) {
          INFO("omega_c = " << wc << ", xi = " << xi << ", (" << a << ", " << b << ")");
          CHECK_THAT(overlap(spec, modes[a], modes[b]) / cs, WithinAbs(a == b ? 1.0 : 0.0, 1e-6));
        }
      }
    }
  }
}

TEST_CASE("secant normalization agrees with the solved amplitude", "[membrane]") {
  const auto spec = CoupledPairSpec::dimensionless(10.0, 0.17);
  for (const auto& m : membrane::solve_modes(spec, 5)) {
    CHECK_THAT(membrane::secant_normalization(spec, m), WithinRel(m.normalization, 1e-9));
  }
  // odd modes of the symmetric pair sit on the tangent pole
  const auto sym = CoupledPairSpec::dimensionless(10.0, 0.0);
  const auto modes = membrane::solve_modes(sym, 1);
  CHECK_THROWS_AS(membrane::secant_normalization(sym, modes[1]), NearPole);
  CHECK(std::isfinite(modes[1].normalization));
}

TEST_CASE("expansion coefficients", "[membrane]") {
  for (double wc : {1.0, 10.0, 100.0}) {
    const auto spec = CoupledPairSpec::dimensionless(wc, 0.0);
    const auto modes = membrane::solve_modes(spec, 5);
    for (int n = 0; n < 6; ++n) {
      const auto e = membrane::expand_modes(spec, n);
      CHECK_THAT(e.omega0, WithinRel(modes[n].omega, 1e-10));
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK_THAT(e.omega2, WithinRel(-sign * e.omega0 * wc, 1e-12));
      CHECK_THAT(std::abs(e.omega4) * std::pow(e.validity_extent, 4), WithinRel(1e-2, 1e-10));
    }
  }
}

TEST_CASE("large coupling frequency approaches the decoupled quarter-wave modes", "[membrane]") {
  const auto spec = CoupledPairSpec::dimensionless(1e6, 0.0);
  const auto modes = membrane::solve_modes(spec, 3);
  CHECK_THAT(modes[0].omega, WithinRel(membrane::decoupled_frequency(spec, 0, true), 1e-5));
  CHECK_THAT(modes[1].omega, WithinRel(membrane::decoupled_frequency(spec, 0, false), 1e-5));
  CHECK_THAT(modes[2].omega, WithinRel(membrane::decoupled_frequency(spec, 1, true), 1e-5));
}

TEST_CASE("mode functions reject points outside the line", "[membrane]") {
  const auto spec = CoupledPairSpec::dimensionless(10.0, 0.1);
  const auto m = membrane::solve_modes(spec, 0).front();
  CHECK_THROWS_AS(membrane::mode_function(spec, m, -0.61), OutOfDomain);
  CHECK_THROWS_AS(membrane::mode_function(spec, m, 0.41), OutOfDomain);
  CHECK_THAT(membrane::mode_function(spec, m, -0.6), WithinAbs(0.0, 1e-12));
  CHECK_THAT(membrane::mode_function(spec, m, 0.4), WithinAbs(0.0, 1e-12));
}

TEST_CASE("invalid pair specs are rejected", "[membrane]") {
  CHECK_THROWS_AS(CoupledPairSpec(0.0, 1.0, 1.0, 1.0, 1.0), InvalidSpec);
  CHECK_THROWS_AS(CoupledPairSpec(1.0, 1.0, -1.0, 1.0, 1.0), InvalidSpec);
}
