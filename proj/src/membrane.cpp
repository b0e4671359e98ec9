#include "cqom/membrane.hpp"

#include <cmath>
#include <sstream>

#include "cqom/errors.hpp"
#include "cqom/numeric.hpp"
#include "two_segment.hpp"

namespace cqom::membrane {

namespace {

constexpr double kPi = constants::pi;

detail::TwoSegment segments(const CoupledPairSpec& s) {
  return {s.left_len(), s.right_len(), s.coupling_cap(), s.cap_per_len(), s.ind_per_len()};
}

double refl_abs(double omega_c, double omega) {
  const double x = omega_c / (2.0 * omega);
  return x / std::sqrt(1.0 + x * x);
}

}  // namespace

ScatteringAmplitudes scattering(const CoupledPairSpec& spec, double omega) {
  if (!(omega > 0.0)) throw NonPositiveFrequency("scattering needs omega > 0");
  const std::complex<double> ix(0.0, spec.omega_c() / (2.0 * omega));
  const std::complex<double> i(0.0, 1.0);
  return {ix / (1.0 + ix), -i / (1.0 + ix)};
}

std::vector<ModeSolution> solve_modes(const CoupledPairSpec& spec, int n_max) {
  if (n_max < 0) throw DegenerateSpec("n_max must be non-negative");
  return segments(spec).solve(n_max + 1);
}

ExpansionCoefficients expansion(double omega_c, double v, double d, int n) {
  if (n < 0) throw DegenerateSpec("mode index must be non-negative");
  ExpansionCoefficients e;
  const double top = (n + 1) * kPi * v / d;
  if (n % 2 == 1) {
    e.omega0 = n * kPi * v / d;
  } else {
    // omega = (n+1) pi v/d - 2 (v/d) acos|r(omega)|; the map is monotone so the fixed point is bracketed
    auto g = [&](double w) { return w - top + 2.0 * v / d * std::acos(refl_abs(omega_c, w)); };
    const double lo = top * 1e-15;
    try {
      e.omega0 = numeric::refine_root(g, lo, top);
    } catch (const RootNotBracketed& ex) {
      throw FixedPointNotConverged(ex.what());
    }
  }
  e.refl_abs = refl_abs(omega_c, e.omega0);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double w0 = e.omega0;
  e.omega2 = -sign / d * (w0 * omega_c / v);
  e.omega4 = sign / d * (w0 * omega_c * omega_c * omega_c / (12.0 * v * v * v)) *
             (1.0 + 4.0 * w0 * w0 / (omega_c * omega_c));
  const double denom = w0 * omega_c * omega_c * omega_c + 4.0 * w0 * w0 * w0 * omega_c;
  e.validity_extent = v * std::pow(0.12, 0.25) / std::pow(denom, 0.25);
  return e;
}

ExpansionCoefficients expand_modes(const CoupledPairSpec& spec, int n) {
  return expansion(spec.omega_c(), spec.wave_speed(), spec.total_length(), n);
}

double mode_function(const CoupledPairSpec& spec, const ModeSolution& mode, double x, Side side) {
  return segments(spec).value(mode, x, side);
}

double mode_derivative(const CoupledPairSpec& spec, const ModeSolution& mode, double x, Side side) {
  return segments(spec).derivative(mode, x, side);
}

double mode_jump(const CoupledPairSpec& spec, const ModeSolution& mode) {
  const auto seg = segments(spec);
  return seg.value(mode, 0.0, Side::right) - seg.value(mode, 0.0, Side::left);
}

double secant_normalization(const CoupledPairSpec& spec, const ModeSolution& mode) {
  const double k = mode.wavenumber;
  const double d = spec.total_length();
  const double cl = std::cos(k * spec.left_len());
  const double cr = std::cos(k * spec.right_len());
  if (std::abs(cl) < 1e-10 || std::abs(cr) < 1e-10) {
    std::ostringstream os;
    os << "mode " << mode.index << " sits on a tangent pole (cos = " << cl << ", " << cr << ")";
    throw NearPole(os.str());
  }
  const double v = spec.wave_speed();
  const double wc = spec.omega_c();
  const double num = 2.0 * (1.0 + v / (wc * d));
  const double den = spec.left_len() / d / (cl * cl) + spec.right_len() / d / (cr * cr) +
                     wc / (k * k * v * d);
  return std::sqrt(num / den);
}

double decoupled_frequency(const CoupledPairSpec& spec, int k, bool left) {
  const double len = left ? spec.left_len() : spec.right_len();
  return kPi * spec.wave_speed() / len * (k + 0.5);
}

}  // namespace cqom::membrane
