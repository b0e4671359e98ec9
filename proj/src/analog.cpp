#include "cqom/analog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cqom/errors.hpp"
#include "cqom/membrane.hpp"
#include "cqom/numeric.hpp"
#include "two_segment.hpp"

namespace cqom::analog {

namespace {

constexpr double kPi = constants::pi;

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

detail::TwoSegment full_segments(const ResonatorASpec& a, Flux delta) {
  const auto& line = a.line();
  const double cj = a.squid().junction_cap();
  const detail::EndLoad left{effective_inductance(a.squid(), a.bias() + delta), cj};
  const detail::EndLoad right{effective_inductance(a.squid(), a.bias() - delta), cj};
  const double half = 0.5 * line.length();
  return {half, half, a.coupling_cap(), line.cap_per_len(), line.ind_per_len(), left, right};
}

// sin(t) - t without cancellation for small t
double sin_minus_arg(double t) {
  if (std::abs(t) < 1e-2) {
    const double t2 = t * t;
    return -t * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
  }
  return std::sin(t) - t;
}

// Flux through the loop L from the Biot-Savart field of the zero-point current of mode m.
double biot_savart_flux(const AnalogSystemSpec& spec, const ResonatorBMode& mode) {
  const auto& g = spec.geometry();
  const double db = spec.res_b().line().length();
  const double lb = spec.res_b().line().ind_per_len();
  const double kappa = mode.index * kPi / db;
  const double amp = mode.zero_point_flux * std::sqrt(2.0) * kappa / lb;
  // I(z) = as sin(kappa z) + ac cos(kappa z)
  const double as = (mode.parity == Parity::even) ? amp : 0.0;
  const double ac = (mode.parity == Parity::even) ? 0.0 : -amp;
  auto current = [&](double z) { return as * std::sin(kappa * z) + ac * std::cos(kappa * z); };
  auto current_slope = [&](double z) {
    return kappa * (as * std::cos(kappa * z) - ac * std::sin(kappa * z));
  };
  auto remainder = [&](double z, double u) {
    const double c = -2.0 * std::pow(std::sin(0.5 * kappa * u), 2);
    const double sm = sin_minus_arg(kappa * u);
    const double sz = std::sin(kappa * z), cz = std::cos(kappa * z);
    return as * (sz * c + cz * sm) + ac * (cz * c - sz * sm);
  };
  const double half = 0.5 * db;
  auto field = [&](double z, double s) {
    const double u1 = -half - z, u2 = half - z;
    const double r1 = std::sqrt(s * s + u1 * u1), r2 = std::sqrt(s * s + u2 * u2);
    const double k0 = (u2 / r2 - u1 / r1) / s;
    const double k1 = -s / r2 + s / r1;
    auto integrand = [&](double zp) {
      const double u = zp - z;
      const double r2u = s * s + u * u;
      return s * remainder(z, u) / (r2u * std::sqrt(r2u));
    };
    std::vector<double> breaks{z};
    for (double f : {10.0, 1e3, 1e5}) {
      breaks.push_back(z - f * s);
      breaks.push_back(z + f * s);
    }
    const double lead = std::abs(current(z) * k0) + std::abs(current_slope(z) * k1);
    const double rest = numeric::integrate(integrand, -half, half, 1e-6, breaks, 1e-12 * lead);
    return constants::mu0 / (4.0 * kPi) * (current(z) * k0 + current_slope(z) * k1 + rest);
  };
  const double zc = -g.squid_position();
  const double w = g.width();
  auto over_s = [&](double z) {
    return numeric::integrate([&](double s) { return field(z, s); }, g.near_edge(), g.far_edge(), 1e-8);
  };
  return numeric::integrate(over_s, zc - 0.5 * w, zc + 0.5 * w, 1e-8);
}

double length_slope_scale(const ResonatorASpec& a) {
  if (a.length_model() == LengthModel::published) return 1.0;
  const auto pub = squid::linearize_length(a.line().ind_per_len(), a.squid(), a.bias(),
                                           LengthModel::published);
  const auto own = linearization(a);
  if (pub.delta_d1 == 0.0) return 1.0;
  return own.delta_d1 / pub.delta_d1;
}

}  // namespace

SpectrumResult spectrum(const ResonatorASpec& a, Flux delta, int n_max) {
  const double l = a.line().ind_per_len();
  const double ddl = effective_inductance(a.squid(), a.bias() + delta) / l;
  const double ddr = effective_inductance(a.squid(), a.bias() - delta) / l;
  const double half = 0.5 * a.line().length();
  CoupledPairSpec pair(half + ddl, half + ddr, a.coupling_cap(), a.line().cap_per_len(), l);
  SpectrumResult out{pair, membrane::solve_modes(pair, n_max), 0.0};
  if (!out.modes.empty()) out.epsilon = out.modes.back().wavenumber * std::max(ddl, ddr);
  return out;
}

SpectrumResult spectrum(const AnalogSystemSpec& spec, Flux delta, int n_max) {
  return spectrum(spec.res_a(), delta, n_max);
}

std::vector<ModeSolution> full_modes(const ResonatorASpec& a, Flux delta, int n_max) {
  if (n_max < 0) throw DegenerateSpec("n_max must be non-negative");
  return full_segments(a, delta).solve(n_max + 1);
}

double full_mode_function(const ResonatorASpec& a, Flux delta, const ModeSolution& mode, double x,
                          Side side) {
  return full_segments(a, delta).value(mode, x, side);
}

double full_mode_derivative(const ResonatorASpec& a, Flux delta, const ModeSolution& mode, double x,
                            Side side) {
  return full_segments(a, delta).derivative(mode, x, side);
}

squid::EffectiveLengthLinearization linearization(const ResonatorASpec& a) {
  return squid::linearize_length(a.line().ind_per_len(), a.squid(), a.bias(), a.length_model());
}

double QuadraticShift::evaluate(int n, Flux delta) const {
  const double d = delta.weber();
  return omega0 - parity_sign(n) * kappa * d * d;
}

QuadraticShift quadratic_shift(const ResonatorASpec& a, int n) {
  const double da = a.effective_total_length();
  const double v = a.line().wave_speed();
  const double wc = a.omega_c();
  QuadraticShift q;
  q.omega0 = membrane::expansion(wc, v, da, n).omega0;
  q.delta_d1 = linearization(a).delta_d1;
  q.kappa = q.omega0 * wc * q.delta_d1 * q.delta_d1 / (v * da);
  return q;
}

QuadraticShift quadratic_shift(const AnalogSystemSpec& spec, int n) {
  return quadratic_shift(spec.res_a(), n);
}

double validity_extent(const ResonatorASpec& a, int n) {
  return membrane::expansion(a.omega_c(), a.line().wave_speed(), a.effective_total_length(), n)
      .validity_extent;
}

ResonatorBMode resonator_b_mode(const ResonatorBSpec& spec, int m) {
  if (m < 1) throw DegenerateSpec("resonator B mode index must be at least 1");
  const auto& line = spec.line();
  ResonatorBMode mode;
  mode.index = m;
  mode.length = line.length();
  mode.omega = m * kPi * line.wave_speed() / line.length();
  mode.parity = (m % 2 == 0) ? Parity::even : Parity::odd;
  mode.zero_point_flux = std::sqrt(constants::hbar / (2.0 * mode.omega * spec.total_capacitance()));
  return mode;
}

std::vector<ResonatorBMode> resonator_b_modes(const ResonatorBSpec& spec, int m_max) {
  if (m_max < 1) throw DegenerateSpec("m_max must be at least 1");
  std::vector<ResonatorBMode> out;
  for (int m = 1; m <= m_max; ++m) out.push_back(resonator_b_mode(spec, m));
  return out;
}

static void check_b_domain(const ResonatorBMode& mode, double z) {
  const double half = 0.5 * mode.length;
  if (std::abs(z) > half * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "z = " << z << " outside [" << -half << ", " << half << "]";
    throw OutOfDomain(os.str());
  }
}

double b_mode_function(const ResonatorBMode& mode, double z) {
  check_b_domain(mode, z);
  const double arg = mode.index * kPi * z / mode.length;
  return std::sqrt(2.0) * (mode.parity == Parity::even ? std::cos(arg) : std::sin(arg));
}

double b_mode_derivative(const ResonatorBMode& mode, double z) {
  check_b_domain(mode, z);
  const double kappa = mode.index * kPi / mode.length;
  const double arg = kappa * z;
  return std::sqrt(2.0) * kappa * (mode.parity == Parity::even ? -std::sin(arg) : std::cos(arg));
}

double zero_point_current(const ResonatorBSpec& spec, const ResonatorBMode& mode, double z) {
  return -mode.zero_point_flux / spec.line().ind_per_len() * b_mode_derivative(mode, z);
}

ParityGate parity_gate(const ResonatorBMode& mode, const LoopGeometry& geometry) {
  if (mode.parity == Parity::odd) return {false, GateReason::odd_parity};
  const double peak = std::sqrt(2.0) * mode.index * kPi / mode.length;
  const double slope = std::abs(b_mode_derivative(mode, geometry.squid_position()));
  if (!(slope > kCurrentNodeTol * peak)) return {false, GateReason::current_node};
  return {true, GateReason::none};
}

std::string to_string(GateReason r) {
  switch (r) {
    case GateReason::none: return "accepted";
    case GateReason::odd_parity: return "odd parity";
    case GateReason::current_node: return "current node at the loop position";
  }
  return "accepted";
}

double inductive_coupling(const AnalogSystemSpec& spec, int m, CouplingVariant variant) {
  const ResonatorBMode mode = resonator_b_mode(spec.res_b(), m);
  const ParityGate gate = parity_gate(mode, spec.geometry());
  if (!gate.accepted) {
    std::ostringstream os;
    os << "mode m = " << m << " rejected: " << to_string(gate.reason);
    throw ParityRejected(os.str());
  }
  const auto& g = spec.geometry();
  const double db = spec.res_b().line().length();
  // loop L is oriented so that G_m > 0 where u_m'(-z0) > 0
  if (variant == CouplingVariant::biot_savart_numeric) return -biot_savart_flux(spec, mode);
  if (g.far_edge() >= 0.05 * db) {
    std::ostringstream os;
    os << "s2 = " << g.far_edge() << " m is not below 0.05 d_B";
    throw GeometryOutOfRegime(os.str());
  }
  // flux through loop L at -z0 from a straight wire carrying I(-z0)
  const double current = zero_point_current(spec.res_b(), mode, -g.squid_position());
  const double span = (variant == CouplingVariant::closed_form)
                          ? g.width() * std::log(g.far_edge() / g.near_edge())
                          : g.area() / g.near_edge();
  return -constants::mu0 / (2.0 * kPi) * span * current;
}

double inductive_coupling(const AnalogSystemSpec& spec, int m) {
  return inductive_coupling(spec, m, spec.coupling_variant());
}

double coupling_tensor(const AnalogSystemSpec& spec, int n, int m, int l) {
  const QuadraticShift q = quadratic_shift(spec, n);
  const double gm = inductive_coupling(spec, m);
  const double gl = (l == m) ? gm : inductive_coupling(spec, l);
  return parity_sign(n) * q.kappa * gm * gl;
}

double coupling_direct(const AnalogSystemSpec& spec, int n, int m) {
  const auto& a = spec.res_a();
  const double da = a.effective_total_length();
  const double w0 = membrane::expansion(a.omega_c(), a.line().wave_speed(), da, n).omega0;
  const double gm = inductive_coupling(spec, m);
  const double t = std::tan(kPi * a.bias().ratio());
  const double f = gm * constants::flux_quantum /
                   (4.0 * kPi * a.line().ind_per_len() * a.squid().josephson_energy());
  const double s = length_slope_scale(a);
  return parity_sign(n) * w0 * a.line().cap_per_len() / (a.coupling_cap() * da) * f * f * t * t * s * s;
}

double coupling_ratio_direct(const AnalogSystemSpec& spec, int n) {
  const auto& a = spec.res_a();
  const auto& b = spec.res_b().line();
  const auto& g = spec.geometry();
  const double da = a.effective_total_length();
  const double phi0 = constants::flux_quantum;
  const double t = std::tan(kPi * a.bias().ratio());
  const double lj = a.squid().lj0() / (a.line().ind_per_len() * da);
  const double area = g.area() / (b.length() * g.near_edge());
  const double mu = constants::mu0 / b.ind_per_len();
  const double s = length_slope_scale(a);
  return parity_sign(n) * constants::hbar * b.ind_per_len() * b.length() / (phi0 * phi0) *
         (a.line().cap_per_len() * da / a.coupling_cap()) * lj * lj * area * area * mu * mu * t * t *
         s * s;
}

CouplingReport coupling_strength(const AnalogSystemSpec& spec, int n, int m) {
  CouplingReport r;
  r.n = n;
  r.m = m;
  const QuadraticShift q = quadratic_shift(spec, n);
  const ResonatorBMode mode = resonator_b_mode(spec.res_b(), m);
  r.omega_n0 = q.omega0;
  r.Omega_m = mode.omega;
  r.G_m = inductive_coupling(spec, m);
  r.kappa_n = q.kappa;
  r.g_nm = parity_sign(n) * q.kappa * r.G_m * r.G_m;
  r.normalized = r.g_nm / r.Omega_m;
  r.g_over_omega_Omega = r.g_nm / (r.omega_n0 * r.Omega_m);
  r.g_direct = coupling_direct(spec, n, m);
  r.ratio_direct = coupling_ratio_direct(spec, n);
  const double path = std::abs(q.delta_d1 * r.G_m);
  r.x_star = (path == 0.0) ? std::numeric_limits<double>::infinity()
                           : validity_extent(spec.res_a(), n) / path;
  r.warnings = spec.warnings();
  if (r.Omega_m / r.omega_n0 > kAdiabaticLimit) {
    std::ostringstream os;
    os << "Omega_m/omega_n = " << r.Omega_m / r.omega_n0 << " exceeds " << kAdiabaticLimit;
    r.warnings.push_back(os.str());
  }
  return r;
}

HamiltonianReport hamiltonian_report(const AnalogSystemSpec& spec, int n, int m) {
  const CouplingReport c = coupling_strength(spec, n, m);
  HamiltonianReport h;
  h.omega_n0 = c.omega_n0;
  h.Omega_m = c.Omega_m;
  h.g_nm = c.g_nm;
  h.zpf_a = std::sqrt(constants::hbar / (2.0 * c.omega_n0 * spec.res_a().total_capacitance()));
  h.zpf_b = resonator_b_mode(spec.res_b(), m).zero_point_flux;
  h.adiabatic_ratio = c.Omega_m / c.omega_n0;
  h.adiabatic_warning = h.adiabatic_ratio > kAdiabaticLimit;
  return h;
}

double cavity_coupling_ratio(double omega_pp, double mass, double mech_freq) {
  return constants::hbar * omega_pp / (4.0 * mass * mech_freq * mech_freq);
}

CavityBaseline cavity_baseline(const CavityBaselineSpec& spec) {
  CavityBaseline b;
  const double lambda = spec.wavelength();
  b.omega_pp = 16.0 * kPi * kPi * constants::speed_of_light / (spec.cavity_len() * lambda * lambda) *
               std::sqrt(2.0 * (1.0 - spec.reflectivity()));
  b.g_over_Omega = cavity_coupling_ratio(b.omega_pp, spec.mass(), spec.mech_freq());
  return b;
}

}  // namespace cqom::analog
