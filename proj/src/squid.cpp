#include "cqom/squid.hpp"

#include <cmath>
#include <sstream>

#include "cqom/errors.hpp"
#include "cqom/numeric.hpp"

namespace cqom::squid {

namespace {

constexpr double kPi = constants::pi;

struct Line {
  double d, v, dd, lj, cj;

  explicit Line(const TunableResonatorSpec& s)
      : d(s.line().length()), v(s.line().wave_speed()),
        dd(s.josephson_inductance() / s.line().ind_per_len()), lj(s.josephson_inductance()),
        cj(s.squid().junction_cap()) {}

  double end_phase(double omega) const {
    const double k = omega / v;
    return std::atan2(k * dd, 1.0 - omega * omega * lj * cj);
  }
  double phase(double omega) const { return omega / v * d + end_phase(omega); }
};

}  // namespace

std::vector<ModeSolution> solve_modes(const TunableResonatorSpec& spec, int n_max,
                                      SolveOptions options) {
  if (n_max < 1) throw DegenerateSpec("n_max must be at least 1");
  const Line line(spec);
  const double omega_j = spec.plasma_frequency();
  std::vector<ModeSolution> out;
  for (int n = 1; n <= n_max; ++n) {
    const double target = n * kPi;
    auto f = [&](double w) { return line.phase(w) - target; };
    const double lo = (n - 1) * kPi * line.v / line.d;
    const double hi = n * kPi * line.v / line.d;
    const double omega = numeric::refine_root(f, lo, hi, lo == 0.0 ? -target : f(lo), f(hi));
    const double eta = omega / omega_j;
    if (eta >= 1.0 && !options.include_plasma_branch) break;
    ModeSolution m;
    m.index = n;
    m.omega = omega;
    const double k = omega / line.v;
    m.wavenumber = k;
    m.eta = eta;
    m.effective_length_unreliable = eta > kUnreliableEta;
    m.residual = std::abs(std::sin(line.phase(omega)));
    const double theta = line.end_phase(omega);
    m.left_end_phase = theta;
    const double c0 = spec.line().cap_per_len();
    const double integral = 0.5 * line.d - std::sin(2.0 * k * line.d) / (4.0 * k);
    const double s = std::sin(k * line.d);
    double amp = std::sqrt(spec.total_capacitance() / (c0 * integral + line.cj * s * s));
    const double c = std::cos(k * line.d);
    if (c < 0.0) amp = -amp;
    m.left_amplitude = amp;
    m.normalization = amp * c;
    out.push_back(m);
  }
  return out;
}

double effective_length(const TunableResonatorSpec& spec) {
  return spec.josephson_inductance() / spec.line().ind_per_len();
}

std::vector<std::pair<int, double>> approx_modes(const TunableResonatorSpec& spec, int n_max) {
  const double len = spec.line().length() + effective_length(spec);
  std::vector<std::pair<int, double>> out;
  for (int n = 1; n <= n_max; ++n) out.emplace_back(n, n * kPi / len);
  return out;
}

EffectiveLengthLinearization linearize_length(double ind_per_len, const Squid& squid, Flux bias,
                                              LengthModel model) {
  if (!(ind_per_len > 0.0)) throw InvalidSpec("inductance per length must be positive");
  const double c = flux_cosine(bias);
  const double tan_b = std::sin(kPi * bias.ratio()) / c;
  EffectiveLengthLinearization lin;
  lin.bias = bias;
  lin.model = model;
  if (model == LengthModel::published) {
    const double p = constants::reduced_flux_quantum;
    const double scale = ind_per_len * squid.josephson_energy();
    lin.delta_d0 = p * p / scale;
    lin.delta_d1 = 0.5 * p / scale * tan_b;
  } else {
    lin.delta_d0 = effective_inductance(squid, bias) / ind_per_len;
    lin.delta_d1 = lin.delta_d0 * kPi / constants::flux_quantum * tan_b;
  }
  return lin;
}

double continued_mode(const TunableResonatorSpec& spec, const ModeSolution& mode, double x) {
  return mode.left_amplitude * std::sin(mode.wavenumber * (x - spec.line().length()));
}

double mode_function(const TunableResonatorSpec& spec, const ModeSolution& mode, double x) {
  const double d = spec.line().length();
  if (x < -1e-12 * d || x > d * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "x = " << x << " outside [0, " << d << "]";
    throw OutOfDomain(os.str());
  }
  return continued_mode(spec, mode, x);
}

double mode_derivative(const TunableResonatorSpec& spec, const ModeSolution& mode, double x) {
  const double d = spec.line().length();
  if (x < -1e-12 * d || x > d * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "x = " << x << " outside [0, " << d << "]";
    throw OutOfDomain(os.str());
  }
  return mode.left_amplitude * mode.wavenumber * std::cos(mode.wavenumber * (x - d));
}

double virtual_end(const TunableResonatorSpec&, const ModeSolution& mode) {
  return -mode.left_end_phase / mode.wavenumber;
}

double secant_normalization(const TunableResonatorSpec& spec, const ModeSolution& mode) {
  const double k = mode.wavenumber;
  const double d = spec.line().length();
  const double c = std::cos(k * d);
  if (std::abs(c) < 1e-10) {
    std::ostringstream os;
    os << "mode " << mode.index << " sits on a tangent pole";
    throw NearPole(os.str());
  }
  const double eta2 = mode.eta * mode.eta;
  const double lj = spec.josephson_inductance();
  const double num = 2.0 * (1.0 + spec.squid().junction_cap() / spec.line().total_capacitance());
  const double den = 1.0 / (c * c) +
                     lj / (spec.line().ind_per_len() * d) * (1.0 + eta2) / ((1.0 - eta2) * (1.0 - eta2));
  return std::sqrt(num / den);
}

}  // namespace cqom::squid
