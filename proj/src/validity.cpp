#include "cqom/validity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cqom/errors.hpp"

namespace cqom::validity {

AmplitudeBound maximal_amplitude(const AnalogSystemSpec& spec, int n, int m) {
  const double g = analog::inductive_coupling(spec, m);
  const double dd1 = analog::linearization(spec.res_a()).delta_d1;
  const double path = std::abs(dd1 * g);
  if (path == 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {analog::validity_extent(spec.res_a(), n) / path, false};
}

StateSpec StateSpec::vacuum(double mode_omega) {
  StateSpec s;
  s.mode_omega = mode_omega;
  return s;
}

StateSpec StateSpec::thermal(double temperature, double mode_omega) {
  StateSpec s;
  s.kind = StateKind::thermal;
  s.temperature = temperature;
  s.mode_omega = mode_omega;
  return s;
}

StateSpec StateSpec::coherent(std::complex<double> beta, double mode_omega) {
  StateSpec s;
  s.kind = StateKind::coherent;
  s.beta = beta;
  s.mode_omega = mode_omega;
  return s;
}

QuadratureStats quadrature_stats(const StateSpec& state) {
  QuadratureStats q;
  switch (state.kind) {
    case StateKind::vacuum:
      break;
    case StateKind::thermal: {
      if (!(state.temperature > 0.0)) {
        std::ostringstream os;
        os << "thermal state needs T > 0 (got " << state.temperature << ")";
        throw NonPositiveTemperature(os.str());
      }
      const double x = constants::hbar * state.mode_omega / (2.0 * constants::boltzmann * state.temperature);
      q.fluctuation = std::sqrt(1.0 / std::tanh(x));
      break;
    }
    case StateKind::coherent:
      q.mean = 2.0 * state.beta.real();
      q.max_over_cycle = 2.0 * std::abs(state.beta);
      break;
  }
  return q;
}

CheckResult check_state(const QuadratureStats& stats, AmplitudeBound x_star) {
  if (x_star.unconstrained) return {true, std::numeric_limits<double>::infinity()};
  return check_state(stats, x_star.value);
}

CheckResult check_state(const QuadratureStats& stats, double x_star) {
  const double margin = x_star - (stats.max_over_cycle + stats.fluctuation);
  return {margin >= 0.0, margin};
}

PhotonBound max_photon_number(BoundKind kind, double x_star, double mode_omega) {
  if (!(x_star >= 1.0)) {
    std::ostringstream os;
    os << "X* = " << x_star << " is below the vacuum fluctuation level";
    throw SubVacuumBound(os.str());
  }
  PhotonBound b;
  if (kind == BoundKind::coherent) {
    b.n_max = 0.25 * (x_star - 1.0) * (x_star - 1.0);
    return b;
  }
  const double y = x_star * x_star;
  b.n_max = 0.5 * (y - 1.0);
  if (y > 1.0) {
    // coth(hbar w / 2 k T) = y
    const double arg = 0.5 * std::log((y + 1.0) / (y - 1.0));
    b.t_max = constants::hbar * mode_omega / (2.0 * constants::boltzmann * arg);
  }
  return b;
}

}  // namespace cqom::validity
