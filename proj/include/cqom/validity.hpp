#pragma once

#include <complex>

#include "cqom/analog.hpp"
#include "cqom/params.hpp"

namespace cqom::validity {

struct AmplitudeBound {
  double value = 0.0;  // +inf when unconstrained
  bool unconstrained = false;
};

AmplitudeBound maximal_amplitude(const AnalogSystemSpec& spec, int n, int m);

enum class StateKind { vacuum, thermal, coherent };

struct StateSpec {
  StateKind kind = StateKind::vacuum;
  double temperature = 0.0;           // K, thermal only
  std::complex<double> beta{0.0, 0.0};  // coherent only
  double mode_omega = 0.0;            // rad/s of the resonator-B mode

  static StateSpec vacuum(double mode_omega);
  static StateSpec thermal(double temperature, double mode_omega);
  static StateSpec coherent(std::complex<double> beta, double mode_omega);
};

struct QuadratureStats {
  double mean = 0.0;
  double fluctuation = 1.0;
  double max_over_cycle = 0.0;  // max_t |<X(t)>|
};

QuadratureStats quadrature_stats(const StateSpec& state);

struct CheckResult {
  bool pass = false;
  double margin = 0.0;
};

CheckResult check_state(const QuadratureStats& stats, AmplitudeBound x_star);
CheckResult check_state(const QuadratureStats& stats, double x_star);

enum class BoundKind { thermal, coherent };

struct PhotonBound {
  double n_max = 0.0;
  double t_max = 0.0;  // K, thermal only
};

PhotonBound max_photon_number(BoundKind kind, double x_star, double mode_omega);

}  // namespace cqom::validity
