#pragma once

#include <complex>
#include <vector>

#include "cqom/modes.hpp"
#include "cqom/params.hpp"

namespace cqom::membrane {

struct ScatteringAmplitudes {
  std::complex<double> r;
  std::complex<double> t;
};

struct ExpansionCoefficients {
  double omega0 = 0.0;           // rad/s
  double omega2 = 0.0;           // rad/s/m^2
  double omega4 = 0.0;           // rad/s/m^4
  double validity_extent = 0.0;  // m
  double refl_abs = 0.0;         // |r| at omega0

  double third_order(double xi) const { return omega0 + omega2 * xi * xi; }
  double fourth_order(double xi) const { return third_order(xi) + omega4 * xi * xi * xi * xi; }
};

ScatteringAmplitudes scattering(const CoupledPairSpec& spec, double omega);

std::vector<ModeSolution> solve_modes(const CoupledPairSpec& spec, int n_max);

// Symmetric-point frequency and even-order coefficients for a line of total length d.
ExpansionCoefficients expansion(double omega_c, double wave_speed, double length, int n);
ExpansionCoefficients expand_modes(const CoupledPairSpec& spec, int n);

double mode_function(const CoupledPairSpec& spec, const ModeSolution& mode, double x,
                     Side side = Side::automatic);
double mode_derivative(const CoupledPairSpec& spec, const ModeSolution& mode, double x,
                       Side side = Side::automatic);
// u(0+) - u(0-)
double mode_jump(const CoupledPairSpec& spec, const ModeSolution& mode);

// Normalization constant in the tangent form, evaluated from the secant expression directly.
double secant_normalization(const CoupledPairSpec& spec, const ModeSolution& mode);

// Quarter-wave frequencies of the isolated half of length d_alpha.
double decoupled_frequency(const CoupledPairSpec& spec, int k, bool left);

}  // namespace cqom::membrane
