#pragma once

#include <utility>
#include <vector>

#include "cqom/modes.hpp"
#include "cqom/params.hpp"

namespace cqom::squid {

inline constexpr double kUnreliableEta = 0.3;

struct EffectiveLengthLinearization {
  double delta_d0 = 0.0;  // m
  double delta_d1 = 0.0;  // m/Wb
  Flux bias;
  LengthModel model = LengthModel::published;

  double evaluate(Flux delta) const { return delta_d0 + delta_d1 * delta.weber(); }
};

struct SolveOptions {
  bool include_plasma_branch = false;
};

std::vector<ModeSolution> solve_modes(const TunableResonatorSpec& spec, int n_max,
                                      SolveOptions options = {});

double effective_length(const TunableResonatorSpec& spec);

// (n, k_n) with k_n = n pi / (d + Delta d)
std::vector<std::pair<int, double>> approx_modes(const TunableResonatorSpec& spec, int n_max);

EffectiveLengthLinearization linearize_length(double ind_per_len, const Squid& squid, Flux bias,
                                              LengthModel model = LengthModel::published);

double mode_function(const TunableResonatorSpec& spec, const ModeSolution& mode, double x);
double mode_derivative(const TunableResonatorSpec& spec, const ModeSolution& mode, double x);
// Analytic continuation of the mode to x < 0 (no domain check).
double continued_mode(const TunableResonatorSpec& spec, const ModeSolution& mode, double x);
double virtual_end(const TunableResonatorSpec& spec, const ModeSolution& mode);

// Normalization constant from the secant expression, for cross-checks.
double secant_normalization(const TunableResonatorSpec& spec, const ModeSolution& mode);

}  // namespace cqom::squid
