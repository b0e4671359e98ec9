#pragma once

#include <string>
#include <vector>

#include "cqom/modes.hpp"
#include "cqom/params.hpp"
#include "cqom/squid.hpp"

namespace cqom::analog {

inline constexpr double kAdiabaticLimit = 0.1;
inline constexpr double kCurrentNodeTol = 1e-9;

struct SpectrumResult {
  CoupledPairSpec pair;
  std::vector<ModeSolution> modes;
  double epsilon = 0.0;  // max(k Delta d_L, k Delta d_R) at the highest returned mode
};

// Capacitively coupled pair with flux-exact effective lengths d_A/2 + L_J(bias +- delta)/l_A.
SpectrumResult spectrum(const AnalogSystemSpec& spec, Flux delta, int n_max);
SpectrumResult spectrum(const ResonatorASpec& res_a, Flux delta, int n_max);

// Resonator A with both SQUID ends kept as exact inductive/capacitive boundaries.
std::vector<ModeSolution> full_modes(const ResonatorASpec& res_a, Flux delta, int n_max);
double full_mode_function(const ResonatorASpec& res_a, Flux delta, const ModeSolution& mode, double x,
                          Side side = Side::automatic);
double full_mode_derivative(const ResonatorASpec& res_a, Flux delta, const ModeSolution& mode,
                            double x, Side side = Side::automatic);

squid::EffectiveLengthLinearization linearization(const ResonatorASpec& res_a);

struct QuadraticShift {
  double omega0 = 0.0;   // rad/s
  double kappa = 0.0;    // rad/s/Wb^2
  double delta_d1 = 0.0; // m/Wb

  // omega_n(delta) under the quadratic model
  double evaluate(int n, Flux delta) const;
};

QuadraticShift quadratic_shift(const ResonatorASpec& res_a, int n);
QuadraticShift quadratic_shift(const AnalogSystemSpec& spec, int n);

// Validity extent xi_n* of resonator A at zero flux variation.
double validity_extent(const ResonatorASpec& res_a, int n);

enum class Parity { even, odd };

struct ResonatorBMode {
  int index = 1;
  double omega = 0.0;           // rad/s
  Parity parity = Parity::odd;
  double zero_point_flux = 0.0; // Wb
  double length = 0.0;          // d_B
};

std::vector<ResonatorBMode> resonator_b_modes(const ResonatorBSpec& spec, int m_max);
ResonatorBMode resonator_b_mode(const ResonatorBSpec& spec, int m);
double b_mode_function(const ResonatorBMode& mode, double z);
double b_mode_derivative(const ResonatorBMode& mode, double z);
// Zero-point current profile I(z) = -(1/l_B) phi_zpf u'(z)
double zero_point_current(const ResonatorBSpec& spec, const ResonatorBMode& mode, double z);

enum class GateReason { none, odd_parity, current_node };

struct ParityGate {
  bool accepted = false;
  GateReason reason = GateReason::none;
};

ParityGate parity_gate(const ResonatorBMode& mode, const LoopGeometry& geometry);
std::string to_string(GateReason r);

double inductive_coupling(const AnalogSystemSpec& spec, int m, CouplingVariant variant);
double inductive_coupling(const AnalogSystemSpec& spec, int m);

double coupling_tensor(const AnalogSystemSpec& spec, int n, int m, int l);

struct CouplingReport {
  int n = 0;
  int m = 0;
  double omega_n0 = 0.0;          // rad/s
  double Omega_m = 0.0;           // rad/s
  double G_m = 0.0;               // Wb
  double kappa_n = 0.0;           // rad/s/Wb^2
  double g_nm = 0.0;              // rad/s
  double normalized = 0.0;        // g_nm / Omega_m
  double g_over_omega_Omega = 0.0;  // g_nm / (omega_n0 Omega_m), s
  double g_direct = 0.0;          // closed expression in terms of the circuit parameters
  double ratio_direct = 0.0;      // closed ratio expression for g/(omega Omega), s
  double x_star = 0.0;            // maximal quadrature amplitude, +inf when unconstrained
  std::vector<std::string> warnings;
};

CouplingReport coupling_strength(const AnalogSystemSpec& spec, int n, int m);

// Direct closed expressions, for cross-checks against the assembled pipeline.
double coupling_direct(const AnalogSystemSpec& spec, int n, int m);
double coupling_ratio_direct(const AnalogSystemSpec& spec, int n);

struct HamiltonianReport {
  double omega_n0 = 0.0;
  double Omega_m = 0.0;
  double g_nm = 0.0;
  double zpf_a = 0.0;  // Wb
  double zpf_b = 0.0;  // Wb
  double adiabatic_ratio = 0.0;
  bool adiabatic_warning = false;
};

HamiltonianReport hamiltonian_report(const AnalogSystemSpec& spec, int n, int m);

struct CavityBaseline {
  double omega_pp = 0.0;      // rad/s/m^2
  double g_over_Omega = 0.0;
};

CavityBaseline cavity_baseline(const CavityBaselineSpec& spec);
double cavity_coupling_ratio(double omega_pp, double mass, double mech_freq);

}  // namespace cqom::analog
