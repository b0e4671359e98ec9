#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace cqom {

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double planck = 6.62607015e-34;           // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);  // Wb
inline constexpr double mu0 = 4.0e-7 * pi;                 // H/m
inline constexpr double boltzmann = 1.380649e-23;          // J/K
inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double reduced_flux_quantum = flux_quantum / (2.0 * pi);
}  // namespace constants

struct PhysicalConstants {
  double hbar = constants::hbar;
  double flux_quantum = constants::flux_quantum;
  double mu0 = constants::mu0;
  double boltzmann = constants::boltzmann;
};

inline constexpr PhysicalConstants physical_constants() { return {}; }

// External flux, stored as Phi/Phi0.
class Flux {
public:
  constexpr Flux() = default;
  static constexpr Flux from_ratio(double r) { return Flux(r); }
  static constexpr Flux from_weber(double wb) { return Flux(wb / constants::flux_quantum); }
  constexpr double ratio() const { return ratio_; }
  constexpr double weber() const { return ratio_ * constants::flux_quantum; }
  constexpr Flux operator+(Flux o) const { return Flux(ratio_ + o.ratio_); }
  constexpr Flux operator-(Flux o) const { return Flux(ratio_ - o.ratio_); }
  constexpr Flux operator-() const { return Flux(-ratio_); }

private:
  constexpr explicit Flux(double r) : ratio_(r) {}
  double ratio_ = 0.0;
};

// Half-flux guard shared by every flux-dependent quantity.
inline constexpr double kHalfFluxGuard = 1e-12;
double flux_cosine(Flux phi);

class TransmissionLine {
public:
  TransmissionLine(double length, double cap_per_len, double ind_per_len);
  double length() const { return length_; }
  double cap_per_len() const { return cap_; }
  double ind_per_len() const { return ind_; }
  double wave_speed() const;
  double impedance() const;
  double total_capacitance() const { return cap_ * length_; }
  TransmissionLine with_length(double length) const { return {length, cap_, ind_}; }

private:
  double length_, cap_, ind_;
};

struct LineQuantities {
  double wave_speed;
  double impedance;
};

LineQuantities derived_line_quantities(const TransmissionLine& line);

class Squid {
public:
  Squid(double josephson_energy, double junction_cap);
  double josephson_energy() const { return ej0_; }
  double junction_cap() const { return cj_; }
  double lj0() const;

private:
  double ej0_, cj_;
};

double effective_inductance(const Squid& squid, Flux phi);
double plasma_frequency(const Squid& squid, Flux phi);

class CoupledPairSpec {
public:
  CoupledPairSpec(double left_len, double right_len, double coupling_cap, double cap_per_len,
                  double ind_per_len);
  // Unit system l0 = c0 = d = 1, so v0 = Z0 = 1 and omega_c is in units of v0/d.
  static CoupledPairSpec dimensionless(double omega_c, double xi);
  static CoupledPairSpec centered(const TransmissionLine& line, double coupling_cap, double xi);

  double left_len() const { return dl_; }
  double right_len() const { return dr_; }
  double coupling_cap() const { return cc_; }
  double cap_per_len() const { return cap_; }
  double ind_per_len() const { return ind_; }
  double total_length() const { return dl_ + dr_; }
  double displacement() const { return 0.5 * (dl_ - dr_); }
  double wave_speed() const;
  double impedance() const;
  double omega_c() const;
  double total_capacitance() const { return cap_ * total_length() + cc_; }
  CoupledPairSpec with_lengths(double left, double right) const;

private:
  double dl_, dr_, cc_, cap_, ind_;
};

class TunableResonatorSpec {
public:
  TunableResonatorSpec(TransmissionLine line, Squid squid, Flux flux);
  const TransmissionLine& line() const { return line_; }
  const Squid& squid() const { return squid_; }
  Flux flux() const { return flux_; }
  double josephson_inductance() const { return effective_inductance(squid_, flux_); }
  double plasma_frequency() const { return cqom::plasma_frequency(squid_, flux_); }
  double total_capacitance() const { return line_.total_capacitance() + squid_.junction_cap(); }

private:
  TransmissionLine line_;
  Squid squid_;
  Flux flux_;
};

// published: D_A and the flux slope from the reference linearization
// tangent: first-order Taylor expansion of L_J(Phi)/l0 about the bias
enum class LengthModel { published, tangent };

enum class CouplingVariant { closed_form, simplified, biot_savart_numeric };

std::string to_string(LengthModel m);
std::string to_string(CouplingVariant v);
LengthModel length_model_from_string(const std::string& s);
CouplingVariant coupling_variant_from_string(const std::string& s);

class ResonatorASpec {
public:
  ResonatorASpec(TransmissionLine line, double coupling_cap, Squid squid, Flux bias,
                 LengthModel model = LengthModel::published);
  const TransmissionLine& line() const { return line_; }
  double coupling_cap() const { return cc_; }
  const Squid& squid() const { return squid_; }
  Flux bias() const { return bias_; }
  LengthModel length_model() const { return model_; }
  double omega_c() const;
  double effective_total_length() const;
  double total_capacitance() const;
  ResonatorASpec with_bias(Flux bias) const { return {line_, cc_, squid_, bias, model_}; }
  ResonatorASpec with_coupling_cap(double cc) const { return {line_, cc, squid_, bias_, model_}; }
  ResonatorASpec with_length_model(LengthModel m) const { return {line_, cc_, squid_, bias_, m}; }

private:
  TransmissionLine line_;
  double cc_;
  Squid squid_;
  Flux bias_;
  LengthModel model_;
};

class ResonatorBSpec {
public:
  explicit ResonatorBSpec(TransmissionLine line) : line_(line) {}
  const TransmissionLine& line() const { return line_; }
  double total_capacitance() const { return line_.total_capacitance(); }

private:
  TransmissionLine line_;
};

class LoopGeometry {
public:
  LoopGeometry(double squid_position, double near_edge, double far_edge, double width);
  double squid_position() const { return z0_; }
  double near_edge() const { return s1_; }
  double far_edge() const { return s2_; }
  double width() const { return w_; }
  double area() const { return w_ * (s2_ - s1_); }

private:
  double z0_, s1_, s2_, w_;
};

class CavityBaselineSpec {
public:
  CavityBaselineSpec(double cavity_len, double reflectivity, double wavelength, double mass,
                     double mech_freq);
  double cavity_len() const { return len_; }
  double reflectivity() const { return r_; }
  double wavelength() const { return lambda_; }
  double mass() const { return mass_; }
  double mech_freq() const { return omega_; }

private:
  double len_, r_, lambda_, mass_, omega_;
};

class AnalogSystemSpec {
public:
  AnalogSystemSpec(ResonatorASpec res_a, ResonatorBSpec res_b, LoopGeometry geometry,
                   CouplingVariant variant = CouplingVariant::simplified);
  const ResonatorASpec& res_a() const { return a_; }
  const ResonatorBSpec& res_b() const { return b_; }
  const LoopGeometry& geometry() const { return geom_; }
  CouplingVariant coupling_variant() const { return variant_; }
  // L_J0 / (l_A D_A) and C_J / (c_A D_A)
  double lj_ratio() const { return lj_ratio_; }
  double cj_ratio() const { return cj_ratio_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  AnalogSystemSpec with_res_a(ResonatorASpec a) const { return {a, b_, geom_, variant_}; }
  AnalogSystemSpec with_geometry(LoopGeometry g) const { return {a_, b_, g, variant_}; }
  AnalogSystemSpec with_variant(CouplingVariant v) const { return {a_, b_, geom_, v}; }

private:
  ResonatorASpec a_;
  ResonatorBSpec b_;
  LoopGeometry geom_;
  CouplingVariant variant_;
  double lj_ratio_ = 0.0, cj_ratio_ = 0.0;
  std::vector<std::string> warnings_;
};

inline constexpr double kMaxLjRatio = 1e-2;
inline constexpr double kMaxCjRatio = 1e-1;

}  // namespace cqom
