#include "cqom/params.hpp"

#include <cmath>
#include <sstream>

#include "cqom/errors.hpp"

namespace cqom {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be finite and positive (got " << value << ")";
    throw InvalidSpec(os.str());
  }
}

}  // namespace

double flux_cosine(Flux phi) {
  const double c = std::cos(constants::pi * phi.ratio());
  if (std::abs(c) < kHalfFluxGuard) {
    std::ostringstream os;
    os << "external flux " << phi.ratio() << " Phi0 is at a half flux quantum";
    throw HalfQuantumFlux(os.str());
  }
  return c;
}

TransmissionLine::TransmissionLine(double length, double cap_per_len, double ind_per_len)
    : length_(length), cap_(cap_per_len), ind_(ind_per_len) {
  require_positive(length, "line length");
  require_positive(cap_per_len, "capacitance per length");
  require_positive(ind_per_len, "inductance per length");
}

double TransmissionLine::wave_speed() const { return 1.0 / std::sqrt(ind_ * cap_); }
double TransmissionLine::impedance() const { return std::sqrt(ind_ / cap_); }

LineQuantities derived_line_quantities(const TransmissionLine& line) {
  return {line.wave_speed(), line.impedance()};
}

Squid::Squid(double josephson_energy, double junction_cap) : ej0_(josephson_energy), cj_(junction_cap) {
  require_positive(josephson_energy, "Josephson energy");
  require_positive(junction_cap, "junction capacitance");
}

double Squid::lj0() const {
  const double p = constants::reduced_flux_quantum;
  return p * p / (2.0 * ej0_);
}

double effective_inductance(const Squid& squid, Flux phi) {
  return squid.lj0() / std::abs(flux_cosine(phi));
}

double plasma_frequency(const Squid& squid, Flux phi) {
  return 1.0 / std::sqrt(squid.junction_cap() * effective_inductance(squid, phi));
}

CoupledPairSpec::CoupledPairSpec(double left_len, double right_len, double coupling_cap,
                                 double cap_per_len, double ind_per_len)
    : dl_(left_len), dr_(right_len), cc_(coupling_cap), cap_(cap_per_len), ind_(ind_per_len) {
  require_positive(left_len, "left length");
  require_positive(right_len, "right length");
  require_positive(coupling_cap, "coupling capacitance");
  require_positive(cap_per_len, "capacitance per length");
  require_positive(ind_per_len, "inductance per length");
}

CoupledPairSpec CoupledPairSpec::dimensionless(double omega_c, double xi) {
  require_positive(omega_c, "omega_c");
  return {0.5 + xi, 0.5 - xi, 1.0 / omega_c, 1.0, 1.0};
}

CoupledPairSpec CoupledPairSpec::centered(const TransmissionLine& line, double coupling_cap,
                                          double xi) {
  const double half = 0.5 * line.length();
  return {half + xi, half - xi, coupling_cap, line.cap_per_len(), line.ind_per_len()};
}

double CoupledPairSpec::wave_speed() const { return 1.0 / std::sqrt(ind_ * cap_); }
double CoupledPairSpec::impedance() const { return std::sqrt(ind_ / cap_); }
double CoupledPairSpec::omega_c() const { return 1.0 / (impedance() * cc_); }

CoupledPairSpec CoupledPairSpec::with_lengths(double left, double right) const {
  return {left, right, cc_, cap_, ind_};
}

TunableResonatorSpec::TunableResonatorSpec(TransmissionLine line, Squid squid, Flux flux)
    : line_(line), squid_(squid), flux_(flux) {
  flux_cosine(flux);
}

std::string to_string(LengthModel m) {
  return m == LengthModel::published ? "published" : "tangent";
}

std::string to_string(CouplingVariant v) {
  switch (v) {
    case CouplingVariant::closed_form: return "closed_form";
    case CouplingVariant::simplified: return "simplified";
    case CouplingVariant::biot_savart_numeric: return "biot_savart_numeric";
  }
  return "simplified";
}

LengthModel length_model_from_string(const std::string& s) {
  if (s == "published") return LengthModel::published;
  if (s == "tangent") return LengthModel::tangent;
  throw SchemaError("unknown length model '" + s + "' (expected published|tangent)");
}

CouplingVariant coupling_variant_from_string(const std::string& s) {
  if (s == "closed_form") return CouplingVariant::closed_form;
  if (s == "simplified") return CouplingVariant::simplified;
  if (s == "biot_savart_numeric") return CouplingVariant::biot_savart_numeric;
  throw SchemaError("unknown coupling variant '" + s +
                    "' (expected closed_form|simplified|biot_savart_numeric)");
}

ResonatorASpec::ResonatorASpec(TransmissionLine line, double coupling_cap, Squid squid, Flux bias,
                               LengthModel model)
    : line_(line), cc_(coupling_cap), squid_(squid), bias_(bias), model_(model) {
  require_positive(coupling_cap, "coupling capacitance");
  flux_cosine(bias);
}

double ResonatorASpec::omega_c() const { return 1.0 / (line_.impedance() * cc_); }

double ResonatorASpec::effective_total_length() const {
  const double l = line_.ind_per_len();
  if (model_ == LengthModel::published) {
    const double p = constants::reduced_flux_quantum;
    return line_.length() + 2.0 * p * p / (l * squid_.josephson_energy());
  }
  return line_.length() + 2.0 * effective_inductance(squid_, bias_) / l;
}

double ResonatorASpec::total_capacitance() const {
  return line_.total_capacitance() + 2.0 * squid_.junction_cap() + cc_;
}

LoopGeometry::LoopGeometry(double squid_position, double near_edge, double far_edge, double width)
    : z0_(squid_position), s1_(near_edge), s2_(far_edge), w_(width) {
  require_positive(squid_position, "squid position z0");
  require_positive(near_edge, "near edge s1");
  require_positive(width, "loop width w");
  if (!(far_edge > near_edge)) throw InvalidSpec("loop far edge s2 must exceed near edge s1");
}

CavityBaselineSpec::CavityBaselineSpec(double cavity_len, double reflectivity, double wavelength,
                                       double mass, double mech_freq)
    : len_(cavity_len), r_(reflectivity), lambda_(wavelength), mass_(mass), omega_(mech_freq) {
  require_positive(cavity_len, "cavity length");
  require_positive(reflectivity, "reflectivity");
  require_positive(wavelength, "wavelength");
  require_positive(mass, "membrane mass");
  require_positive(mech_freq, "mechanical frequency");
  if (!(reflectivity < 1.0)) throw InvalidSpec("reflectivity must be below 1");
}

AnalogSystemSpec::AnalogSystemSpec(ResonatorASpec res_a, ResonatorBSpec res_b, LoopGeometry geometry,
                                   CouplingVariant variant)
    : a_(res_a), b_(res_b), geom_(geometry), variant_(variant) {
  if (!(geom_.squid_position() < 0.5 * b_.line().length())) {
    throw InvalidSpec("squid position z0 must lie inside resonator B (0 < z0 < d_B/2)");
  }
  const double da = a_.effective_total_length();
  lj_ratio_ = a_.squid().lj0() / (a_.line().ind_per_len() * da);
  cj_ratio_ = a_.squid().junction_cap() / (a_.line().cap_per_len() * da);
  if (lj_ratio_ > kMaxLjRatio) {
    std::ostringstream os;
    os << "L_J0/(l_A D_A) = " << lj_ratio_ << " exceeds " << kMaxLjRatio;
    warnings_.push_back(os.str());
  }
  if (cj_ratio_ > kMaxCjRatio) {
    std::ostringstream os;
    os << "C_J/(c_A D_A) = " << cj_ratio_ << " exceeds " << kMaxCjRatio;
    warnings_.push_back(os.str());
  }
  if (geom_.far_edge() >= 0.05 * b_.line().length()) {
    warnings_.push_back("loop far edge s2 is not small compared to d_B");
  }
}

}  // namespace cqom
