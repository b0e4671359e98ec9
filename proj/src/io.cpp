#include "cqom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cqom/errors.hpp"

namespace cqom::io {

namespace {

// Reads the keys of one JSON object and rejects anything it did not consume.
class Section {
public:
  Section(const json& j, std::string name) : j_(j), name_(std::move(name)) {
    if (!j_.is_object()) throw SchemaError("'" + name_ + "' must be an object");
  }

  double number(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw SchemaError("missing key '" + name_ + "." + key + "'");
    const json& v = j_.at(key);
    if (!v.is_number()) throw SchemaError("'" + name_ + "." + key + "' must be a number");
    return v.get<double>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    seen_.insert(key);
    if (!j_.contains(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) throw SchemaError("'" + name_ + "." + key + "' must be a string");
    return v.get<std::string>();
  }

  const json& object(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw SchemaError("missing section '" + name_ + "." + key + "'");
    return j_.at(key);
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw SchemaError("unknown key '" + name_ + "." + it.key() + "'");
    }
  }

private:
  const json& j_;
  std::string name_;
  std::set<std::string> seen_;
};

const json& section(const json& doc, const char* key) {
  check_schema(doc);
  if (!doc.contains(key)) throw SchemaError(std::string("spec has no '") + key + "' section");
  return doc.at(key);
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open spec file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void check_schema(const json& doc) {
  if (!doc.is_object()) throw SchemaError("spec must be a JSON object");
  if (!doc.contains("schema") || !doc.at("schema").is_number_integer() ||
      doc.at("schema").get<int>() != kSchemaVersion) {
    throw SchemaError("spec must declare \"schema\": 1");
  }
  static const std::set<std::string> known{"schema",  "resonator_a", "resonator_b", "loop",
                                           "coupling_variant", "pair", "tunable", "cavity",
                                           "description"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!known.count(it.key())) throw SchemaError("unknown top-level key '" + it.key() + "'");
  }
}

TransmissionLine line_from_json(const json& j) {
  Section s(j, "line");
  TransmissionLine line(s.number("length_m"), s.number("cap_per_m_F"), s.number("ell_per_m_H"));
  s.finish();
  return line;
}

Squid squid_from_json(const json& j) {
  Section s(j, "squid");
  Squid sq(s.number("josephson_energy_J"), s.number("junction_cap_F"));
  s.finish();
  return sq;
}

CoupledPairSpec pair_from_json(const json& doc) {
  Section s(section(doc, "pair"), "pair");
  CoupledPairSpec p(s.number("left_len_m"), s.number("right_len_m"), s.number("coupling_cap_F"),
                    s.number("cap_per_m_F"), s.number("ell_per_m_H"));
  s.finish();
  return p;
}

TunableResonatorSpec tunable_from_json(const json& doc) {
  Section s(section(doc, "tunable"), "tunable");
  TransmissionLine line(s.number("length_m"), s.number("cap_per_m_F"), s.number("ell_per_m_H"));
  Squid sq = squid_from_json(s.object("squid"));
  Flux phi = Flux::from_ratio(s.number("flux_phi0"));
  s.finish();
  return {line, sq, phi};
}

ResonatorASpec resonator_a_from_json(const json& j) {
  Section s(j, "resonator_a");
  TransmissionLine line(s.number("length_m"), s.number("cap_per_m_F"), s.number("ell_per_m_H"));
  const double cc = s.number("coupling_cap_F");
  Squid sq = squid_from_json(s.object("squid"));
  Flux bias = Flux::from_ratio(s.number("bias_flux_phi0"));
  LengthModel model = length_model_from_string(s.text("length_model", "published"));
  s.finish();
  return {line, cc, sq, bias, model};
}

AnalogSystemSpec analog_from_json(const json& doc) {
  ResonatorASpec a = resonator_a_from_json(section(doc, "resonator_a"));
  ResonatorBSpec b(line_from_json(section(doc, "resonator_b")));
  Section g(section(doc, "loop"), "loop");
  LoopGeometry geom(g.number("squid_position_m"), g.number("near_edge_m"), g.number("far_edge_m"),
                    g.number("width_m"));
  g.finish();
  CouplingVariant variant = CouplingVariant::simplified;
  if (doc.contains("coupling_variant")) {
    if (!doc.at("coupling_variant").is_string()) throw SchemaError("'coupling_variant' must be a string");
    variant = coupling_variant_from_string(doc.at("coupling_variant").get<std::string>());
  }
  return {a, b, geom, variant};
}

CavityBaselineSpec cavity_from_json(const json& doc) {
  Section s(section(doc, "cavity"), "cavity");
  CavityBaselineSpec c(s.number("length_m"), s.number("reflectivity"), s.number("wavelength_m"),
                       s.number("mass_kg"), s.number("mech_freq_rad_s"));
  s.finish();
  return c;
}

json to_json(const analog::CouplingReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["omega_n0_rad_s"] = r.omega_n0;
  j["Omega_m_rad_s"] = r.Omega_m;
  j["G_m_Wb"] = r.G_m;
  j["kappa_n_rad_s_per_Wb2"] = r.kappa_n;
  j["g_nm_rad_s"] = r.g_nm;
  j["normalized_coupling"] = r.normalized;
  j["g_over_omega_Omega_s"] = r.g_over_omega_Omega;
  j["g_direct_rad_s"] = r.g_direct;
  j["ratio_direct_s"] = r.ratio_direct;
  if (std::isinf(r.x_star)) {
    j["x_star"] = "unconstrained";
  } else {
    j["x_star"] = r.x_star;
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("csv row has " + std::to_string(row.size()) + " fields, expected " +
                           std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void CsvTable::append(const CsvTable& other) {
  for (const auto& r : other.rows()) add_row(r);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_field(columns_[i]);
  os << "\r\n";
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << "\r\n";
  }
  return os.str();
}

}  // namespace cqom::io
