#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cqom/analog.hpp"
#include "cqom/params.hpp"
#include "cqom/validity.hpp"

namespace cqom::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json load_json(const std::string& path);
void check_schema(const json& doc);

TransmissionLine line_from_json(const json& j);
Squid squid_from_json(const json& j);
CoupledPairSpec pair_from_json(const json& doc);
TunableResonatorSpec tunable_from_json(const json& doc);
ResonatorASpec resonator_a_from_json(const json& j);
AnalogSystemSpec analog_from_json(const json& doc);
CavityBaselineSpec cavity_from_json(const json& doc);

json to_json(const analog::CouplingReport& r);

std::string format_number(double x);

class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  void append(const CsvTable& other);
  std::string str() const;

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s);

}  // namespace cqom::io
