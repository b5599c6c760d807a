#include "fjq/report.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fjq/text_util.hpp"
#include "fjq/types.hpp"

namespace fjq {

using Json = nlohmann::ordered_json;

std::string_view short_name(Quantity q) {
  switch (q) {
    case Quantity::kInternalConflict: return "C_I";
    case Quantity::kDisagreement: return "D";
    case Quantity::kPolarization: return "P";
    case Quantity::kControversy: return "C";
    case Quantity::kDcIndex: return "I_dc";
  }
  return "?";
}

std::string_view key_name(Quantity q) {
  switch (q) {
    case Quantity::kInternalConflict: return "internal_conflict";
    case Quantity::kDisagreement: return "disagreement";
    case Quantity::kPolarization: return "polarization";
    case Quantity::kControversy: return "controversy";
    case Quantity::kDcIndex: return "disagreement_controversy_index";
  }
  return "?";
}

double Quantities::get(Quantity q) const {
  return const_cast<Quantities&>(*this).get(q);
}

double& Quantities::get(Quantity q) {
  switch (q) {
    case Quantity::kInternalConflict: return internal_conflict;
    case Quantity::kDisagreement: return disagreement;
    case Quantity::kPolarization: return polarization;
    case Quantity::kControversy: return controversy;
    case Quantity::kDcIndex: break;
  }
  return dc_index;
}

double relative_error(double exact, double estimate) {
  const double diff = std::abs(exact - estimate);
  if (diff == 0.0) return 0.0;
  return diff / std::abs(exact);
}

namespace {

Json to_json_object(const QuantityReport& r) {
  Json j;
  j["method"] = r.method;
  j["n"] = r.n;
  j["m"] = r.m;
  j["epsilon"] = r.epsilon ? Json(*r.epsilon) : Json(nullptr);
  for (Quantity q : kAllQuantities) j[std::string(key_name(q))] = r.values.get(q);
  j["solver_iterations"] = r.solver_iterations;
  j["wall_time_s"] = r.wall_time_s;
  if (r.dc_index_check) j["dc_index_check"] = *r.dc_index_check;
  if (r.delta_theoretical) j["delta_theoretical"] = *r.delta_theoretical;
  if (r.delta_effective) j["delta_effective"] = *r.delta_effective;
  if (r.delta_mode) j["delta_mode"] = *r.delta_mode;
  if (r.delta_clamped) j["delta_clamped"] = *r.delta_clamped;
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "---";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void write_key_value(std::ostream& out, const QuantityReport& report) {
  const Json obj = to_json_object(report);
  for (const auto& [key, value] : obj.items()) {
    out << key << '=' << scalar_text(value) << '\n';
  }
}

void write_json(std::ostream& out, const QuantityReport& report) {
  out << to_json(report) << '\n';
}

std::string to_json(const QuantityReport& report) { return to_json_object(report).dump(); }

QuantityReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  try {
    QuantityReport r;
    r.method = j.at("method").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<double>();
    for (Quantity q : kAllQuantities) r.values.get(q) = j.at(std::string(key_name(q))).get<double>();
    r.solver_iterations = j.at("solver_iterations").get<long long>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    if (j.contains("dc_index_check")) r.dc_index_check = j["dc_index_check"].get<double>();
    if (j.contains("delta_theoretical")) r.delta_theoretical = j["delta_theoretical"].get<double>();
    if (j.contains("delta_effective")) r.delta_effective = j["delta_effective"].get<double>();
    if (j.contains("delta_mode")) r.delta_mode = j["delta_mode"].get<std::string>();
    if (j.contains("delta_clamped")) r.delta_clamped = j["delta_clamped"].get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON missing or mistyped field: ") + e.what());
  }
}

}  // namespace fjq
