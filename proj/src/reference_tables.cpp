#include "fairsel/reference_tables.hpp"

#include <fstream>

#include <json.hpp>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

namespace {

using json = nlohmann::ordered_json;

const json& require_section(const json& doc, const char* key, json::value_t type) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorCode::ParseError, std::string("reference tables: missing section '") + key + "'");
  }
  const bool ok = it->type() == type ||
                  (type == json::value_t::object && it->is_object()) ||
                  (type == json::value_t::array && it->is_array());
  if (!ok) {
    throw Error(ErrorCode::ParseError, std::string("reference tables: section '") + key +
                                           "' has the wrong shape");
  }
  return *it;
}

double weight_value(const json& v, const std::string& context) {
  if (!v.is_number()) {
    throw Error(ErrorCode::ParseError, "reference tables: " + context + " is not a number");
  }
  const double w = v.get<double>();
  if (w < 0.0 || w > 1.0) {
    throw Error(ErrorCode::OutOfRangeWeight, context + " = " + format_double(w) + " outside [0,1]");
  }
  return w;
}

}  // namespace

ReferenceTables load_reference_tables(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, path.string() + ": top-level value must be an object");
  }

  ReferenceTables t;
  for (const auto& [key, value] :
       require_section(doc, "career_weights", json::value_t::object).items()) {
    const CareerStage stage = parse_position_title(key);
    t.career_weights[to_string(stage)] = weight_value(value, "career weight for '" + key + "'");
  }
  for (const auto& [key, value] :
       require_section(doc, "ethnicity_weights", json::value_t::object).items()) {
    const Ethnicity category = parse_ethnicity(key);
    t.ethnicity_weights[to_string(category)] =
        weight_value(value, "ethnicity weight for '" + key + "'");
  }
  for (const auto& [key, value] :
       require_section(doc, "hdi_by_country", json::value_t::object).items()) {
    if (!value.is_number()) {
      throw Error(ErrorCode::ParseError, "reference tables: HDI for '" + key + "' is not a number");
    }
    t.hdi_by_country[canonical_country(key)] = value.get<double>();
  }
  for (const auto& value : require_section(doc, "epscor_states", json::value_t::array)) {
    if (!value.is_string()) {
      throw Error(ErrorCode::ParseError, "reference tables: epscor_states entries must be strings");
    }
    t.epscor_states.insert(trim(value.get<std::string>()));
  }
  for (const auto& value : require_section(doc, "developing_countries", json::value_t::array)) {
    if (!value.is_string()) {
      throw Error(ErrorCode::ParseError,
                  "reference tables: developing_countries entries must be strings");
    }
    t.developing_countries.insert(canonical_country(value.get<std::string>()));
  }

  validate_reference_tables(t);
  return t;
}

void save_reference_tables(const ReferenceTables& tables, const std::filesystem::path& path) {
  json doc = json::object();
  doc["career_weights"] = json::object();
  for (const auto& [title, weight] : tables.career_weights) doc["career_weights"][title] = weight;
  doc["ethnicity_weights"] = json::object();
  for (const auto& [category, weight] : tables.ethnicity_weights)
    doc["ethnicity_weights"][category] = weight;
  doc["hdi_by_country"] = json::object();
  for (const auto& [country, hdi] : tables.hdi_by_country) doc["hdi_by_country"][country] = hdi;
  doc["epscor_states"] = json::array();
  for (const auto& state : tables.epscor_states) doc["epscor_states"].push_back(state);
  doc["developing_countries"] = json::array();
  for (const auto& country : tables.developing_countries)
    doc["developing_countries"].push_back(country);

  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

void validate_reference_tables(const ReferenceTables& tables) {
  static constexpr std::array<CareerStage, 6> kStages = {
      CareerStage::DistinguishedProfessor, CareerStage::Professor,
      CareerStage::AssociateProfessor,     CareerStage::AssistantOrLecturer,
      CareerStage::PostdocOrFellow,        CareerStage::GraduateStudent};
  for (CareerStage stage : kStages) {
    if (!tables.career_weights.count(to_string(stage))) {
      throw Error(ErrorCode::MissingCategory, "career weight for '" + to_string(stage) + "'");
    }
  }
  static constexpr std::array<Ethnicity, 5> kCategories = {
      Ethnicity::White, Ethnicity::Black, Ethnicity::Hispanic, Ethnicity::Asian, Ethnicity::Other};
  for (Ethnicity category : kCategories) {
    if (!tables.ethnicity_weights.count(to_string(category))) {
      throw Error(ErrorCode::MissingCategory, "ethnicity weight for '" + to_string(category) + "'");
    }
  }
  for (const auto& [title, weight] : tables.career_weights) {
    if (weight < 0.0 || weight > 1.0) {
      throw Error(ErrorCode::OutOfRangeWeight,
                  "career weight for '" + title + "' = " + format_double(weight) + " outside [0,1]");
    }
  }
  for (const auto& [category, weight] : tables.ethnicity_weights) {
    if (weight < 0.0 || weight > 1.0) {
      throw Error(ErrorCode::OutOfRangeWeight, "ethnicity weight for '" + category + "' = " +
                                                   format_double(weight) + " outside [0,1]");
    }
  }
  for (const auto& [country, hdi] : tables.hdi_by_country) {
    if (hdi <= 0.0 || hdi >= 1.0) {
      throw Error(ErrorCode::OutOfRangeWeight,
                  "HDI for '" + country + "' = " + format_double(hdi) + " outside (0,1)");
    }
  }
}

}  // namespace fairsel
