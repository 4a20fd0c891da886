#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace fairsel {

// External lookup data the encoders need; shipped as configuration so jurisdictional
// updates need no rebuild.
struct ReferenceTables {
  std::map<std::string, double> ethnicity_weights;  // category -> weight in [0,1]
  std::map<std::string, double> career_weights;     // canonical position title -> weight in [0,1]
  std::map<std::string, double> hdi_by_country;     // country -> HDI in (0,1)
  std::set<std::string> epscor_states;
  std::set<std::string> developing_countries;

  bool operator==(const ReferenceTables&) const = default;
};

// Loads the JSON config document holding the five maps/sets; keys are normalized to
// canonical spellings. Throws ParseError / MissingCategory / OutOfRangeWeight.
ReferenceTables load_reference_tables(const std::filesystem::path& path);

void save_reference_tables(const ReferenceTables& tables, const std::filesystem::path& path);

// All six career ranks and all five ethnicity categories must be covered; every
// weight in [0,1]; every HDI strictly inside (0,1).
void validate_reference_tables(const ReferenceTables& tables);

}  // namespace fairsel
