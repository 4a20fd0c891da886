#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fairsel {

enum class Gender { Female, Male };

enum class Ethnicity { White, Black, Hispanic, Asian, Other };

enum class CareerStage {
  DistinguishedProfessor,
  Professor,
  AssociateProfessor,
  AssistantOrLecturer,
  PostdocOrFellow,
  GraduateStudent,
};

enum class WeightMode { Boolean, Continuous };

// Statistic used to split university ranks into protected/non-protected.
enum class RankSplit { Median, Mean };

inline constexpr std::size_t kFeatureCount = 5;

// Fixed feature order; queue cycling, tie-breaking and reports all rely on it.
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "gender", "ethnicity", "career_stage", "university_rank", "geolocation"};

struct FeatureVector {
  double gender = 0.0;
  double ethnicity = 0.0;
  double career_stage = 0.0;
  double university_rank = 0.0;
  double geolocation = 0.0;

  double operator[](std::size_t i) const;
  double& operator[](std::size_t i);
  bool operator==(const FeatureVector&) const = default;
};

// Per-feature protected participation rates, each a fraction of the authors counted.
struct ParityVector {
  double gender_wt = 0.0;
  double ethnicity_wt = 0.0;
  double career_wt = 0.0;
  double university_wt = 0.0;
  double geo_wt = 0.0;

  double operator[](std::size_t i) const;
  double& operator[](std::size_t i);
  bool operator==(const ParityVector&) const = default;
};

struct AuthorRecord {
  std::string author_id;
  Gender gender_label = Gender::Male;
  Ethnicity ethnicity_category = Ethnicity::White;
  CareerStage position_title = CareerStage::Professor;
  std::string university_name;
  int university_rank = 1;  // world ranking position, >= 1; larger = lower-ranked school
  std::string country;      // canonical form; any US spelling collapses to "USA"
  std::optional<std::string> us_state;  // present iff country is USA
  int h_index = 0;

  bool operator==(const AuthorRecord&) const = default;
};

struct PaperRecord {
  std::string paper_id;
  std::string venue_id;
  std::vector<std::string> author_ids;  // non-empty, no duplicates

  bool operator==(const PaperRecord&) const = default;
};

struct VenueRecord {
  std::string venue_id;
  double impact_factor = 0.0;  // > 0

  bool operator==(const VenueRecord&) const = default;
};

// std::map keys keep every id-ordered listing deterministic.
struct Dataset {
  std::map<std::string, AuthorRecord> authors;
  std::map<std::string, PaperRecord> papers;
  std::map<std::string, VenueRecord> venues;

  bool operator==(const Dataset&) const = default;
};

struct AuthorProfile {
  std::string author_id;
  FeatureVector boolean;
  FeatureVector continuous;
  // Mirrors the boolean vector; kept explicit for parity accounting.
  std::array<bool, kFeatureCount> protected_membership{};
  int h_index = 0;
};

std::string to_string(Gender g);
std::string to_string(Ethnicity e);
std::string to_string(CareerStage c);  // canonical position title
std::string to_string(WeightMode m);
std::string to_string(RankSplit s);

// All parsers trim input and match case-insensitively; unknown text raises ParseError.
Gender parse_gender(const std::string& text);
Ethnicity parse_ethnicity(const std::string& text);
CareerStage parse_position_title(const std::string& text);
WeightMode parse_weight_mode(const std::string& text);
RankSplit parse_rank_split(const std::string& text);

std::string canonical_country(const std::string& country);
bool is_usa(const std::string& canonical);

}  // namespace fairsel
