#include "fairsel/types.hpp"

#include <stdexcept>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

double FeatureVector::operator[](std::size_t i) const {
  switch (i) {
    case 0: return gender;
    case 1: return ethnicity;
    case 2: return career_stage;
    case 3: return university_rank;
    case 4: return geolocation;
  }
  throw std::out_of_range("feature index");
}

double& FeatureVector::operator[](std::size_t i) {
  switch (i) {
    case 0: return gender;
    case 1: return ethnicity;
    case 2: return career_stage;
    case 3: return university_rank;
    case 4: return geolocation;
  }
  throw std::out_of_range("feature index");
}

double ParityVector::operator[](std::size_t i) const {
  switch (i) {
    case 0: return gender_wt;
    case 1: return ethnicity_wt;
    case 2: return career_wt;
    case 3: return university_wt;
    case 4: return geo_wt;
  }
  throw std::out_of_range("feature index");
}

double& ParityVector::operator[](std::size_t i) {
  switch (i) {
    case 0: return gender_wt;
    case 1: return ethnicity_wt;
    case 2: return career_wt;
    case 3: return university_wt;
    case 4: return geo_wt;
  }
  throw std::out_of_range("feature index");
}

std::string to_string(Gender g) { return g == Gender::Female ? "female" : "male"; }

std::string to_string(Ethnicity e) {
  switch (e) {
    case Ethnicity::White: return "White";
    case Ethnicity::Black: return "Black";
    case Ethnicity::Hispanic: return "Hispanic";
    case Ethnicity::Asian: return "Asian";
    case Ethnicity::Other: return "Other";
  }
  return "Other";
}

std::string to_string(CareerStage c) {
  switch (c) {
    case CareerStage::DistinguishedProfessor: return "Distinguished Professor";
    case CareerStage::Professor: return "Professor";
    case CareerStage::AssociateProfessor: return "Associate Professor";
    case CareerStage::AssistantOrLecturer: return "Assistant Professor or Lecturer";
    case CareerStage::PostdocOrFellow: return "Post-Doctoral or Research Fellow";
    case CareerStage::GraduateStudent: return "Graduate Student";
  }
  return "Professor";
}

std::string to_string(WeightMode m) {
  return m == WeightMode::Boolean ? "boolean" : "continuous";
}

std::string to_string(RankSplit s) { return s == RankSplit::Median ? "median" : "mean"; }

Gender parse_gender(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "female") return Gender::Female;
  if (t == "male") return Gender::Male;
  throw Error(ErrorCode::ParseError, "unknown gender label '" + text + "'");
}

Ethnicity parse_ethnicity(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "white") return Ethnicity::White;
  if (t == "black") return Ethnicity::Black;
  if (t == "hispanic") return Ethnicity::Hispanic;
  if (t == "asian") return Ethnicity::Asian;
  if (t == "other") return Ethnicity::Other;
  throw Error(ErrorCode::ParseError, "unknown ethnicity category '" + text + "'");
}

CareerStage parse_position_title(const std::string& text) {
  const std::string t = lower(squeeze_spaces(trim(text)));
  if (t == "distinguished professor") return CareerStage::DistinguishedProfessor;
  if (t == "professor") return CareerStage::Professor;
  // "associated professor" shows up in upstream rank tables; treat it as a spelling variant.
  if (t == "associate professor" || t == "associated professor")
    return CareerStage::AssociateProfessor;
  if (t == "assistant professor or lecturer" || t == "assistant professor" || t == "lecturer")
    return CareerStage::AssistantOrLecturer;
  if (t == "post-doctoral or research fellow" || t == "postdoctoral or research fellow" ||
      t == "post-doctoral fellow" || t == "postdoctoral fellow" || t == "postdoc")
    return CareerStage::PostdocOrFellow;
  if (t == "graduate student") return CareerStage::GraduateStudent;
  throw Error(ErrorCode::ParseError, "unknown position title '" + text + "'");
}

WeightMode parse_weight_mode(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "boolean") return WeightMode::Boolean;
  if (t == "continuous") return WeightMode::Continuous;
  throw Error(ErrorCode::ParseError, "unknown weight mode '" + text + "' (expected boolean or continuous)");
}

RankSplit parse_rank_split(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "median") return RankSplit::Median;
  if (t == "mean") return RankSplit::Mean;
  throw Error(ErrorCode::ParseError, "unknown rank split '" + text + "' (expected median or mean)");
}

std::string canonical_country(const std::string& country) {
  const std::string t = squeeze_spaces(trim(country));
  const std::string l = lower(t);
  if (l == "usa" || l == "us" || l == "u.s." || l == "u.s.a." || l == "united states" ||
      l == "united states of america") {
    return "USA";
  }
  return t;
}

bool is_usa(const std::string& canonical) { return canonical == "USA"; }

}  // namespace fairsel
