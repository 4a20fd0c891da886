#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairsel/dataset.hpp"
#include "fairsel/reference_tables.hpp"
#include "fairsel/types.hpp"

namespace fixtures {

// Fresh empty scratch directory under the system temp root.
inline std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("fairsel_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline const fairsel::ReferenceTables& tables() {
  static const fairsel::ReferenceTables t =
      fairsel::load_reference_tables(FAIRSEL_DATA_DIR "/reference_tables.json");
  return t;
}

inline fairsel::AuthorRecord author(std::string id, fairsel::Gender gender,
                                    fairsel::Ethnicity ethnicity, fairsel::CareerStage career,
                                    int rank, std::string country,
                                    std::optional<std::string> us_state, int h_index) {
  fairsel::AuthorRecord a;
  a.author_id = std::move(id);
  a.gender_label = gender;
  a.ethnicity_category = ethnicity;
  a.position_title = career;
  a.university_name = "University " + std::to_string(rank);
  a.university_rank = rank;
  a.country = std::move(country);
  a.us_state = std::move(us_state);
  a.h_index = h_index;
  return a;
}

inline void add_author(fairsel::Dataset& d, fairsel::AuthorRecord a) {
  d.authors.emplace(a.author_id, std::move(a));
}

inline void add_paper(fairsel::Dataset& d, std::string id, std::string venue,
                      std::vector<std::string> author_ids) {
  fairsel::PaperRecord p;
  p.paper_id = std::move(id);
  p.venue_id = std::move(venue);
  p.author_ids = std::move(author_ids);
  d.papers.emplace(p.paper_id, std::move(p));
}

inline void add_venue(fairsel::Dataset& d, std::string id, double impact) {
  fairsel::VenueRecord v;
  v.venue_id = std::move(id);
  v.impact_factor = impact;
  d.venues.emplace(v.venue_id, std::move(v));
}

// Six single-author papers across two venues; parity needs exactly two picks from the
// demographic queue before a quality fill can close the gap.
inline fairsel::Dataset six_paper_pool() {
  using namespace fairsel;
  Dataset d;
  add_venue(d, "v1", 90.0);
  add_venue(d, "v2", 30.0);
  add_author(d, author("a1", Gender::Male, Ethnicity::White, CareerStage::Professor, 10, "Germany",
                       std::nullopt, 50));
  add_author(d, author("a2", Gender::Male, Ethnicity::White, CareerStage::Professor, 10, "Germany",
                       std::nullopt, 45));
  add_author(d, author("a3", Gender::Female, Ethnicity::Black, CareerStage::GraduateStudent, 800,
                       "India", std::nullopt, 10));
  add_author(d, author("a4", Gender::Female, Ethnicity::White, CareerStage::PostdocOrFellow, 10,
                       "Germany", std::nullopt, 30));
  add_author(d, author("a5", Gender::Male, Ethnicity::Asian, CareerStage::Professor, 700, "USA",
                       "Arkansas", 20));
  add_author(d, author("a6", Gender::Female, Ethnicity::White, CareerStage::GraduateStudent, 10,
                       "Norway", std::nullopt, 15));
  add_paper(d, "p1", "v1", {"a1"});
  add_paper(d, "p2", "v1", {"a2"});
  add_paper(d, "p3", "v2", {"a3"});
  add_paper(d, "p4", "v1", {"a4"});
  add_paper(d, "p5", "v2", {"a5"});
  add_paper(d, "p6", "v2", {"a6"});
  return d;
}

// Eight single-author papers where geolocation and ethnicity are the scarce features.
inline fairsel::Dataset eight_paper_pool() {
  using namespace fairsel;
  Dataset d;
  add_venue(d, "v1", 90.0);
  add_venue(d, "v2", 30.0);
  add_author(d, author("a1", Gender::Male, Ethnicity::White, CareerStage::Professor, 10, "Germany",
                       std::nullopt, 40));
  add_author(d, author("a2", Gender::Female, Ethnicity::White, CareerStage::GraduateStudent, 10,
                       "Germany", std::nullopt, 35));
  add_author(d, author("a3", Gender::Female, Ethnicity::White, CareerStage::GraduateStudent, 10,
                       "Norway", std::nullopt, 30));
  add_author(d, author("a4", Gender::Male, Ethnicity::White, CareerStage::Professor, 10, "Germany",
                       std::nullopt, 45));
  add_author(d, author("a5", Gender::Male, Ethnicity::Asian, CareerStage::Professor, 700, "Germany",
                       std::nullopt, 25));
  add_author(d, author("a6", Gender::Female, Ethnicity::White, CareerStage::GraduateStudent, 10,
                       "India", std::nullopt, 20));
  add_author(d, author("a7", Gender::Male, Ethnicity::Hispanic, CareerStage::Professor, 800,
                       "Norway", std::nullopt, 15));
  add_author(d, author("a8", Gender::Female, Ethnicity::White, CareerStage::PostdocOrFellow, 10,
                       "Germany", std::nullopt, 28));
  add_paper(d, "p1", "v1", {"a1"});
  add_paper(d, "p2", "v1", {"a2"});
  add_paper(d, "p3", "v2", {"a3"});
  add_paper(d, "p4", "v1", {"a4"});
  add_paper(d, "p5", "v2", {"a5"});
  add_paper(d, "p6", "v2", {"a6"});
  add_paper(d, "p7", "v2", {"a7"});
  add_paper(d, "p8", "v1", {"a8"});
  return d;
}

// Seven single-author papers with one clear leader per feature.
inline fairsel::Dataset seven_paper_pool() {
  using namespace fairsel;
  Dataset d;
  add_venue(d, "v1", 90.0);
  add_venue(d, "v2", 30.0);
  add_author(d, author("b1", Gender::Female, Ethnicity::White, CareerStage::Professor, 10,
                       "Germany", std::nullopt, 40));
  add_author(d, author("b2", Gender::Male, Ethnicity::Asian, CareerStage::Professor, 10, "Germany",
                       std::nullopt, 38));
  add_author(d, author("b3", Gender::Male, Ethnicity::White, CareerStage::GraduateStudent, 10,
                       "Germany", std::nullopt, 36));
  add_author(d, author("b4", Gender::Male, Ethnicity::White, CareerStage::Professor, 800, "Germany",
                       std::nullopt, 34));
  add_author(d, author("b5", Gender::Male, Ethnicity::White, CareerStage::Professor, 10, "India",
                       std::nullopt, 32));
  add_author(d, author("b6", Gender::Female, Ethnicity::Black, CareerStage::GraduateStudent, 10,
                       "China", std::nullopt, 12));
  add_author(d, author("b7", Gender::Male, Ethnicity::White, CareerStage::Professor, 10, "Germany",
                       std::nullopt, 30));
  add_paper(d, "p1", "v1", {"b1"});
  add_paper(d, "p2", "v1", {"b2"});
  add_paper(d, "p3", "v1", {"b3"});
  add_paper(d, "p4", "v1", {"b4"});
  add_paper(d, "p5", "v1", {"b5"});
  add_paper(d, "p6", "v2", {"b6"});
  add_paper(d, "p7", "v1", {"b7"});
  return d;
}

// Three papers over three authors with overlapping authorship; exercises fusion and
// both weight modes.
inline fairsel::Dataset three_paper_pool() {
  using namespace fairsel;
  Dataset d;
  add_venue(d, "v1", 87.0);
  add_venue(d, "v2", 33.0);
  add_author(d, author("a1", Gender::Male, Ethnicity::White, CareerStage::Professor, 100, "Germany",
                       std::nullopt, 30));
  add_author(d, author("a2", Gender::Female, Ethnicity::Asian, CareerStage::GraduateStudent, 800,
                       "India", std::nullopt, 10));
  add_author(d, author("a3", Gender::Male, Ethnicity::Hispanic, CareerStage::PostdocOrFellow, 400,
                       "USA", "Arkansas", 20));
  add_paper(d, "p1", "v1", {"a1", "a2"});
  add_paper(d, "p2", "v2", {"a3"});
  add_paper(d, "p3", "v1", {"a1", "a3"});
  return d;
}

}  // namespace fixtures
