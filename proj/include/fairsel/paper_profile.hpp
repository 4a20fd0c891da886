#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fairsel/reference_tables.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

struct PaperProfile {
  std::string paper_id;
  std::string venue_id;
  std::vector<std::string> author_ids;
  WeightMode mode = WeightMode::Boolean;
  FeatureVector features;  // fused over the paper's authors
  // True where at least one author belongs to the protected group. Queue membership
  // and parity accounting read these flags in both weight modes.
  std::array<bool, kFeatureCount> protected_any{};
  double pd_score = 0.0;     // sum of the five fused components, in [0, 5]
  double quality_score = 0.0;  // venue impact factor
};

// Componentwise max over the authors' vectors for the requested mode; for boolean
// vectors this coincides with a bit-wise OR. Throws EmptyAuthorList on no authors.
FeatureVector fuse_profiles(const std::vector<AuthorProfile>& authors, WeightMode mode);

double pd_score(const FeatureVector& features);

// Impact factor of the paper's venue. Throws UnknownVenue if the venue id is absent.
double quality_score(const PaperRecord& paper, const std::map<std::string, VenueRecord>& venues);

// One profile per paper, ordered by ascending paper id. Throws DanglingReference if a
// paper lists an author id the profile map does not cover.
std::vector<PaperProfile> build_paper_profiles(
    const Dataset& dataset, WeightMode mode,
    const std::map<std::string, AuthorProfile>& author_profiles);

std::vector<PaperProfile> build_paper_profiles(const Dataset& dataset, WeightMode mode,
                                               const ReferenceTables& tables,
                                               RankSplit split = RankSplit::Median);

}  // namespace fairsel
