#include "fairsel/paper_profile.hpp"

#include <algorithm>

#include "fairsel/error.hpp"
#include "fairsel/profiling.hpp"

namespace fairsel {

FeatureVector fuse_profiles(const std::vector<AuthorProfile>& authors, WeightMode mode) {
  if (authors.empty()) throw Error(ErrorCode::EmptyAuthorList, "cannot fuse zero author profiles");
  FeatureVector fused;
  for (const AuthorProfile& a : authors) {
    const FeatureVector& v = mode == WeightMode::Boolean ? a.boolean : a.continuous;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      fused[i] = std::max(fused[i], v[i]);
    }
  }
  return fused;
}

double pd_score(const FeatureVector& features) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kFeatureCount; ++i) sum += features[i];
  return sum;
}

double quality_score(const PaperRecord& paper, const std::map<std::string, VenueRecord>& venues) {
  auto it = venues.find(paper.venue_id);
  if (it == venues.end()) {
    throw Error(ErrorCode::UnknownVenue,
                "paper " + paper.paper_id + " references unknown venue " + paper.venue_id);
  }
  return it->second.impact_factor;
}

std::vector<PaperProfile> build_paper_profiles(
    const Dataset& dataset, WeightMode mode,
    const std::map<std::string, AuthorProfile>& author_profiles) {
  std::vector<PaperProfile> out;
  out.reserve(dataset.papers.size());
  for (const auto& [paper_id, paper] : dataset.papers) {
    std::vector<AuthorProfile> members;
    members.reserve(paper.author_ids.size());
    for (const std::string& author_id : paper.author_ids) {
      auto it = author_profiles.find(author_id);
      if (it == author_profiles.end()) {
        throw Error(ErrorCode::DanglingReference,
                    "paper " + paper_id + " references unprofiled author " + author_id);
      }
      members.push_back(it->second);
    }
    PaperProfile p;
    p.paper_id = paper_id;
    p.venue_id = paper.venue_id;
    p.author_ids = paper.author_ids;
    p.mode = mode;
    p.features = fuse_profiles(members, mode);
    for (const AuthorProfile& a : members) {
      for (std::size_t i = 0; i < kFeatureCount; ++i) {
        if (a.protected_membership[i]) p.protected_any[i] = true;
      }
    }
    p.pd_score = pd_score(p.features);
    p.quality_score = quality_score(paper, dataset.venues);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PaperProfile> build_paper_profiles(const Dataset& dataset, WeightMode mode,
                                               const ReferenceTables& tables, RankSplit split) {
  return build_paper_profiles(dataset, mode, build_author_profiles(dataset, tables, split));
}

}  // namespace fairsel
