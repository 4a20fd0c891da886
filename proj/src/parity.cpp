#include "fairsel/parity.hpp"

#include <set>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

std::string to_string(ParityAccounting a) {
  return a == ParityAccounting::UniqueAuthors ? "unique" : "instances";
}

ParityAccounting parse_parity_accounting(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "unique") return ParityAccounting::UniqueAuthors;
  if (t == "instances") return ParityAccounting::AuthorInstances;
  throw Error(ErrorCode::ParseError, "unknown parity accounting '" + text + "'");
}

ParityVector compute_pool_parity(const std::vector<AuthorProfile>& authors) {
  if (authors.empty()) throw Error(ErrorCode::EmptyPool, "no authors to measure");
  std::array<long long, kFeatureCount> counts{};
  for (const AuthorProfile& a : authors) {
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (a.protected_membership[i]) ++counts[i];
    }
  }
  ParityVector parity;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    parity[i] = static_cast<double>(counts[i]) / static_cast<double>(authors.size());
  }
  return parity;
}

ParityVector participation(const std::vector<const PaperProfile*>& selection,
                           const std::map<std::string, AuthorProfile>& authors,
                           ParityAccounting accounting) {
  if (selection.empty()) throw Error(ErrorCode::EmptyPool, "no selected papers to measure");
  std::array<long long, kFeatureCount> counts{};
  long long total = 0;
  std::set<std::string> seen;
  for (const PaperProfile* paper : selection) {
    for (const std::string& author_id : paper->author_ids) {
      if (accounting == ParityAccounting::UniqueAuthors && !seen.insert(author_id).second) {
        continue;
      }
      auto it = authors.find(author_id);
      if (it == authors.end()) {
        throw Error(ErrorCode::DanglingReference,
                    "paper " + paper->paper_id + " references unprofiled author " + author_id);
      }
      ++total;
      for (std::size_t i = 0; i < kFeatureCount; ++i) {
        if (it->second.protected_membership[i]) ++counts[i];
      }
    }
  }
  ParityVector parity;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    parity[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return parity;
}

ParityVector participation(const std::vector<PaperProfile>& selection,
                           const std::map<std::string, AuthorProfile>& authors,
                           ParityAccounting accounting) {
  std::vector<const PaperProfile*> ptrs;
  ptrs.reserve(selection.size());
  for (const PaperProfile& p : selection) ptrs.push_back(&p);
  return participation(ptrs, authors, accounting);
}

bool parity_met(const ParityVector& selection_parity, const ParityVector& target,
                const std::optional<std::array<bool, kFeatureCount>>& feature_subset) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (feature_subset && !(*feature_subset)[i]) continue;
    if (selection_parity[i] < target[i]) return false;
  }
  return true;
}

}  // namespace fairsel
