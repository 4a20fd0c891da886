#include "fairsel/profiling.hpp"

#include <algorithm>
#include <numeric>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

namespace {

// Case-insensitive fallback so hand-edited data ("arkansas") cannot silently land in
// the non-protected group.
bool set_contains(const std::set<std::string>& set, const std::string& value) {
  if (set.count(value)) return true;
  const std::string l = lower(value);
  for (const std::string& entry : set) {
    if (lower(entry) == l) return true;
  }
  return false;
}

const double* map_find(const std::map<std::string, double>& map, const std::string& key) {
  auto it = map.find(key);
  if (it != map.end()) return &it->second;
  const std::string l = lower(key);
  for (const auto& [k, v] : map) {
    if (lower(k) == l) return &v;
  }
  return nullptr;
}

}  // namespace

double encode_gender(Gender gender, WeightMode mode) {
  if (mode == WeightMode::Boolean) return gender == Gender::Female ? 1.0 : 0.0;
  return gender == Gender::Female ? 1.0 - kFemaleShare : kFemaleShare;
}

double encode_ethnicity(Ethnicity category, WeightMode mode, const ReferenceTables& tables) {
  if (mode == WeightMode::Boolean) return category == Ethnicity::White ? 0.0 : 1.0;
  const double* weight = map_find(tables.ethnicity_weights, to_string(category));
  if (!weight) {
    throw Error(ErrorCode::MissingCategory, "ethnicity weight for '" + to_string(category) + "'");
  }
  return *weight;
}

double encode_career_stage(CareerStage title, WeightMode mode, const ReferenceTables& tables) {
  if (mode == WeightMode::Boolean) {
    switch (title) {
      case CareerStage::DistinguishedProfessor:
      case CareerStage::Professor:
      case CareerStage::AssociateProfessor:
        return 0.0;
      default:
        return 1.0;
    }
  }
  const double* weight = map_find(tables.career_weights, to_string(title));
  if (!weight) {
    throw Error(ErrorCode::MissingCategory, "career weight for '" + to_string(title) + "'");
  }
  return *weight;
}

double rank_split_value(const std::vector<int>& pool_ranks, RankSplit split) {
  if (pool_ranks.empty()) throw Error(ErrorCode::EmptyPool, "no university ranks to split");
  if (split == RankSplit::Mean) {
    const long long sum = std::accumulate(pool_ranks.begin(), pool_ranks.end(), 0LL);
    return static_cast<double>(sum) / static_cast<double>(pool_ranks.size());
  }
  std::vector<int> sorted = pool_ranks;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return static_cast<double>(sorted[n / 2]);
  return (static_cast<double>(sorted[n / 2 - 1]) + static_cast<double>(sorted[n / 2])) / 2.0;
}

double encode_university_rank(int author_rank, const std::vector<int>& pool_ranks, WeightMode mode,
                              RankSplit split) {
  if (pool_ranks.empty()) throw Error(ErrorCode::EmptyPool, "no university ranks in pool");
  if (author_rank < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "university rank " + std::to_string(author_rank) + " is below 1");
  }
  const int worst = *std::max_element(pool_ranks.begin(), pool_ranks.end());
  if (author_rank > worst) {
    throw Error(ErrorCode::InvalidArgument,
                "university rank " + std::to_string(author_rank) + " exceeds the pool's worst rank " +
                    std::to_string(worst));
  }
  if (mode == WeightMode::Continuous) {
    return static_cast<double>(author_rank) / static_cast<double>(worst);
  }
  return static_cast<double>(author_rank) > rank_split_value(pool_ranks, split) ? 1.0 : 0.0;
}

double encode_geolocation(const std::string& country, const std::optional<std::string>& us_state,
                          WeightMode mode, const ReferenceTables& tables) {
  const std::string c = canonical_country(country);
  if (mode == WeightMode::Continuous) {
    const double* hdi = map_find(tables.hdi_by_country, c);
    if (!hdi) throw Error(ErrorCode::UnknownCountry, "no HDI entry for '" + country + "'");
    return 1.0 - *hdi;
  }
  if (is_usa(c)) {
    const std::string state = us_state ? trim(*us_state) : std::string();
    if (state.empty()) throw Error(ErrorCode::MissingState, "US author without us_state");
    return set_contains(tables.epscor_states, state) ? 1.0 : 0.0;
  }
  if (set_contains(tables.developing_countries, c)) return 1.0;
  if (map_find(tables.hdi_by_country, c)) return 0.0;
  throw Error(ErrorCode::UnknownCountry,
              "country '" + country + "' is in neither the developing list nor the HDI table");
}

std::vector<int> collect_pool_ranks(const Dataset& dataset) {
  std::vector<int> ranks;
  ranks.reserve(dataset.authors.size());
  for (const auto& [id, a] : dataset.authors) ranks.push_back(a.university_rank);
  return ranks;
}

AuthorProfile build_author_profile(const AuthorRecord& record, const std::vector<int>& pool_ranks,
                                   const ReferenceTables& tables, RankSplit split) {
  AuthorProfile p;
  p.author_id = record.author_id;
  p.h_index = record.h_index;
  p.boolean.gender = encode_gender(record.gender_label, WeightMode::Boolean);
  p.boolean.ethnicity = encode_ethnicity(record.ethnicity_category, WeightMode::Boolean, tables);
  p.boolean.career_stage = encode_career_stage(record.position_title, WeightMode::Boolean, tables);
  p.boolean.university_rank =
      encode_university_rank(record.university_rank, pool_ranks, WeightMode::Boolean, split);
  p.boolean.geolocation =
      encode_geolocation(record.country, record.us_state, WeightMode::Boolean, tables);
  p.continuous.gender = encode_gender(record.gender_label, WeightMode::Continuous);
  p.continuous.ethnicity =
      encode_ethnicity(record.ethnicity_category, WeightMode::Continuous, tables);
  p.continuous.career_stage =
      encode_career_stage(record.position_title, WeightMode::Continuous, tables);
  p.continuous.university_rank =
      encode_university_rank(record.university_rank, pool_ranks, WeightMode::Continuous, split);
  p.continuous.geolocation =
      encode_geolocation(record.country, record.us_state, WeightMode::Continuous, tables);
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    p.protected_membership[i] = p.boolean[i] == 1.0;
  }
  return p;
}

std::map<std::string, AuthorProfile> build_author_profiles(const Dataset& dataset,
                                                           const ReferenceTables& tables,
                                                           RankSplit split) {
  const std::vector<int> ranks = collect_pool_ranks(dataset);
  std::map<std::string, AuthorProfile> out;
  for (const auto& [id, record] : dataset.authors) {
    out.emplace(id, build_author_profile(record, ranks, tables, split));
  }
  return out;
}

}  // namespace fairsel
