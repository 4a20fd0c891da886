#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairsel/reference_tables.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

// Share of women among computing professionals; the continuous gender weight is its
// complement for the protected group. Tied to the population the engine models, so it
// lives in code rather than in the reference-table config.
inline constexpr double kFemaleShare = 0.27;

double encode_gender(Gender gender, WeightMode mode);

double encode_ethnicity(Ethnicity category, WeightMode mode, const ReferenceTables& tables);

double encode_career_stage(CareerStage title, WeightMode mode, const ReferenceTables& tables);

// pool_ranks carries one entry per author in the dataset. Boolean: 1 iff the rank is
// strictly above the split statistic (ties are non-protected). Continuous: rank divided
// by the pool's largest rank, so the worst-ranked institution maps to 1.
double encode_university_rank(int author_rank, const std::vector<int>& pool_ranks,
                              WeightMode mode, RankSplit split = RankSplit::Median);

// Boolean: developing country or US EPSCoR state -> 1. Continuous: 1 - HDI(country);
// US authors use the national HDI regardless of state.
double encode_geolocation(const std::string& country, const std::optional<std::string>& us_state,
                          WeightMode mode, const ReferenceTables& tables);

double rank_split_value(const std::vector<int>& pool_ranks, RankSplit split);

std::vector<int> collect_pool_ranks(const Dataset& dataset);

AuthorProfile build_author_profile(const AuthorRecord& record, const std::vector<int>& pool_ranks,
                                   const ReferenceTables& tables,
                                   RankSplit split = RankSplit::Median);

std::map<std::string, AuthorProfile> build_author_profiles(const Dataset& dataset,
                                                           const ReferenceTables& tables,
                                                           RankSplit split = RankSplit::Median);

}  // namespace fairsel
