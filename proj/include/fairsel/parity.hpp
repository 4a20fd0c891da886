#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairsel/paper_profile.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

// How repeated authors are counted when measuring participation. UniqueAuthors is the
// default; AuthorInstances counts one entry per authorship and exists for sensitivity
// analysis.
enum class ParityAccounting { UniqueAuthors, AuthorInstances };

std::string to_string(ParityAccounting a);
ParityAccounting parse_parity_accounting(const std::string& text);

// Per-feature fraction of protected authors, each author counted once. Throws
// EmptyPool on an empty author list.
ParityVector compute_pool_parity(const std::vector<AuthorProfile>& authors);

// Participation of the authors behind a paper selection, measured on Boolean
// protected flags regardless of the profiles' weight mode. Throws EmptyPool on an
// empty selection and DanglingReference on an unresolvable author id.
ParityVector participation(const std::vector<const PaperProfile*>& selection,
                           const std::map<std::string, AuthorProfile>& authors,
                           ParityAccounting accounting = ParityAccounting::UniqueAuthors);

ParityVector participation(const std::vector<PaperProfile>& selection,
                           const std::map<std::string, AuthorProfile>& authors,
                           ParityAccounting accounting = ParityAccounting::UniqueAuthors);

// True iff every requested component meets or exceeds the target. Comparison is a
// plain >= with no epsilon. Without a subset all five features are checked.
bool parity_met(const ParityVector& selection_parity, const ParityVector& target,
                const std::optional<std::array<bool, kFeatureCount>>& feature_subset = std::nullopt);

}  // namespace fairsel
