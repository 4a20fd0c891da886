#pragma once

#include <map>
#include <string>
#include <vector>

#include "fairsel/paper_profile.hpp"
#include "fairsel/selection.hpp"

namespace oracle {

// Naive re-implementation of the three selection strategies used to cross-check the
// library: fresh linear scans instead of sorted queues and explicit set rebuilds
// instead of incremental bookkeeping. Shares only the data-model structs with the
// production code.
fairsel::SelectionResult run(const std::vector<fairsel::PaperProfile>& pool,
                             const std::map<std::string, fairsel::AuthorProfile>& authors,
                             const fairsel::SelectionRequest& request,
                             const fairsel::ParityVector& pool_parity);

}  // namespace oracle
