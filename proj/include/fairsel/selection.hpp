#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fairsel/paper_profile.hpp"
#include "fairsel/parity.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

enum class Algorithm { OverallDiversity, MultiFaceted, RoundRobin };

// Stopping test used while draining demographic queues. Projected checks parity on
// the would-be final set (picks so far plus a quality-queue top-up); Proportional
// checks only the papers picked so far.
enum class ParityRule { Projected, Proportional };

std::string to_string(Algorithm a);
std::string to_string(ParityRule r);
Algorithm parse_algorithm(const std::string& text);
ParityRule parse_parity_rule(const std::string& text);

struct SelectionRequest {
  int n_papers = 0;
  WeightMode mode = WeightMode::Boolean;
  Algorithm algorithm = Algorithm::OverallDiversity;
  ParityRule parity_rule = ParityRule::Projected;
};

struct SelectionResult {
  std::vector<std::string> selected;    // paper ids in pick order
  std::vector<std::string> provenance;  // queue each pick came from, same order
  ParityVector achieved_parity;         // unique-author participation of the selection
  SelectionRequest request;
};

// Features sorted by ascending pool parity; equal rates keep the fixed feature order.
std::array<std::size_t, kFeatureCount> feature_processing_order(const ParityVector& pool_parity);

// Phase 1 drains a PDScore-ordered queue until the projected final set meets parity
// on every feature; phase 2 fills to N by quality. Provenance: demographic | quality.
SelectionResult overall_diversity(const std::vector<PaperProfile>& pool,
                                  const std::map<std::string, AuthorProfile>& authors,
                                  const SelectionRequest& request, const ParityVector& pool_parity);

// Per-feature quality-ordered queues drained in ascending pool-parity order, each
// until its own feature's parity is projected to hold; then a quality fill.
// Provenance: feature name | quality.
SelectionResult multifaceted(const std::vector<PaperProfile>& pool,
                             const std::map<std::string, AuthorProfile>& authors,
                             const SelectionRequest& request, const ParityVector& pool_parity);

// Cycles the five feature queues (each ordering the whole pool by one feature value)
// and takes the best unselected paper from each in turn. Provenance: feature name.
SelectionResult round_robin(const std::vector<PaperProfile>& pool,
                            const std::map<std::string, AuthorProfile>& authors,
                            const SelectionRequest& request);

SelectionResult select(const std::vector<PaperProfile>& pool,
                       const std::map<std::string, AuthorProfile>& authors,
                       const SelectionRequest& request, const ParityVector& pool_parity);

}  // namespace fairsel
