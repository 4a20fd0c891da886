#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fairsel/types.hpp"

namespace fairsel {

// Recipe for a seeded random dataset whose protected rates converge to base_rates as
// the author count grows. Rates follow the fixed feature order.
struct SyntheticSpec {
  int author_count = 0;
  int paper_count = 0;
  int min_authors_per_paper = 1;
  int max_authors_per_paper = 3;
  std::array<double, kFeatureCount> base_rates{0.4707, 0.1871, 0.5955, 0.3233, 0.1115};
  std::vector<double> venue_impact_factors{87.0, 33.0, 27.0};
  int h_index_min = 0;
  int h_index_max = 60;
  std::uint64_t seed = 0;
};

// Throws InvalidArgument on nonpositive counts, bad author-per-paper bounds, rates
// outside [0,1], nonpositive impact factors, or a bad h-index range. The university
// rate must additionally stay below 0.5: protected ranks sit above the whole
// non-protected block, so once half the pool is protected the median splits the
// protected block itself and the rate cannot be realized.
void validate_spec(const SyntheticSpec& spec);

// Deterministic for a fixed spec, byte for byte. The realized protected rate of every
// feature is the sampled count over the author total; university flags come out exact
// because every non-protected author shares one rank below the protected block.
Dataset generate_dataset(const SyntheticSpec& spec);

}  // namespace fairsel
