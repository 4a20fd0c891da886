#include "fairsel/synthetic.hpp"

#include <limits>
#include <random>
#include <set>
#include <string>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

namespace {

// Draws go through these helpers only; std::uniform_int_distribution and friends are
// implementation-defined, which would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t r = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    std::uint64_t v = gen_();
    if (r != 0) {
      const std::uint64_t limit = 0 - r;
      while (v >= limit) v = gen_();
    }
    return v % n;
  }

  double unit_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit_real() < p; }

 private:
  std::mt19937_64 gen_;
};

int digit_count(int n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

std::string padded_id(char prefix, int value, int width) {
  std::string digits = std::to_string(value);
  std::string out(1, prefix);
  out.append(static_cast<std::size_t>(width) - digits.size(), '0');
  out += digits;
  return out;
}

constexpr int kSharedRank = 500;

const std::vector<std::string>& developing_picks() {
  static const std::vector<std::string> v = {"India", "China", "Brazil",
                                             "Mexico", "Nigeria", "Iraq"};
  return v;
}

const std::vector<std::string>& developed_picks() {
  static const std::vector<std::string> v = {"Germany", "Norway",    "Japan",
                                             "Canada",  "Australia", "United Kingdom"};
  return v;
}

const std::vector<std::string>& epscor_picks() {
  static const std::vector<std::string> v = {"Arkansas", "Kansas", "Montana", "Vermont"};
  return v;
}

const std::vector<std::string>& non_epscor_picks() {
  static const std::vector<std::string> v = {"California", "New York", "Massachusetts", "Texas"};
  return v;
}

}  // namespace

void validate_spec(const SyntheticSpec& spec) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); };
  if (spec.author_count < 1) fail("author_count must be at least 1");
  if (spec.paper_count < 1) fail("paper_count must be at least 1");
  if (spec.min_authors_per_paper < 1) fail("min_authors_per_paper must be at least 1");
  if (spec.max_authors_per_paper < spec.min_authors_per_paper) {
    fail("max_authors_per_paper must be at least min_authors_per_paper");
  }
  if (spec.max_authors_per_paper > spec.author_count) {
    fail("max_authors_per_paper exceeds author_count");
  }
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (spec.base_rates[i] < 0.0 || spec.base_rates[i] > 1.0) {
      fail(std::string(kFeatureNames[i]) + " base rate " + format_double(spec.base_rates[i]) +
           " is outside [0,1]");
    }
  }
  if (spec.base_rates[3] >= 0.5) {
    fail("university base rate " + format_double(spec.base_rates[3]) +
         " is not realizable by a median split; it must stay below 0.5");
  }
  if (spec.venue_impact_factors.empty()) fail("at least one venue impact factor is required");
  for (double f : spec.venue_impact_factors) {
    if (!(f > 0.0)) fail("venue impact factor " + format_double(f) + " is not positive");
  }
  if (spec.h_index_min < 0) fail("h_index_min must be non-negative");
  if (spec.h_index_max < spec.h_index_min) fail("h_index_max must be at least h_index_min");
}

Dataset generate_dataset(const SyntheticSpec& spec) {
  validate_spec(spec);
  Rng rng(spec.seed);
  Dataset dataset;

  for (std::size_t i = 0; i < spec.venue_impact_factors.size(); ++i) {
    VenueRecord venue;
    venue.venue_id = "v" + std::to_string(i + 1);
    venue.impact_factor = spec.venue_impact_factors[i];
    dataset.venues.emplace(venue.venue_id, venue);
  }

  const int author_width = digit_count(spec.author_count);
  int protected_rank_counter = 0;
  std::vector<std::string> author_ids;
  author_ids.reserve(spec.author_count);
  for (int i = 1; i <= spec.author_count; ++i) {
    AuthorRecord author;
    author.author_id = padded_id('a', i, author_width);
    author_ids.push_back(author.author_id);

    author.gender_label = rng.bernoulli(spec.base_rates[0]) ? Gender::Female : Gender::Male;

    if (rng.bernoulli(spec.base_rates[1])) {
      static constexpr std::array<Ethnicity, 4> kProtected = {Ethnicity::Black, Ethnicity::Hispanic,
                                                              Ethnicity::Asian, Ethnicity::Other};
      author.ethnicity_category = kProtected[rng.bounded(kProtected.size())];
    } else {
      author.ethnicity_category = Ethnicity::White;
    }

    if (rng.bernoulli(spec.base_rates[2])) {
      static constexpr std::array<CareerStage, 3> kJunior = {CareerStage::AssistantOrLecturer,
                                                             CareerStage::PostdocOrFellow,
                                                             CareerStage::GraduateStudent};
      author.position_title = kJunior[rng.bounded(kJunior.size())];
    } else {
      static constexpr std::array<CareerStage, 3> kSenior = {CareerStage::DistinguishedProfessor,
                                                             CareerStage::Professor,
                                                             CareerStage::AssociateProfessor};
      author.position_title = kSenior[rng.bounded(kSenior.size())];
    }

    if (rng.bernoulli(spec.base_rates[3])) {
      author.university_rank = kSharedRank + 1 + protected_rank_counter++;
    } else {
      author.university_rank = kSharedRank;
    }
    author.university_name = "University " + std::to_string(author.university_rank);

    if (rng.bernoulli(spec.base_rates[4])) {
      if (rng.bernoulli(0.5)) {
        author.country = developing_picks()[rng.bounded(developing_picks().size())];
      } else {
        author.country = "USA";
        author.us_state = epscor_picks()[rng.bounded(epscor_picks().size())];
      }
    } else {
      if (rng.bernoulli(0.5)) {
        author.country = developed_picks()[rng.bounded(developed_picks().size())];
      } else {
        author.country = "USA";
        author.us_state = non_epscor_picks()[rng.bounded(non_epscor_picks().size())];
      }
    }

    const int h_span = spec.h_index_max - spec.h_index_min + 1;
    author.h_index = spec.h_index_min + static_cast<int>(rng.bounded(h_span));

    dataset.authors.emplace(author.author_id, author);
  }

  const int paper_width = digit_count(spec.paper_count);
  for (int i = 1; i <= spec.paper_count; ++i) {
    PaperRecord paper;
    paper.paper_id = padded_id('p', i, paper_width);
    paper.venue_id = "v" + std::to_string(rng.bounded(spec.venue_impact_factors.size()) + 1);
    const int span = spec.max_authors_per_paper - spec.min_authors_per_paper + 1;
    const int count = spec.min_authors_per_paper + static_cast<int>(rng.bounded(span));
    std::set<std::size_t> used;
    while (static_cast<int>(paper.author_ids.size()) < count) {
      const std::size_t pick = rng.bounded(author_ids.size());
      if (used.insert(pick).second) paper.author_ids.push_back(author_ids[pick]);
    }
    dataset.papers.emplace(paper.paper_id, paper);
  }

  return dataset;
}

}  // namespace fairsel
