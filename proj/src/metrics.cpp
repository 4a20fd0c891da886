#include "fairsel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

std::string to_string(UtilityAccounting a) {
  return a == UtilityAccounting::UniqueAuthors ? "unique" : "instances";
}

UtilityAccounting parse_utility_accounting(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "unique") return UtilityAccounting::UniqueAuthors;
  if (t == "instances") return UtilityAccounting::AuthorInstances;
  throw Error(ErrorCode::ParseError, "unknown utility accounting '" + text + "'");
}

DiversityGain diversity_gain(const ParityVector& candidate, const ParityVector& baseline) {
  DiversityGain gain;
  double capped_sum = 0.0;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (baseline[i] == 0.0) {
      throw Error(ErrorCode::ZeroBaselineFeature,
                  std::string("baseline rate for ") + kFeatureNames[i] + " is 0");
    }
    gain.per_feature[i] = 100.0 * (candidate[i] - baseline[i]) / baseline[i];
    capped_sum += std::min(100.0, gain.per_feature[i]);
  }
  gain.d_g = capped_sum / static_cast<double>(kFeatureCount);
  return gain;
}

double utility(const std::vector<const PaperProfile*>& selection,
               const std::map<std::string, AuthorProfile>& authors, UtilityAccounting accounting) {
  if (selection.empty()) throw Error(ErrorCode::EmptySelection, "no selected papers to average");
  std::set<std::string> seen;
  long long sum = 0;
  long long count = 0;
  for (const PaperProfile* paper : selection) {
    for (const std::string& author_id : paper->author_ids) {
      if (accounting == UtilityAccounting::UniqueAuthors && !seen.insert(author_id).second) {
        continue;
      }
      auto it = authors.find(author_id);
      if (it == authors.end()) {
        throw Error(ErrorCode::DanglingReference,
                    "paper " + paper->paper_id + " references unprofiled author " + author_id);
      }
      sum += it->second.h_index;
      ++count;
    }
  }
  return static_cast<double>(sum) / static_cast<double>(count);
}

double utility(const std::vector<PaperProfile>& selection,
               const std::map<std::string, AuthorProfile>& authors, UtilityAccounting accounting) {
  std::vector<const PaperProfile*> ptrs;
  ptrs.reserve(selection.size());
  for (const PaperProfile& p : selection) ptrs.push_back(&p);
  return utility(ptrs, authors, accounting);
}

std::pair<double, double> utility_loss_savings(double u_candidate, double u_baseline) {
  if (u_baseline <= 0.0) {
    throw Error(ErrorCode::ZeroBaselineUtility,
                "baseline utility " + format_double(u_baseline) + " is not positive");
  }
  const double loss = (u_baseline - u_candidate) / u_baseline * 100.0;
  return {loss, 100.0 - loss};
}

double f_measure(double a, double b) {
  if (a + b == 0.0) {
    throw Error(ErrorCode::DegenerateDenominator,
                "harmonic mean of " + format_double(a) + " and " + format_double(b));
  }
  return 2.0 * a * b / (a + b);
}

double demographic_distance(const ParityVector& f1, const ParityVector& f2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    const double d = f1[i] - f2[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double demographic_similarity(const ParityVector& f1, const ParityVector& f2) {
  return 100.0 * (1.0 - demographic_distance(f1, f2) / std::sqrt(5.0));
}

EvaluationReport evaluate_vectors(const ParityVector& candidate, const ParityVector& baseline,
                                  const ParityVector& pool_parity, double utility_candidate,
                                  double utility_baseline) {
  EvaluationReport report;
  report.candidate_participation = candidate;
  report.baseline_participation = baseline;
  report.pool_parity = pool_parity;
  const DiversityGain gain = diversity_gain(candidate, baseline);
  report.per_feature_gain = gain.per_feature;
  report.diversity_gain = gain.d_g;
  report.utility_candidate = utility_candidate;
  report.utility_baseline = utility_baseline;
  const auto [loss, savings] = utility_loss_savings(utility_candidate, utility_baseline);
  report.utility_loss = loss;
  report.utility_savings = savings;
  report.f_diversity = f_measure(report.diversity_gain, report.utility_savings);
  report.demographic_distance = demographic_distance(candidate, pool_parity);
  report.demographic_similarity = demographic_similarity(candidate, pool_parity);
  report.baseline_distance = demographic_distance(candidate, baseline);
  report.baseline_similarity = demographic_similarity(candidate, baseline);
  report.f_parity = f_measure(report.demographic_similarity, report.utility_savings);
  return report;
}

EvaluationReport evaluate(const std::vector<const PaperProfile*>& candidate,
                          const std::vector<const PaperProfile*>& baseline,
                          const std::map<std::string, AuthorProfile>& authors,
                          const ParityVector& pool_parity, UtilityAccounting utility_accounting,
                          ParityAccounting parity_accounting) {
  if (candidate.empty()) throw Error(ErrorCode::EmptySelection, "candidate selection is empty");
  if (baseline.empty()) throw Error(ErrorCode::EmptyBaseline, "baseline selection is empty");
  return evaluate_vectors(participation(candidate, authors, parity_accounting),
                          participation(baseline, authors, parity_accounting), pool_parity,
                          utility(candidate, authors, utility_accounting),
                          utility(baseline, authors, utility_accounting));
}

EvaluationReport evaluate(const std::vector<PaperProfile>& candidate,
                          const std::vector<PaperProfile>& baseline,
                          const std::map<std::string, AuthorProfile>& authors,
                          const ParityVector& pool_parity, UtilityAccounting utility_accounting,
                          ParityAccounting parity_accounting) {
  std::vector<const PaperProfile*> c;
  std::vector<const PaperProfile*> b;
  c.reserve(candidate.size());
  b.reserve(baseline.size());
  for (const PaperProfile& p : candidate) c.push_back(&p);
  for (const PaperProfile& p : baseline) b.push_back(&p);
  return evaluate(c, b, authors, pool_parity, utility_accounting, parity_accounting);
}

}  // namespace fairsel
