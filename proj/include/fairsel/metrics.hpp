#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fairsel/paper_profile.hpp"
#include "fairsel/parity.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

// How repeated authors are counted when averaging h-index. UniqueAuthors is the
// default; AuthorInstances weights an author once per selected paper.
enum class UtilityAccounting { UniqueAuthors, AuthorInstances };

std::string to_string(UtilityAccounting a);
UtilityAccounting parse_utility_accounting(const std::string& text);

struct DiversityGain {
  std::array<double, kFeatureCount> per_feature{};  // relative gains in percent, uncapped
  double d_g = 0.0;                                 // mean of the per-feature gains capped at 100
};

struct EvaluationReport {
  ParityVector candidate_participation;
  ParityVector baseline_participation;
  ParityVector pool_parity;
  std::array<double, kFeatureCount> per_feature_gain{};
  double diversity_gain = 0.0;
  double utility_candidate = 0.0;
  double utility_baseline = 0.0;
  double utility_loss = 0.0;
  double utility_savings = 0.0;       // 100 - utility_loss; above 100 when the candidate wins
  double f_diversity = 0.0;           // harmonic mean of diversity_gain and utility_savings
  double demographic_distance = 0.0;  // candidate vs pool
  double demographic_similarity = 0.0;
  double baseline_distance = 0.0;  // candidate vs baseline
  double baseline_similarity = 0.0;
  double f_parity = 0.0;  // harmonic mean of demographic_similarity and utility_savings
};

// Per-feature relative gain 100 * (candidate - baseline) / baseline; gains are capped
// at 100 inside the mean but never floored. Throws ZeroBaselineFeature naming the
// first feature whose baseline rate is 0.
DiversityGain diversity_gain(const ParityVector& candidate, const ParityVector& baseline);

// Mean h-index over the selection's authors. Throws EmptySelection and
// DanglingReference.
double utility(const std::vector<const PaperProfile*>& selection,
               const std::map<std::string, AuthorProfile>& authors,
               UtilityAccounting accounting = UtilityAccounting::UniqueAuthors);

double utility(const std::vector<PaperProfile>& selection,
               const std::map<std::string, AuthorProfile>& authors,
               UtilityAccounting accounting = UtilityAccounting::UniqueAuthors);

// Returns {loss, savings} in percent: loss = (u_baseline - u_candidate) / u_baseline
// * 100, savings = 100 - loss. Throws ZeroBaselineUtility when u_baseline is not
// positive.
std::pair<double, double> utility_loss_savings(double u_candidate, double u_baseline);

// Harmonic-mean combination 2ab / (a + b). Throws DegenerateDenominator when
// a + b == 0.
double f_measure(double a, double b);

// Euclidean distance over the five fraction-valued components.
double demographic_distance(const ParityVector& f1, const ParityVector& f2);

// 100 * (1 - distance / sqrt(5)); sqrt(5) is the widest distance two parity vectors
// can be apart.
double demographic_similarity(const ParityVector& f1, const ParityVector& f2);

// Assembles the full report from already-measured participation rates and utilities.
EvaluationReport evaluate_vectors(const ParityVector& candidate, const ParityVector& baseline,
                                  const ParityVector& pool_parity, double utility_candidate,
                                  double utility_baseline);

// Measures both selections against the dataset and assembles the report. Throws
// EmptySelection / EmptyBaseline on empty inputs and propagates metric errors.
EvaluationReport evaluate(const std::vector<const PaperProfile*>& candidate,
                          const std::vector<const PaperProfile*>& baseline,
                          const std::map<std::string, AuthorProfile>& authors,
                          const ParityVector& pool_parity,
                          UtilityAccounting utility_accounting = UtilityAccounting::UniqueAuthors,
                          ParityAccounting parity_accounting = ParityAccounting::UniqueAuthors);

EvaluationReport evaluate(const std::vector<PaperProfile>& candidate,
                          const std::vector<PaperProfile>& baseline,
                          const std::map<std::string, AuthorProfile>& authors,
                          const ParityVector& pool_parity,
                          UtilityAccounting utility_accounting = UtilityAccounting::UniqueAuthors,
                          ParityAccounting parity_accounting = ParityAccounting::UniqueAuthors);

}  // namespace fairsel
