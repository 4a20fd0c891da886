#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fairsel/metrics.hpp"
#include "fairsel/paper_profile.hpp"
#include "fairsel/selection.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

struct SelectedPaperRow {
  std::string paper_id;
  std::string provenance;
  double pd_score = 0.0;
  double quality_score = 0.0;
  std::string venue_id;
};

// On-disk form of a selection run: selection.json plus a composition.csv breaking the
// picks down by venue and by source queue.
struct SelectionDocument {
  std::string algorithm;
  std::string weights;
  std::string parity_rule;
  int n_papers = 0;
  long long pool_size = 0;
  std::vector<SelectedPaperRow> selected;
  ParityVector achieved_parity;
  ParityVector pool_parity;
};

// Participation vectors and utilities entered directly, bypassing any dataset; lets
// published percentage tables be re-evaluated after dividing by 100. All vector
// components must be fractions in [0,1].
struct ReplayInput {
  ParityVector candidate;
  ParityVector baseline;
  ParityVector pool;
  double utility_candidate = 0.0;
  double utility_baseline = 0.0;
};

void write_selection_report(const SelectionResult& result, const std::vector<PaperProfile>& pool,
                            const ParityVector& pool_parity, const std::filesystem::path& dir);

SelectionDocument read_selection(const std::filesystem::path& path);

// Writes report.json plus participation.csv, diversity_gain.csv and metrics.csv; the
// CSV tables carry percentages.
void write_evaluation_report(const EvaluationReport& report, const std::filesystem::path& dir);

EvaluationReport read_evaluation(const std::filesystem::path& path);

ReplayInput read_replay(const std::filesystem::path& path);

}  // namespace fairsel
