#include <doctest.h>

#include <fstream>

#include "fairsel/error.hpp"
#include "fairsel/metrics.hpp"
#include "fairsel/parity.hpp"
#include "fairsel/profiling.hpp"
#include "fairsel/report_io.hpp"
#include "fairsel/selection.hpp"
#include "fixtures.hpp"

using namespace fairsel;

namespace {

struct RunSetup {
  std::map<std::string, AuthorProfile> authors;
  std::vector<PaperProfile> pool;
  ParityVector pool_parity;
  SelectionResult result;
};

RunSetup run_fixture_selection() {
  const Dataset d = fixtures::six_paper_pool();
  RunSetup s;
  s.authors = build_author_profiles(d, fixtures::tables());
  s.pool = build_paper_profiles(d, WeightMode::Boolean, s.authors);
  std::vector<AuthorProfile> all;
  for (const auto& [id, a] : s.authors) all.push_back(a);
  s.pool_parity = compute_pool_parity(all);
  SelectionRequest req;
  req.n_papers = 4;
  req.algorithm = Algorithm::OverallDiversity;
  s.result = select(s.pool, s.authors, req, s.pool_parity);
  return s;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("selection report round-trips through selection.json") {
  const auto dir = fixtures::fresh_dir("io_selection");
  const RunSetup s = run_fixture_selection();
  write_selection_report(s.result, s.pool, s.pool_parity, dir);

  const SelectionDocument doc = read_selection(dir / "selection.json");
  CHECK(doc.algorithm == "overall");
  CHECK(doc.weights == "boolean");
  CHECK(doc.parity_rule == "projected");
  CHECK(doc.n_papers == 4);
  CHECK(doc.pool_size == 6);
  REQUIRE(doc.selected.size() == 4);
  for (std::size_t i = 0; i < doc.selected.size(); ++i) {
    CHECK(doc.selected[i].paper_id == s.result.selected[i]);
    CHECK(doc.selected[i].provenance == s.result.provenance[i]);
  }
  CHECK(doc.selected[0].paper_id == "p3");
  CHECK(doc.selected[0].pd_score == doctest::Approx(5.0));
  CHECK(doc.selected[0].quality_score == doctest::Approx(30.0));
  CHECK(doc.selected[0].venue_id == "v2");
  CHECK(doc.achieved_parity == s.result.achieved_parity);
  CHECK(doc.pool_parity == s.pool_parity);
}

TEST_CASE("composition.csv breaks the selection down by venue and queue") {
  const auto dir = fixtures::fresh_dir("io_composition");
  const RunSetup s = run_fixture_selection();
  write_selection_report(s.result, s.pool, s.pool_parity, dir);

  const auto lines = read_lines(dir / "composition.csv");
  REQUIRE(lines.size() >= 4);
  CHECK(lines.front() == "section,key,count,share");
  CHECK(lines.back() == "total,papers,4,100");

  int venue_rows = 0;
  int queue_rows = 0;
  for (const std::string& line : lines) {
    if (line.rfind("venue,", 0) == 0) ++venue_rows;
    if (line.rfind("queue,", 0) == 0) ++queue_rows;
  }
  CHECK(venue_rows == 2);
  CHECK(queue_rows == 2);

  bool found_demographic = false;
  for (const std::string& line : lines) {
    if (line.rfind("queue,demographic,2,", 0) == 0) found_demographic = true;
  }
  CHECK(found_demographic);
}

TEST_CASE("evaluation report round-trips through report.json") {
  const auto dir = fixtures::fresh_dir("io_evaluation");
  const ParityVector candidate{0.6296, 0.2308, 0.7379, 0.4245, 0.1453};
  const ParityVector baseline{0.4501, 0.0769, 0.5214, 0.2564, 0.0826};
  const ParityVector pool{0.4707, 0.1871, 0.5955, 0.3233, 0.1115};
  const EvaluationReport report = evaluate_vectors(candidate, baseline, pool, 93.47, 100.0);
  write_evaluation_report(report, dir);

  const EvaluationReport loaded = read_evaluation(dir / "report.json");
  CHECK(loaded.candidate_participation == report.candidate_participation);
  CHECK(loaded.baseline_participation == report.baseline_participation);
  CHECK(loaded.pool_parity == report.pool_parity);
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    CHECK(loaded.per_feature_gain[i] == doctest::Approx(report.per_feature_gain[i]));
  }
  CHECK(loaded.diversity_gain == doctest::Approx(report.diversity_gain));
  CHECK(loaded.utility_candidate == doctest::Approx(report.utility_candidate));
  CHECK(loaded.utility_baseline == doctest::Approx(report.utility_baseline));
  CHECK(loaded.utility_loss == doctest::Approx(report.utility_loss));
  CHECK(loaded.utility_savings == doctest::Approx(report.utility_savings));
  CHECK(loaded.f_diversity == doctest::Approx(report.f_diversity));
  CHECK(loaded.demographic_distance == doctest::Approx(report.demographic_distance));
  CHECK(loaded.demographic_similarity == doctest::Approx(report.demographic_similarity));
  CHECK(loaded.baseline_distance == doctest::Approx(report.baseline_distance));
  CHECK(loaded.baseline_similarity == doctest::Approx(report.baseline_similarity));
  CHECK(loaded.f_parity == doctest::Approx(report.f_parity));
}

TEST_CASE("evaluation CSV companions carry the expected headers") {
  const auto dir = fixtures::fresh_dir("io_csv");
  const EvaluationReport report =
      evaluate_vectors({0.5, 0.2, 0.6, 0.4, 0.2}, {0.4, 0.1, 0.5, 0.3, 0.1},
                       {0.45, 0.15, 0.55, 0.35, 0.15}, 40.0, 50.0);
  write_evaluation_report(report, dir);

  const auto participation = read_lines(dir / "participation.csv");
  REQUIRE(participation.size() == 6);
  CHECK(participation.front() == "feature,candidate_pct,baseline_pct,pool_pct");
  CHECK(participation[1].rfind("gender,", 0) == 0);

  const auto gains = read_lines(dir / "diversity_gain.csv");
  REQUIRE(gains.size() == 6);
  CHECK(gains.front() == "feature,gain_pct,capped_gain_pct");

  const auto metrics = read_lines(dir / "metrics.csv");
  REQUIRE(metrics.size() == 12);
  CHECK(metrics.front() == "metric,value");
  CHECK(metrics[1].rfind("diversity_gain,", 0) == 0);
  CHECK(metrics.back().rfind("f_parity,", 0) == 0);
}

TEST_CASE("read_selection rejects documents missing required fields") {
  const auto dir = fixtures::fresh_dir("io_bad_selection");
  const auto path = dir / "selection.json";
  std::ofstream(path) << "{\"algorithm\": \"overall\"}";
  try {
    read_selection(path);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("read_replay accepts fraction vectors with utilities") {
  const auto dir = fixtures::fresh_dir("io_replay");
  const auto path = dir / "replay.json";
  std::ofstream(path)
      << "{\"candidate\": {\"gender\": 0.6296, \"ethnicity\": 0.2308, \"career_stage\": 0.7379,"
         "\"university_rank\": 0.4245, \"geolocation\": 0.1453},"
         "\"baseline\": {\"gender\": 0.4501, \"ethnicity\": 0.0769, \"career_stage\": 0.5214,"
         "\"university_rank\": 0.2564, \"geolocation\": 0.0826},"
         "\"pool\": {\"gender\": 0.4707, \"ethnicity\": 0.1871, \"career_stage\": 0.5955,"
         "\"university_rank\": 0.3233, \"geolocation\": 0.1115},"
         "\"utility_candidate\": 93.47, \"utility_baseline\": 100.0}";
  const ReplayInput input = read_replay(path);
  CHECK(input.candidate.gender_wt == doctest::Approx(0.6296));
  CHECK(input.pool.geo_wt == doctest::Approx(0.1115));
  CHECK(input.utility_candidate == doctest::Approx(93.47));
  CHECK(input.utility_baseline == doctest::Approx(100.0));
}

TEST_CASE("read_replay rejects rates outside the unit interval and missing vectors") {
  const auto dir = fixtures::fresh_dir("io_replay_bad");

  const auto out_of_range = dir / "range.json";
  std::ofstream(out_of_range)
      << "{\"candidate\": {\"gender\": 62.96, \"ethnicity\": 0.2, \"career_stage\": 0.7,"
         "\"university_rank\": 0.4, \"geolocation\": 0.1},"
         "\"baseline\": {\"gender\": 0.4, \"ethnicity\": 0.1, \"career_stage\": 0.5,"
         "\"university_rank\": 0.2, \"geolocation\": 0.1},"
         "\"pool\": {\"gender\": 0.4, \"ethnicity\": 0.1, \"career_stage\": 0.5,"
         "\"university_rank\": 0.3, \"geolocation\": 0.1},"
         "\"utility_candidate\": 93.0, \"utility_baseline\": 100.0}";
  try {
    read_replay(out_of_range);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("fractions") != std::string::npos);
  }

  const auto missing = dir / "missing.json";
  std::ofstream(missing) << "{\"candidate\": {\"gender\": 0.5, \"ethnicity\": 0.2,"
                            "\"career_stage\": 0.7, \"university_rank\": 0.4,"
                            "\"geolocation\": 0.1}, \"utility_candidate\": 93.0,"
                            "\"utility_baseline\": 100.0}";
  try {
    read_replay(missing);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("selection writer creates a missing output directory") {
  const RunSetup s = run_fixture_selection();
  const auto dir = fixtures::fresh_dir("io_nested") / "absent" / "deeper";
  write_selection_report(s.result, s.pool, s.pool_parity, dir);
  CHECK(std::filesystem::exists(dir / "selection.json"));
  CHECK(std::filesystem::exists(dir / "composition.csv"));
}

TEST_CASE("report writers fail cleanly on an unopenable output file") {
  const RunSetup s = run_fixture_selection();
  const auto dir = fixtures::fresh_dir("io_blocked");
  std::filesystem::create_directories(dir / "selection.json");
  try {
    write_selection_report(s.result, s.pool, s.pool_parity, dir);
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
