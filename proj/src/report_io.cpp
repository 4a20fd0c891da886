#include "fairsel/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "fairsel/csv.hpp"
#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

namespace {

using json = nlohmann::ordered_json;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::ParseError, path.string() + ": malformed JSON");
  }
  return doc;
}

json parity_to_json(const ParityVector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < kFeatureCount; ++i) out[kFeatureNames[i]] = v[i];
  return out;
}

ParityVector parity_from_json(const json& node, const std::string& where) {
  if (!node.is_object()) throw Error(ErrorCode::ParseError, where + ": expected an object");
  ParityVector v;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    auto it = node.find(kFeatureNames[i]);
    if (it == node.end() || !it->is_number()) {
      throw Error(ErrorCode::ParseError,
                  where + ": missing numeric field '" + kFeatureNames[i] + "'");
    }
    v[i] = it->get<double>();
  }
  return v;
}

double require_number(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_number()) {
    throw Error(ErrorCode::ParseError, where + ": missing numeric field '" + std::string(key) + "'");
  }
  return it->get<double>();
}

std::string require_string(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) {
    throw Error(ErrorCode::ParseError, where + ": missing string field '" + std::string(key) + "'");
  }
  return it->get<std::string>();
}

}  // namespace

void write_selection_report(const SelectionResult& result, const std::vector<PaperProfile>& pool,
                            const ParityVector& pool_parity, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::map<std::string, const PaperProfile*> by_id;
  for (const PaperProfile& p : pool) by_id.emplace(p.paper_id, &p);

  json doc;
  doc["algorithm"] = to_string(result.request.algorithm);
  doc["weights"] = to_string(result.request.mode);
  doc["parity_rule"] = to_string(result.request.parity_rule);
  doc["n_papers"] = result.request.n_papers;
  doc["pool_size"] = pool.size();
  json selected = json::array();
  for (std::size_t i = 0; i < result.selected.size(); ++i) {
    auto it = by_id.find(result.selected[i]);
    if (it == by_id.end()) {
      throw Error(ErrorCode::DanglingReference,
                  "selection lists paper " + result.selected[i] + " absent from the pool");
    }
    json row;
    row["paper_id"] = it->second->paper_id;
    row["provenance"] = result.provenance[i];
    row["pd_score"] = it->second->pd_score;
    row["quality_score"] = it->second->quality_score;
    row["venue_id"] = it->second->venue_id;
    selected.push_back(std::move(row));
  }
  doc["selected"] = std::move(selected);
  doc["achieved_parity"] = parity_to_json(result.achieved_parity);
  doc["pool_parity"] = parity_to_json(pool_parity);
  open_out(dir / "selection.json") << doc.dump(2) << '\n';

  std::map<std::string, long long> venue_counts;
  for (const std::string& id : result.selected) ++venue_counts[by_id.at(id)->venue_id];
  std::map<std::string, long long> queue_counts;
  for (const std::string& label : result.provenance) ++queue_counts[label];
  std::vector<std::string> queue_order = {"quality", "demographic"};
  for (const char* name : kFeatureNames) queue_order.emplace_back(name);

  std::ofstream csv = open_out(dir / "composition.csv");
  write_csv_row(csv, {"section", "key", "count", "share"});
  const double total = static_cast<double>(result.selected.size());
  for (const auto& [venue, count] : venue_counts) {
    write_csv_row(csv, {"venue", venue, std::to_string(count),
                        format_double(100.0 * static_cast<double>(count) / total)});
  }
  for (const std::string& label : queue_order) {
    auto it = queue_counts.find(label);
    if (it == queue_counts.end()) continue;
    write_csv_row(csv, {"queue", label, std::to_string(it->second),
                        format_double(100.0 * static_cast<double>(it->second) / total)});
  }
  write_csv_row(csv, {"total", "papers", std::to_string(result.selected.size()), "100"});
}

SelectionDocument read_selection(const std::filesystem::path& path) {
  const json doc = load_json(path);
  const std::string where = path.string();
  SelectionDocument out;
  out.algorithm = require_string(doc, "algorithm", where);
  out.weights = require_string(doc, "weights", where);
  out.parity_rule = require_string(doc, "parity_rule", where);
  out.n_papers = static_cast<int>(require_number(doc, "n_papers", where));
  out.pool_size = static_cast<long long>(require_number(doc, "pool_size", where));
  auto sel = doc.find("selected");
  if (sel == doc.end() || !sel->is_array()) {
    throw Error(ErrorCode::ParseError, where + ": missing array field 'selected'");
  }
  for (const json& row : *sel) {
    SelectedPaperRow r;
    r.paper_id = require_string(row, "paper_id", where);
    r.provenance = require_string(row, "provenance", where);
    r.pd_score = require_number(row, "pd_score", where);
    r.quality_score = require_number(row, "quality_score", where);
    r.venue_id = require_string(row, "venue_id", where);
    out.selected.push_back(std::move(r));
  }
  auto achieved = doc.find("achieved_parity");
  auto pool = doc.find("pool_parity");
  if (achieved == doc.end() || pool == doc.end()) {
    throw Error(ErrorCode::ParseError, where + ": missing parity vectors");
  }
  out.achieved_parity = parity_from_json(*achieved, where + ": achieved_parity");
  out.pool_parity = parity_from_json(*pool, where + ": pool_parity");
  return out;
}

void write_evaluation_report(const EvaluationReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  json doc;
  doc["candidate_participation"] = parity_to_json(report.candidate_participation);
  doc["baseline_participation"] = parity_to_json(report.baseline_participation);
  doc["pool_parity"] = parity_to_json(report.pool_parity);
  json gains = json::object();
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    gains[kFeatureNames[i]] = report.per_feature_gain[i];
  }
  doc["per_feature_gain"] = std::move(gains);
  doc["diversity_gain"] = report.diversity_gain;
  doc["utility_candidate"] = report.utility_candidate;
  doc["utility_baseline"] = report.utility_baseline;
  doc["utility_loss"] = report.utility_loss;
  doc["utility_savings"] = report.utility_savings;
  doc["f_diversity"] = report.f_diversity;
  doc["demographic_distance"] = report.demographic_distance;
  doc["demographic_similarity"] = report.demographic_similarity;
  doc["baseline_distance"] = report.baseline_distance;
  doc["baseline_similarity"] = report.baseline_similarity;
  doc["f_parity"] = report.f_parity;
  open_out(dir / "report.json") << doc.dump(2) << '\n';

  std::ofstream participation = open_out(dir / "participation.csv");
  write_csv_row(participation, {"feature", "candidate_pct", "baseline_pct", "pool_pct"});
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    write_csv_row(participation, {kFeatureNames[i],
                                  format_double(100.0 * report.candidate_participation[i]),
                                  format_double(100.0 * report.baseline_participation[i]),
                                  format_double(100.0 * report.pool_parity[i])});
  }

  std::ofstream gain_csv = open_out(dir / "diversity_gain.csv");
  write_csv_row(gain_csv, {"feature", "gain_pct", "capped_gain_pct"});
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    write_csv_row(gain_csv, {kFeatureNames[i], format_double(report.per_feature_gain[i]),
                             format_double(std::min(100.0, report.per_feature_gain[i]))});
  }

  std::ofstream metrics = open_out(dir / "metrics.csv");
  write_csv_row(metrics, {"metric", "value"});
  write_csv_row(metrics, {"diversity_gain", format_double(report.diversity_gain)});
  write_csv_row(metrics, {"utility_candidate", format_double(report.utility_candidate)});
  write_csv_row(metrics, {"utility_baseline", format_double(report.utility_baseline)});
  write_csv_row(metrics, {"utility_loss", format_double(report.utility_loss)});
  write_csv_row(metrics, {"utility_savings", format_double(report.utility_savings)});
  write_csv_row(metrics, {"f_diversity", format_double(report.f_diversity)});
  write_csv_row(metrics, {"demographic_distance", format_double(report.demographic_distance)});
  write_csv_row(metrics, {"demographic_similarity", format_double(report.demographic_similarity)});
  write_csv_row(metrics, {"baseline_distance", format_double(report.baseline_distance)});
  write_csv_row(metrics, {"baseline_similarity", format_double(report.baseline_similarity)});
  write_csv_row(metrics, {"f_parity", format_double(report.f_parity)});
}

EvaluationReport read_evaluation(const std::filesystem::path& path) {
  const json doc = load_json(path);
  const std::string where = path.string();
  EvaluationReport report;
  auto cand = doc.find("candidate_participation");
  auto base = doc.find("baseline_participation");
  auto pool = doc.find("pool_parity");
  if (cand == doc.end() || base == doc.end() || pool == doc.end()) {
    throw Error(ErrorCode::ParseError, where + ": missing participation vectors");
  }
  report.candidate_participation = parity_from_json(*cand, where + ": candidate_participation");
  report.baseline_participation = parity_from_json(*base, where + ": baseline_participation");
  report.pool_parity = parity_from_json(*pool, where + ": pool_parity");
  auto gains = doc.find("per_feature_gain");
  if (gains == doc.end() || !gains->is_object()) {
    throw Error(ErrorCode::ParseError, where + ": missing object field 'per_feature_gain'");
  }
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    report.per_feature_gain[i] = require_number(*gains, kFeatureNames[i], where);
  }
  report.diversity_gain = require_number(doc, "diversity_gain", where);
  report.utility_candidate = require_number(doc, "utility_candidate", where);
  report.utility_baseline = require_number(doc, "utility_baseline", where);
  report.utility_loss = require_number(doc, "utility_loss", where);
  report.utility_savings = require_number(doc, "utility_savings", where);
  report.f_diversity = require_number(doc, "f_diversity", where);
  report.demographic_distance = require_number(doc, "demographic_distance", where);
  report.demographic_similarity = require_number(doc, "demographic_similarity", where);
  report.baseline_distance = require_number(doc, "baseline_distance", where);
  report.baseline_similarity = require_number(doc, "baseline_similarity", where);
  report.f_parity = require_number(doc, "f_parity", where);
  return report;
}

ReplayInput read_replay(const std::filesystem::path& path) {
  const json doc = load_json(path);
  const std::string where = path.string();
  ReplayInput input;
  auto cand = doc.find("candidate");
  auto base = doc.find("baseline");
  auto pool = doc.find("pool");
  if (cand == doc.end() || base == doc.end() || pool == doc.end()) {
    throw Error(ErrorCode::ParseError,
                where + ": replay needs 'candidate', 'baseline' and 'pool' vectors");
  }
  input.candidate = parity_from_json(*cand, where + ": candidate");
  input.baseline = parity_from_json(*base, where + ": baseline");
  input.pool = parity_from_json(*pool, where + ": pool");
  input.utility_candidate = require_number(doc, "utility_candidate", where);
  input.utility_baseline = require_number(doc, "utility_baseline", where);
  for (const ParityVector* v : {&input.candidate, &input.baseline, &input.pool}) {
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if ((*v)[i] < 0.0 || (*v)[i] > 1.0) {
        throw Error(ErrorCode::ParseError,
                    where + ": participation rates must be fractions in [0,1], got " +
                        format_double((*v)[i]));
      }
    }
  }
  return input;
}

}  // namespace fairsel
