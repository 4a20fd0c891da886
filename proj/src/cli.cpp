#include "fairsel/cli.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairsel/dataset.hpp"
#include "fairsel/error.hpp"
#include "fairsel/metrics.hpp"
#include "fairsel/paper_profile.hpp"
#include "fairsel/parity.hpp"
#include "fairsel/profiling.hpp"
#include "fairsel/reference_tables.hpp"
#include "fairsel/report_io.hpp"
#include "fairsel/selection.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

namespace {

using json = nlohmann::ordered_json;

struct Store {
  Dataset dataset;
  ReferenceTables tables;
};

Store load_store(const std::filesystem::path& dir) {
  Store store;
  store.dataset = load_dataset(dir / "authors.csv", dir / "papers.csv", dir / "venues.csv");
  store.tables = load_reference_tables(dir / "reference_tables.json");
  return store;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Left-pads numbers and right-pads labels into fixed-width report columns.
std::string pad_right(const std::string& s, std::size_t width) {
  std::string out = s;
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  std::string out;
  if (s.size() < width) out.append(width - s.size(), ' ');
  out += s;
  return out;
}

std::pair<int, int> parse_int_range(const std::string& text, const std::string& what) {
  const auto parts = split(trim(text), ':');
  if (parts.size() != 2) {
    throw Error(ErrorCode::ParseError, what + " must look like 'low:high', got '" + text + "'");
  }
  try {
    return {std::stoi(trim(parts[0])), std::stoi(trim(parts[1]))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, what + " must hold two integers, got '" + text + "'");
  }
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const std::string& piece : split(trim(text), ',')) {
    try {
      out.push_back(std::stod(trim(piece)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, what + " holds a non-number '" + piece + "'");
    }
  }
  return out;
}

const PaperProfile* find_paper(const std::map<std::string, const PaperProfile*>& by_id,
                               const std::string& paper_id, const std::string& role) {
  auto it = by_id.find(paper_id);
  if (it == by_id.end()) {
    throw Error(ErrorCode::DanglingReference,
                role + " references paper " + paper_id + " absent from the dataset");
  }
  return it->second;
}

void print_parity_table(const std::string& heading, const ParityVector& left,
                        const std::string& left_name, const ParityVector& right,
                        const std::string& right_name, bool show_met) {
  std::cout << heading << '\n';
  std::cout << "  " << pad_right("feature", 18) << pad_left(left_name, 10)
            << pad_left(right_name, 10);
  if (show_met) std::cout << pad_left("met", 6);
  std::cout << '\n';
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    std::cout << "  " << pad_right(kFeatureNames[i], 18) << pad_left(fixed2(100.0 * left[i]), 10)
              << pad_left(fixed2(100.0 * right[i]), 10);
    if (show_met) std::cout << pad_left(left[i] >= right[i] ? "yes" : "no", 6);
    std::cout << '\n';
  }
}

}  // namespace

int cmd_ingest(const RunConfig& config) {
  try {
    const ReferenceTables tables = load_reference_tables(config.tables_path);
    const Dataset dataset =
        load_dataset(config.authors_path, config.papers_path, config.venues_path);
    const std::vector<Diagnostic> diagnostics = validate_dataset(dataset, tables);
    if (!diagnostics.empty()) {
      for (const Diagnostic& d : diagnostics) {
        std::cerr << d.record_id << " [" << d.rule << "]: " << d.message << '\n';
      }
      std::cerr << diagnostics.size() << " validation problem(s)\n";
      return 2;
    }
    save_dataset(dataset, config.out_dir);
    save_reference_tables(tables, config.out_dir / "reference_tables.json");
    json summary;
    summary["authors"] = dataset.authors.size();
    summary["papers"] = dataset.papers.size();
    summary["venues"] = dataset.venues.size();
    summary["out"] = config.out_dir.string();
    std::cout << summary.dump() << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

int cmd_select(const RunConfig& config) {
  try {
    const Store store = load_store(config.data_dir);
    const WeightMode mode = parse_weight_mode(config.weights);
    const RankSplit rank_split = parse_rank_split(config.rank_split);
    const auto profiles = build_author_profiles(store.dataset, store.tables, rank_split);
    const auto pool = build_paper_profiles(store.dataset, mode, profiles);
    const ParityVector pool_parity = participation(pool, profiles);
    SelectionRequest request;
    request.n_papers = config.n_papers;
    request.mode = mode;
    request.algorithm = parse_algorithm(config.algorithm);
    request.parity_rule = parse_parity_rule(config.parity_rule);
    const SelectionResult result = select(pool, profiles, request, pool_parity);
    write_selection_report(result, pool, pool_parity, config.out_dir);
    json summary;
    summary["algorithm"] = to_string(request.algorithm);
    summary["weights"] = to_string(request.mode);
    summary["selected"] = result.selected.size();
    summary["pool"] = pool.size();
    summary["out"] = config.out_dir.string();
    std::cout << summary.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::PoolTooSmall ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

int cmd_evaluate(const RunConfig& config) {
  try {
    EvaluationReport report;
    if (!config.replay_path.empty()) {
      const ReplayInput input = read_replay(config.replay_path);
      report = evaluate_vectors(input.candidate, input.baseline, input.pool,
                                input.utility_candidate, input.utility_baseline);
    } else {
      const Store store = load_store(config.data_dir);
      const SelectionDocument doc = read_selection(config.selection_path);
      const RankSplit rank_split = parse_rank_split(config.rank_split);
      const UtilityAccounting util_acc = parse_utility_accounting(config.utility_accounting);
      const ParityAccounting parity_acc = parse_parity_accounting(config.parity_accounting);
      // Metrics read Boolean membership flags and h-index only, so Boolean profiles
      // serve both weight modes here.
      const auto profiles = build_author_profiles(store.dataset, store.tables, rank_split);
      const auto pool = build_paper_profiles(store.dataset, WeightMode::Boolean, profiles);
      std::map<std::string, const PaperProfile*> by_id;
      for (const PaperProfile& p : pool) by_id.emplace(p.paper_id, &p);

      std::vector<const PaperProfile*> candidate;
      for (const SelectedPaperRow& row : doc.selected) {
        candidate.push_back(find_paper(by_id, row.paper_id, "selection document"));
      }

      if (!config.baseline_venue.empty() && !config.baseline_papers.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    "--baseline-venue and --baseline-papers are mutually exclusive");
      }
      std::vector<const PaperProfile*> baseline;
      if (!config.baseline_papers.empty()) {
        for (const std::string& piece : split(config.baseline_papers, ';')) {
          const std::string id = trim(piece);
          if (id.empty()) {
            throw Error(ErrorCode::ParseError, "--baseline-papers holds an empty paper id");
          }
          baseline.push_back(find_paper(by_id, id, "baseline list"));
        }
      } else {
        std::string venue_id = config.baseline_venue;
        if (venue_id.empty()) {
          double best = 0.0;
          for (const auto& [id, venue] : store.dataset.venues) {
            if (venue.impact_factor > best) {
              best = venue.impact_factor;
              venue_id = id;
            }
          }
          if (venue_id.empty()) {
            throw Error(ErrorCode::EmptyBaseline, "dataset has no venues to derive a baseline");
          }
        } else if (!store.dataset.venues.count(venue_id)) {
          throw Error(ErrorCode::UnknownVenue, "baseline venue " + venue_id + " is unknown");
        }
        for (const PaperProfile& p : pool) {
          if (p.venue_id == venue_id) baseline.push_back(&p);
        }
        if (baseline.empty()) {
          throw Error(ErrorCode::EmptyBaseline, "venue " + venue_id + " has no papers");
        }
      }

      std::vector<const PaperProfile*> whole_pool;
      whole_pool.reserve(pool.size());
      for (const PaperProfile& p : pool) whole_pool.push_back(&p);
      const ParityVector pool_parity = participation(whole_pool, profiles, parity_acc);
      report = evaluate(candidate, baseline, profiles, pool_parity, util_acc, parity_acc);
    }
    write_evaluation_report(report, config.out_dir);
    json summary;
    summary["diversity_gain"] = report.diversity_gain;
    summary["utility_savings"] = report.utility_savings;
    summary["f_diversity"] = report.f_diversity;
    summary["demographic_similarity"] = report.demographic_similarity;
    summary["f_parity"] = report.f_parity;
    summary["out"] = config.out_dir.string();
    std::cout << summary.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    const bool baseline_failure =
        e.code() == ErrorCode::EmptyBaseline || e.code() == ErrorCode::UnknownVenue;
    return baseline_failure ? 4 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

int cmd_synth(const SyntheticSpec& spec, const std::filesystem::path& out_dir) {
  try {
    const Dataset dataset = generate_dataset(spec);
    save_dataset(dataset, out_dir);
    json summary;
    summary["authors"] = dataset.authors.size();
    summary["papers"] = dataset.papers.size();
    summary["venues"] = dataset.venues.size();
    summary["seed"] = spec.seed;
    summary["out"] = out_dir.string();
    std::cout << summary.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::ParseError ? 5 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

int cmd_report(const RunConfig& config) {
  try {
    bool printed = false;
    if (!config.selection_path.empty()) {
      const SelectionDocument doc = read_selection(config.selection_path);
      std::cout << "Selection: " << doc.algorithm << " / " << doc.weights << " / "
                << doc.parity_rule << ", N=" << doc.n_papers << " of " << doc.pool_size
                << " papers\n";
      std::cout << "  " << pad_left("#", 4) << "  " << pad_right("paper", 12)
                << pad_right("queue", 18) << pad_left("pd_score", 10) << pad_left("quality", 10)
                << "  venue\n";
      for (std::size_t i = 0; i < doc.selected.size(); ++i) {
        const SelectedPaperRow& row = doc.selected[i];
        std::cout << "  " << pad_left(std::to_string(i + 1), 4) << "  "
                  << pad_right(row.paper_id, 12) << pad_right(row.provenance, 18)
                  << pad_left(fixed2(row.pd_score), 10) << pad_left(fixed2(row.quality_score), 10)
                  << "  " << row.venue_id << '\n';
      }
      print_parity_table("Parity (percent):", doc.achieved_parity, "achieved", doc.pool_parity,
                         "pool", true);
      printed = true;
    }
    if (!config.evaluation_path.empty()) {
      const EvaluationReport report = read_evaluation(config.evaluation_path);
      if (printed) std::cout << '\n';
      std::cout << "Participation (percent):\n";
      std::cout << "  " << pad_right("feature", 18) << pad_left("candidate", 12)
                << pad_left("baseline", 12) << pad_left("pool", 12) << pad_left("gain%", 12)
                << '\n';
      for (std::size_t i = 0; i < kFeatureCount; ++i) {
        std::cout << "  " << pad_right(kFeatureNames[i], 18)
                  << pad_left(fixed2(100.0 * report.candidate_participation[i]), 12)
                  << pad_left(fixed2(100.0 * report.baseline_participation[i]), 12)
                  << pad_left(fixed2(100.0 * report.pool_parity[i]), 12)
                  << pad_left(fixed2(report.per_feature_gain[i]), 12) << '\n';
      }
      std::cout << "Metrics:\n";
      const std::vector<std::pair<std::string, double>> rows = {
          {"diversity_gain", report.diversity_gain},
          {"utility_candidate", report.utility_candidate},
          {"utility_baseline", report.utility_baseline},
          {"utility_loss", report.utility_loss},
          {"utility_savings", report.utility_savings},
          {"f_diversity", report.f_diversity},
          {"demographic_distance", report.demographic_distance},
          {"demographic_similarity", report.demographic_similarity},
          {"baseline_distance", report.baseline_distance},
          {"baseline_similarity", report.baseline_similarity},
          {"f_parity", report.f_parity},
      };
      for (const auto& [name, value] : rows) {
        std::cout << "  " << pad_right(name, 24) << pad_left(fixed2(value), 10) << '\n';
      }
      printed = true;
    }
    if (!printed) {
      throw Error(ErrorCode::InvalidArgument, "report needs --selection and/or --evaluation");
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Fairness-aware paper selection over demographic author profiles"};
  app.require_subcommand(1);
  RunConfig config;
  SyntheticSpec spec;
  std::string rates_text;
  std::string impact_text;
  std::string authors_per_paper_text = "1:3";
  std::string h_range_text = "0:60";

  CLI::App* ingest = app.add_subcommand(
      "ingest", "Validate raw CSV inputs and write a canonical data store");
  ingest->add_option("--authors", config.authors_path, "Authors CSV")->required();
  ingest->add_option("--papers", config.papers_path, "Papers CSV")->required();
  ingest->add_option("--venues", config.venues_path, "Venues CSV")->required();
  ingest->add_option("--tables", config.tables_path, "Reference tables JSON")->required();
  ingest->add_option("--out", config.out_dir, "Output store directory")->required();

  CLI::App* sel = app.add_subcommand("select", "Run a fair selection over an ingested store");
  sel->add_option("--data", config.data_dir, "Ingested store directory")->required();
  sel->add_option("--n", config.n_papers, "Number of papers to select")->required();
  sel->add_option("--algorithm", config.algorithm, "overall | multifaceted | roundrobin");
  sel->add_option("--weights", config.weights, "boolean | continuous");
  sel->add_option("--parity-rule", config.parity_rule, "projected | proportional");
  sel->add_option("--rank-split", config.rank_split, "median | mean");
  sel->add_option("--out", config.out_dir, "Output report directory")->required();

  CLI::App* eval = app.add_subcommand("evaluate", "Score a selection against a baseline");
  eval->add_option("--data", config.data_dir, "Ingested store directory");
  eval->add_option("--selection", config.selection_path, "selection.json from a select run");
  eval->add_option("--baseline-venue", config.baseline_venue,
                   "Venue whose papers form the baseline (default: highest impact factor)");
  eval->add_option("--baseline-papers", config.baseline_papers, "';'-separated paper ids");
  eval->add_option("--replay", config.replay_path,
                   "Replay JSON with participation vectors and utilities; skips the dataset");
  eval->add_option("--rank-split", config.rank_split, "median | mean");
  eval->add_option("--utility-accounting", config.utility_accounting, "unique | instances");
  eval->add_option("--parity-accounting", config.parity_accounting, "unique | instances");
  eval->add_option("--out", config.out_dir, "Output report directory")->required();

  CLI::App* synth = app.add_subcommand("synth", "Generate a seeded synthetic dataset");
  synth->add_option("--authors", spec.author_count, "Author count")->required();
  synth->add_option("--papers", spec.paper_count, "Paper count")->required();
  synth->add_option("--authors-per-paper", authors_per_paper_text, "Bounds as 'min:max'");
  synth->add_option("--rates", rates_text,
                    "Five protected base rates 'g,e,c,u,geo' (default: published pool rates)");
  synth->add_option("--impact-factors", impact_text, "Venue impact factors 'a,b,c'");
  synth->add_option("--h-range", h_range_text, "h-index bounds as 'min:max'");
  synth->add_option("--seed", spec.seed, "RNG seed");
  synth->add_option("--out", config.out_dir, "Output dataset directory")->required();

  CLI::App* report = app.add_subcommand("report", "Pretty-print stored reports");
  report->add_option("--selection", config.selection_path, "selection.json to print");
  report->add_option("--evaluation", config.evaluation_path, "report.json to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*ingest) return cmd_ingest(config);
  if (*sel) return cmd_select(config);
  if (*eval) return cmd_evaluate(config);
  if (*synth) {
    try {
      const auto [min_a, max_a] = parse_int_range(authors_per_paper_text, "--authors-per-paper");
      spec.min_authors_per_paper = min_a;
      spec.max_authors_per_paper = max_a;
      const auto [h_min, h_max] = parse_int_range(h_range_text, "--h-range");
      spec.h_index_min = h_min;
      spec.h_index_max = h_max;
      if (!rates_text.empty()) {
        const std::vector<double> rates = parse_double_list(rates_text, "--rates");
        if (rates.size() != kFeatureCount) {
          throw Error(ErrorCode::ParseError, "--rates needs exactly five values");
        }
        for (std::size_t i = 0; i < kFeatureCount; ++i) spec.base_rates[i] = rates[i];
      }
      if (!impact_text.empty()) {
        spec.venue_impact_factors = parse_double_list(impact_text, "--impact-factors");
      }
    } catch (const Error& e) {
      std::cerr << e.what() << '\n';
      return 5;
    }
    return cmd_synth(spec, config.out_dir);
  }
  return cmd_report(config);
}

}  // namespace fairsel
