#pragma once

#include <filesystem>
#include <string>

#include "fairsel/synthetic.hpp"

namespace fairsel {

// Everything the subcommands read, collected in one place so handlers can also be
// driven directly from tests without argv plumbing.
struct RunConfig {
  std::filesystem::path authors_path;
  std::filesystem::path papers_path;
  std::filesystem::path venues_path;
  std::filesystem::path tables_path;
  std::filesystem::path data_dir;
  std::filesystem::path out_dir;
  std::filesystem::path selection_path;
  std::filesystem::path replay_path;
  std::filesystem::path evaluation_path;
  std::string algorithm = "overall";
  std::string weights = "boolean";
  int n_papers = 0;
  std::string parity_rule = "projected";
  std::string rank_split = "median";
  std::string baseline_venue;
  std::string baseline_papers;  // ';'-separated paper ids
  std::string utility_accounting = "unique";
  std::string parity_accounting = "unique";
};

// Exit codes: 0 success; 2 parse or validation failure; 3 pool smaller than N;
// 4 empty or unresolvable baseline; 5 invalid synthetic spec.
int cmd_ingest(const RunConfig& config);
int cmd_select(const RunConfig& config);
int cmd_evaluate(const RunConfig& config);
int cmd_synth(const SyntheticSpec& spec, const std::filesystem::path& out_dir);
int cmd_report(const RunConfig& config);

int run_cli(int argc, char** argv);

}  // namespace fairsel
