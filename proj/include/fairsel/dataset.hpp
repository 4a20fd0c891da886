#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fairsel/reference_tables.hpp"
#include "fairsel/types.hpp"

namespace fairsel {

struct Diagnostic {
  std::string record_id;
  std::string rule;  // short rule slug, e.g. "us-state-required"
  std::string message;
};

// Loads and fully cross-references the three CSV files; either succeeds with every
// record invariant holding or throws ParseError / DuplicateId / DanglingReference.
Dataset load_dataset(const std::filesystem::path& authors_path,
                     const std::filesystem::path& papers_path,
                     const std::filesystem::path& venues_path);

// Writes authors.csv / papers.csv / venues.csv in canonical id order; loading the
// written files reproduces the dataset field-by-field.
void save_dataset(const Dataset& dataset, const std::filesystem::path& dir);

// Re-checks every record invariant on an in-memory dataset; one diagnostic per
// violation, empty means valid.
std::vector<Diagnostic> validate_dataset(const Dataset& dataset);

// Additionally checks that every author's country resolves against the tables.
std::vector<Diagnostic> validate_dataset(const Dataset& dataset, const ReferenceTables& tables);

}  // namespace fairsel
