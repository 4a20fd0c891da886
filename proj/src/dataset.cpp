#include "fairsel/dataset.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "fairsel/csv.hpp"
#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

namespace {

[[noreturn]] void fail_row(const std::filesystem::path& file, long line, const std::string& what) {
  throw Error(ErrorCode::ParseError, file.filename().string() + ":" + std::to_string(line) + ": " + what);
}

void require_header(const CsvTable& table, const std::vector<std::string>& expected,
                    const std::filesystem::path& file) {
  if (table.header != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) want += ",";
      want += expected[i];
    }
    throw Error(ErrorCode::ParseError,
                file.filename().string() + ": header must be exactly '" + want + "'");
  }
}

void require_fields(const CsvRow& row, std::size_t count, const std::filesystem::path& file) {
  if (row.fields.size() != count) {
    fail_row(file, row.line,
             "expected " + std::to_string(count) + " fields, found " +
                 std::to_string(row.fields.size()));
  }
}

int parse_int_field(const std::string& raw, const char* what, const std::filesystem::path& file,
                    long line) {
  const std::string t = trim(raw);
  int value = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || t.empty()) {
    fail_row(file, line, std::string(what) + " '" + raw + "' is not an integer");
  }
  return value;
}

double parse_double_field(const std::string& raw, const char* what,
                          const std::filesystem::path& file, long line) {
  const std::string t = trim(raw);
  double value = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || t.empty()) {
    fail_row(file, line, std::string(what) + " '" + raw + "' is not a number");
  }
  return value;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& authors_path,
                     const std::filesystem::path& papers_path,
                     const std::filesystem::path& venues_path) {
  Dataset ds;

  const CsvTable venues = read_csv(venues_path);
  require_header(venues, {"venue_id", "impact_factor"}, venues_path);
  for (const CsvRow& row : venues.rows) {
    require_fields(row, 2, venues_path);
    VenueRecord rec;
    rec.venue_id = trim(row.fields[0]);
    if (rec.venue_id.empty()) fail_row(venues_path, row.line, "venue_id must not be empty");
    rec.impact_factor = parse_double_field(row.fields[1], "impact_factor", venues_path, row.line);
    if (rec.impact_factor <= 0.0) {
      fail_row(venues_path, row.line, "impact_factor must be positive");
    }
    if (!ds.venues.emplace(rec.venue_id, rec).second) {
      throw Error(ErrorCode::DuplicateId, "venue '" + rec.venue_id + "' (" +
                                              venues_path.filename().string() + ":" +
                                              std::to_string(row.line) + ")");
    }
  }

  const CsvTable authors = read_csv(authors_path);
  require_header(authors,
                 {"author_id", "gender_label", "ethnicity_category", "position_title",
                  "university_name", "university_rank", "country", "us_state", "h_index"},
                 authors_path);
  for (const CsvRow& row : authors.rows) {
    require_fields(row, 9, authors_path);
    AuthorRecord rec;
    rec.author_id = trim(row.fields[0]);
    if (rec.author_id.empty()) fail_row(authors_path, row.line, "author_id must not be empty");
    try {
      rec.gender_label = parse_gender(row.fields[1]);
      rec.ethnicity_category = parse_ethnicity(row.fields[2]);
      rec.position_title = parse_position_title(row.fields[3]);
    } catch (const Error& e) {
      fail_row(authors_path, row.line, e.what());
    }
    rec.university_name = trim(row.fields[4]);
    rec.university_rank = parse_int_field(row.fields[5], "university_rank", authors_path, row.line);
    if (rec.university_rank < 1) {
      fail_row(authors_path, row.line, "university_rank must be >= 1");
    }
    rec.country = canonical_country(row.fields[6]);
    if (rec.country.empty()) fail_row(authors_path, row.line, "country must not be empty");
    const std::string state = trim(row.fields[7]);
    if (is_usa(rec.country)) {
      if (state.empty()) fail_row(authors_path, row.line, "us_state required for US authors");
      rec.us_state = state;
    } else if (!state.empty()) {
      fail_row(authors_path, row.line, "us_state only applies to US authors");
    }
    rec.h_index = parse_int_field(row.fields[8], "h_index", authors_path, row.line);
    if (rec.h_index < 0) fail_row(authors_path, row.line, "h_index must be non-negative");
    if (!ds.authors.emplace(rec.author_id, rec).second) {
      throw Error(ErrorCode::DuplicateId, "author '" + rec.author_id + "' (" +
                                              authors_path.filename().string() + ":" +
                                              std::to_string(row.line) + ")");
    }
  }
  if (ds.authors.empty()) {
    throw Error(ErrorCode::ParseError, authors_path.filename().string() + ": no author records");
  }

  const CsvTable papers = read_csv(papers_path);
  require_header(papers, {"paper_id", "venue_id", "author_ids"}, papers_path);
  for (const CsvRow& row : papers.rows) {
    require_fields(row, 3, papers_path);
    PaperRecord rec;
    rec.paper_id = trim(row.fields[0]);
    if (rec.paper_id.empty()) fail_row(papers_path, row.line, "paper_id must not be empty");
    rec.venue_id = trim(row.fields[1]);
    if (rec.venue_id.empty()) fail_row(papers_path, row.line, "venue_id must not be empty");
    std::set<std::string> seen;
    for (const std::string& segment : split(row.fields[2], ';')) {
      const std::string id = trim(segment);
      if (id.empty()) fail_row(papers_path, row.line, "empty entry in author_ids");
      if (!seen.insert(id).second) {
        fail_row(papers_path, row.line, "duplicate author '" + id + "' in author_ids");
      }
      rec.author_ids.push_back(id);
    }
    if (rec.author_ids.empty()) fail_row(papers_path, row.line, "author_ids must not be empty");
    if (!ds.papers.emplace(rec.paper_id, rec).second) {
      throw Error(ErrorCode::DuplicateId, "paper '" + rec.paper_id + "' (" +
                                              papers_path.filename().string() + ":" +
                                              std::to_string(row.line) + ")");
    }
  }

  for (const auto& [paper_id, rec] : ds.papers) {
    if (!ds.venues.count(rec.venue_id)) {
      throw Error(ErrorCode::DanglingReference,
                  "paper '" + paper_id + "' references unknown venue '" + rec.venue_id + "'");
    }
    for (const std::string& author_id : rec.author_ids) {
      if (!ds.authors.count(author_id)) {
        throw Error(ErrorCode::DanglingReference,
                    "paper '" + paper_id + "' references unknown author '" + author_id + "'");
      }
    }
  }
  return ds;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  const auto open = [&](const char* name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + (dir / name).string());
    return out;
  };

  {
    std::ofstream out = open("authors.csv");
    write_csv_row(out, {"author_id", "gender_label", "ethnicity_category", "position_title",
                        "university_name", "university_rank", "country", "us_state", "h_index"});
    for (const auto& [id, a] : dataset.authors) {
      write_csv_row(out, {id, to_string(a.gender_label), to_string(a.ethnicity_category),
                          to_string(a.position_title), a.university_name,
                          std::to_string(a.university_rank), a.country,
                          a.us_state ? *a.us_state : std::string(), std::to_string(a.h_index)});
    }
  }
  {
    std::ofstream out = open("papers.csv");
    write_csv_row(out, {"paper_id", "venue_id", "author_ids"});
    for (const auto& [id, p] : dataset.papers) {
      std::string joined;
      for (std::size_t i = 0; i < p.author_ids.size(); ++i) {
        if (i) joined += ";";
        joined += p.author_ids[i];
      }
      write_csv_row(out, {id, p.venue_id, joined});
    }
  }
  {
    std::ofstream out = open("venues.csv");
    write_csv_row(out, {"venue_id", "impact_factor"});
    for (const auto& [id, v] : dataset.venues) {
      write_csv_row(out, {id, format_double(v.impact_factor)});
    }
  }
}

std::vector<Diagnostic> validate_dataset(const Dataset& dataset) {
  std::vector<Diagnostic> out;
  for (const auto& [id, a] : dataset.authors) {
    if (id != a.author_id) {
      out.push_back({id, "id-consistency", "author keyed '" + id + "' carries id '" + a.author_id + "'"});
    }
    if (a.university_rank < 1) {
      out.push_back({id, "university-rank-positive",
                     "university_rank " + std::to_string(a.university_rank) + " is below 1"});
    }
    if (a.h_index < 0) {
      out.push_back({id, "h-index-non-negative",
                     "h_index " + std::to_string(a.h_index) + " is negative"});
    }
    const bool has_state = a.us_state && !trim(*a.us_state).empty();
    if (is_usa(a.country) && !has_state) {
      out.push_back({id, "us-state-required", "US author is missing us_state"});
    }
    if (!is_usa(a.country) && has_state) {
      out.push_back({id, "us-state-not-applicable",
                     "non-US author carries us_state '" + *a.us_state + "'"});
    }
  }
  for (const auto& [id, v] : dataset.venues) {
    if (id != v.venue_id) {
      out.push_back({id, "id-consistency", "venue keyed '" + id + "' carries id '" + v.venue_id + "'"});
    }
    if (v.impact_factor <= 0.0) {
      out.push_back({id, "impact-factor-positive", "impact_factor must be positive"});
    }
  }
  for (const auto& [id, p] : dataset.papers) {
    if (id != p.paper_id) {
      out.push_back({id, "id-consistency", "paper keyed '" + id + "' carries id '" + p.paper_id + "'"});
    }
    if (p.author_ids.empty()) {
      out.push_back({id, "paper-authors-non-empty", "paper has no authors"});
    }
    std::set<std::string> seen;
    for (const std::string& author_id : p.author_ids) {
      if (!seen.insert(author_id).second) {
        out.push_back({id, "paper-authors-distinct", "author '" + author_id + "' listed twice"});
      }
      if (!dataset.authors.count(author_id)) {
        out.push_back({id, "author-reference", "unknown author '" + author_id + "'"});
      }
    }
    if (!dataset.venues.count(p.venue_id)) {
      out.push_back({id, "venue-reference", "unknown venue '" + p.venue_id + "'"});
    }
  }
  return out;
}

std::vector<Diagnostic> validate_dataset(const Dataset& dataset, const ReferenceTables& tables) {
  std::vector<Diagnostic> out = validate_dataset(dataset);
  for (const auto& [id, a] : dataset.authors) {
    const std::string country = canonical_country(a.country);
    const bool known = is_usa(country) || tables.hdi_by_country.count(country) ||
                       tables.developing_countries.count(country);
    if (!known) {
      out.push_back({id, "country-known", "country '" + a.country +
                                              "' is in neither the HDI table nor the developing list"});
    }
    if (known && !tables.hdi_by_country.count(country)) {
      out.push_back({id, "country-hdi",
                     "country '" + a.country + "' has no HDI entry; continuous geolocation will fail"});
    }
  }
  return out;
}

}  // namespace fairsel
