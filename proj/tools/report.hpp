#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fglab/adams.hpp"
#include "fglab/fgl.hpp"

namespace fglab::cli {

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& text);

/// Global flags shared by every subcommand.
struct Config {
  int bound = 12;
  int precision = 64;
  CpnMode mode = CpnMode::kPaperBox;
  NkiMode nki = NkiMode::kPaper;
  Format format = Format::kText;
  std::string out;
};

/// Bad flags or a format the subcommand cannot produce; exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// One result in every format it supports.
struct Report {
  std::string text;
  std::optional<CsvTable> csv;
  nlohmann::ordered_json json;
  /// Exit status when the computation itself succeeded (3 for a golden diff).
  int status = 0;
};

/// "key = value" lines, a two-column table and a JSON object of strings.
Report key_value_report(const std::vector<std::pair<std::string, std::string>>& rows,
                        const std::string& key_header = "key", const std::string& value_header = "value");

/// Matrix with row and column labels; text output is the CSV itself.
Report matrix_report(const std::vector<std::string>& row_names, const std::vector<std::string>& col_names,
                     const std::vector<std::vector<std::string>>& cells, const std::string& corner = "");

void write_report(std::ostream& os, const Report& r, Format format);

}  // namespace fglab::cli
