#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace fglab::cli {

/// One row of a golden table: `published` is the transcribed printed value
/// ("-" when nothing is printed), `reproduced` the value this library gives.
struct GoldenRow {
  std::string key;
  std::string kind;
  std::string published;
  std::string reproduced;
  std::string note;
};

enum class GoldenStatus { kMatch, kScaled, kErratum, kDiff };

std::string status_name(GoldenStatus s);

/// Equality of two cells under a kind: poly, rat, text, matrix, rowspace, span.
bool cells_equal(const std::string& kind, const std::string& a, const std::string& b);
/// Equality up to a nonzero rational factor (poly only; other kinds fall back
/// to equality).
bool cells_proportional(const std::string& kind, const std::string& a, const std::string& b);

/// DIFF when `computed` disagrees with the reproduced column, otherwise MATCH,
/// SCALED or ERRATUM by comparing the published and reproduced columns.
GoldenStatus classify(const GoldenRow& row, const std::string& computed);

std::vector<GoldenRow> read_golden_csv(const std::string& path);
void write_golden_csv(const std::string& path, const std::vector<GoldenRow>& rows);

/// Recomputes every table listed in `dir`/index.csv. With `update` the
/// reproduced column is rewritten from the computation instead of checked.
Report reproduce_tables(const Config& cfg, const std::string& dir, bool update);

}  // namespace fglab::cli
