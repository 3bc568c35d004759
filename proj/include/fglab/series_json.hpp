#pragma once

#include <string>

#include <json.hpp>

#include "fglab/series.hpp"

namespace fglab {

/// {"vars": [{"name", "weight"}], "bound": N | null, "terms": [{"exp", "num", "den"}]}
/// Terms appear in lexicographic exponent order; an unbounded series has a
/// null bound.
nlohmann::ordered_json series_to_json(const QSeries& s);

/// Inverse of `series_to_json`; throws ParseError on malformed input.
QSeries series_from_json(const nlohmann::ordered_json& j);

std::string series_to_json_string(const QSeries& s);
QSeries series_from_json_string(const std::string& text);

}  // namespace fglab
