#pragma once

#include <string>

#include "fglab/series.hpp"

namespace fglab {

/// Parses a polynomial such as "v^4 + 24*v^3*b1 - 1/3*x^2 y" into the given
/// context. Factors within a term are separated by '*' or whitespace; a term
/// may carry one rational coefficient. Throws ParseError on malformed text
/// and VariableMismatch on unknown names.
QSeries parse_series(const std::string& text, const VarList& vars, int bound);

}  // namespace fglab
