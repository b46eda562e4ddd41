#pragma once

// Text and CSV layouts for the tables. Text mirrors the usual printed
// layouts: a triangle with an "n\i" corner and one square per n with an
// "i\j" corner.

#include <map>
#include <string>
#include <vector>

#include "ewb/exactnum.hpp"
#include "ewb/twosided.hpp"

namespace ewb::cli {

using EulerianRows = std::map<int, std::vector<Count>>;

std::string eulerian_text(const EulerianRows& rows);
std::string eulerian_csv(const EulerianRows& rows);

std::string two_sided_text(const std::vector<TwoSidedTable>& tables);
/// Columns n, i, then A(n,i,1..N) for the largest N; short rows are padded
/// with empty fields.
std::string two_sided_csv(const std::vector<TwoSidedTable>& tables);

/// Right-aligned columns separated by two spaces; row 0 is the header and
/// is followed by a rule. Cells may be ragged.
std::string aligned_grid(const std::vector<std::vector<std::string>>& cells);

}  // namespace ewb::cli
