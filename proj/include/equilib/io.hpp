#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equilib/complexity.hpp"
#include "equilib/equilibria.hpp"
#include "equilib/search.hpp"

namespace equilib {

/// Version of the JSON documents written by report_json and survey_json.
inline constexpr int kSchemaVersion = 1;

/// OFF with decimal or p/q coordinates and `#` comments. Face cycles may have
/// either orientation; they are re-oriented outward.
/// Throws Error(ParseError) naming line and column, Error(ValidationError).
Polyhedron parse_off(std::string_view text);

/// Canonical OFF. Fraction mode is exact; decimal mode rounds to 12 significant
/// digits and says so in a header comment.
std::string emit_off(const Polyhedron& p, bool decimal = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// AnalysisReport document; see docs/schema.md.
std::string report_json(const Polyhedron& p, const EquilibriumReport& r, const std::string& input_hash);

std::string survey_json(const SurveyResult& s);

/// Columns S,U,pair,lower,upper,status,notes.
std::string grid_csv(const std::vector<GridCell>& cells);

/// Chart of the grid: one square per cell, shaded by status and labeled with the
/// bounds.
std::string grid_svg(const std::vector<GridCell>& cells);

}  // namespace equilib
