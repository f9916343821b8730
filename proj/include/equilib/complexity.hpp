#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equilib/polyhedron.hpp"

namespace equilib {

/// x >= 4 and x/2 + 2 <= y <= 2x - 4.
bool is_polyhedral_pair(long x, long y);

/// Closed four-branch form of R(S, U).
long R_closed(long S, long U);

/// min f + v - S - U over polyhedral pairs (f, v) with f >= S, v >= U.
long R_bruteforce(long S, long U);

/// (f + v + e) - (S + U + H) of the centroid report.
/// Throws Error(DegenerateEquilibria).
int complexity_of(const Polyhedron& p);

enum class BoundStatus { Exact, Bounded, LowerOnly };

const char* to_string(BoundStatus s);

struct ClassBounds {
  long lower = 0;
  std::optional<long> upper;
  BoundStatus status = BoundStatus::LowerOnly;
  std::vector<std::string> notes;
};

ClassBounds class_bounds(long S, long U);

struct GridCell {
  long S, U;
  bool pair;
  ClassBounds bounds;
};

/// Row-major (S outer) table for 1 <= S <= S_max, 1 <= U <= U_max.
std::vector<GridCell> grid(long S_max, long U_max);

}  // namespace equilib
