#include "equilib/complexity.hpp"

#include <algorithm>
#include <limits>

#include "equilib/equilibria.hpp"

namespace equilib {

bool is_polyhedral_pair(long x, long y) { return x >= 4 && x + 4 <= 2 * y && y <= 2 * x - 4; }

long R_closed(long S, long U) {
  auto ceil_half = [](long x) { return (x + 1) / 2; };
  if (S > 4 && S > 2 * U - 4) return ceil_half(S) - U + 2;
  if (U > 4 && U > 2 * S - 4) return ceil_half(U) - S + 2;
  if (S <= 4 && U <= 4) return 8 - S - U;
  return 0;
}

// Past f = 2 max(S,U) + 8 every pair with v >= U costs more than the pair
// (m, ceil(m/2) + 2) at m = max(S, U, 4), so the scan can stop there.
long R_bruteforce(long S, long U) {
  long best = std::numeric_limits<long>::max();
  long fmax = 2 * std::max(S, U) + 8;
  for (long f = std::max(S, 4L); f <= fmax; ++f)
    for (long v = std::max(U, 4L); v <= 2 * f - 4; ++v)
      if (is_polyhedral_pair(f, v)) best = std::min(best, f + v - S - U);
  return best;
}

int complexity_of(const Polyhedron& p) { return analyze_strict(p).complexity(); }

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Exact: return "Exact";
    case BoundStatus::Bounded: return "Bounded";
    case BoundStatus::LowerOnly: return "LowerOnly";
  }
  return "?";
}

ClassBounds class_bounds(long S, long U) {
  ClassBounds b;
  b.lower = 2 * R_closed(S, U);
  if (S >= 2 && U >= 2) {
    b.status = BoundStatus::Exact;
    b.upper = b.lower;
  } else if (S == 1 && U >= 4) {
    b.status = BoundStatus::Bounded;
    b.upper = 90 + 2 * R_closed(1, U);
    if (U == 4) b.notes.push_back("Conway-Guy solid P_C: C=96");
    else b.notes.push_back("chain from rotated P_C");
  } else if (U == 1 && S >= 4) {
    b.status = BoundStatus::Bounded;
    b.upper = 59 + (S % 2 == 0 ? 1 : -1) + 2 * R_closed(S, 1);
    b.notes.push_back("chain from rotated P_3");
    if (S % 2 == 0)
      b.notes.push_back("even S: the one-sided vertex step adds 4, so the built witness is 2 above this bound");
  } else {
    b.status = BoundStatus::LowerOnly;
    if (S == 3 && U == 1) b.notes.push_back("constructed P_3: C=64");
    if (S == 2 && U == 1) b.notes.push_back("constructed P_2: C=66");
    if (S == 1 && U == 3) b.notes.push_back("literature P_B: C=64 (no coordinates published)");
    if (S == 1 && U <= 3) b.notes.push_back("literature P_R: C=70 (no coordinates published)");
    if (S == 1 && U == 1) b.notes.push_back("mono-monostatic class, not searched");
  }
  return b;
}

std::vector<GridCell> grid(long S_max, long U_max) {
  std::vector<GridCell> out;
  for (long S = 1; S <= S_max; ++S)
    for (long U = 1; U <= U_max; ++U) out.push_back({S, U, is_polyhedral_pair(S, U), class_bounds(S, U)});
  return out;
}

}  // namespace equilib
