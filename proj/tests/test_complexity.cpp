#include <doctest.h>

#include "equilib/complexity.hpp"

using namespace equilib;

TEST_CASE("polyhedral pairs") {
  CHECK(is_polyhedral_pair(4, 4));
  CHECK_FALSE(is_polyhedral_pair(4, 3));
  CHECK(is_polyhedral_pair(19, 34));
  CHECK_FALSE(is_polyhedral_pair(3, 3));
  CHECK(is_polyhedral_pair(5, 6));
  CHECK_FALSE(is_polyhedral_pair(5, 7));
}

TEST_CASE("closed form of R") {
  CHECK(R_closed(2, 2) == 4);
  CHECK(R_closed(10, 3) == 4);
  CHECK(R_closed(5, 5) == 0);
  CHECK(R_closed(1, 4) == 3);
  CHECK(R_closed(2, 9) == 5);
}

TEST_CASE("closed form matches the finite scan") {
  CHECK(R_bruteforce(2, 2) == 4);
  CHECK(R_bruteforce(1, 4) == 3);
  for (long S = 1; S <= 30; ++S)
    for (long U = 1; U <= 30; ++U) {
      CAPTURE(S);
      CAPTURE(U);
      CHECK(R_closed(S, U) == R_bruteforce(S, U));
      CHECK((R_closed(S, U) == 0) == is_polyhedral_pair(S, U));
    }
}

TEST_CASE("class bounds") {
  auto b22 = class_bounds(2, 2);
  CHECK(b22.status == BoundStatus::Exact);
  CHECK(*b22.upper == 8);
  auto b14 = class_bounds(1, 4);
  CHECK(b14.lower == 6);
  CHECK(*b14.upper == 96);
  CHECK(b14.status == BoundStatus::Bounded);
  auto b11 = class_bounds(1, 1);
  CHECK(b11.status == BoundStatus::LowerOnly);
  CHECK(b11.lower == 12);
  CHECK_FALSE(b11.upper.has_value());
  CHECK(*class_bounds(5, 1).upper == 66);
  CHECK(*class_bounds(4, 1).upper == 66);
  CHECK(*class_bounds(1, 5).upper == 98);
  CHECK(*class_bounds(1, 6).upper == 98);
  for (long S = 1; S <= 30; ++S)
    for (long U = 1; U <= 30; ++U) {
      auto b = class_bounds(S, U);
      CHECK(b.lower % 2 == 0);
      CHECK(b.lower >= 0);
      if (b.upper) CHECK(b.lower <= *b.upper);
      CHECK((b.status == BoundStatus::Exact) == (S >= 2 && U >= 2));
    }
}

TEST_CASE("grid cells") {
  auto g4 = grid(4, 4);
  CHECK(g4.size() == 16);
  CHECK(g4.back().S == 4);
  CHECK(g4.back().U == 4);
  CHECK(g4.back().pair);
  CHECK(*g4.back().bounds.upper == 0);
  auto g = grid(10, 10);
  auto cell = [&](long S, long U) { return g[static_cast<size_t>((S - 1) * 10 + (U - 1))]; };
  CHECK(*cell(2, 9).bounds.upper == 10);
  CHECK(*cell(10, 3).bounds.upper == 8);
  CHECK(cell(3, 1).bounds.notes.front().find("64") != std::string::npos);
}
