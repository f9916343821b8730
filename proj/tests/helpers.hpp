#pragma once

#include <random>

#include "equilib/geometry.hpp"

namespace test_helpers {

inline equilib::Vec3 V(const char* x, const char* y, const char* z) {
  return {equilib::parse_scalar(x), equilib::parse_scalar(y), equilib::parse_scalar(z)};
}

/// Hull of n lattice points with denominator 1000 in [-1, 1]^3.
inline equilib::Polyhedron random_hull(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> u(-1000, 1000);
  for (;;) {
    std::vector<equilib::Vec3> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({equilib::rational(u(rng), 1000), equilib::rational(u(rng), 1000),
                     equilib::rational(u(rng), 1000)});
    try {
      return equilib::hull_from_points(pts);
    } catch (const equilib::Error&) {
    }
  }
}

inline int index_of(const equilib::Polyhedron& p, const equilib::Vec3& x) {
  for (int i = 0; i < p.v(); ++i)
    if (p.vertices[static_cast<size_t>(i)] == x) return i;
  return -1;
}

/// Face whose vertex set is exactly `ids`.
inline int face_with(const equilib::Polyhedron& p, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  for (int f = 0; f < p.f(); ++f) {
    auto c = p.faces[static_cast<size_t>(f)];
    std::sort(c.begin(), c.end());
    if (c == ids) return f;
  }
  return -1;
}

}  // namespace test_helpers
