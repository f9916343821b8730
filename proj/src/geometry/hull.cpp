#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "equilib/geometry.hpp"

namespace equilib {

namespace {

using Tri = std::array<int, 3>;

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Indices of four affinely independent points, chosen in input order.
std::array<int, 4> initial_simplex(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i)
    if (pts[static_cast<size_t>(i)] != pts[0]) i1 = i;
  if (i1 < 0) throw Error(ErrorKind::DegenerateInput, "all points coincide");
  for (int i = i1 + 1; i < n && i2 < 0; ++i)
    if (norm2(cross(pts[static_cast<size_t>(i1)] - pts[0], pts[static_cast<size_t>(i)] - pts[0])) != 0) i2 = i;
  if (i2 < 0) throw Error(ErrorKind::DegenerateInput, "points are collinear");
  for (int i = i2 + 1; i < n && i3 < 0; ++i)
    if (sgn(orient(pts[0], pts[static_cast<size_t>(i1)], pts[static_cast<size_t>(i2)], pts[static_cast<size_t>(i)])) != 0) i3 = i;
  if (i3 < 0) throw Error(ErrorKind::DegenerateInput, "points are coplanar");
  return {0, i1, i2, i3};
}

}  // namespace

Polyhedron hull_from_points(const std::vector<Vec3>& input) {
  std::vector<Vec3> pts = input;
  for (auto& p : pts) {
    p.x.canonicalize();
    p.y.canonicalize();
    p.z.canonicalize();
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4) throw Error(ErrorKind::DegenerateInput, "fewer than 4 distinct points");
  auto s = initial_simplex(pts);
  auto P = [&](int i) -> const Vec3& { return pts[static_cast<size_t>(i)]; };

  // Triangles are outward oriented: orient(a,b,c,x) < 0 for interior x.
  std::vector<Tri> tris;
  std::vector<char> alive;
  auto add = [&](int a, int b, int c, const Vec3& inside) {
    if (sgn(orient(P(a), P(b), P(c), inside)) > 0) std::swap(b, c);
    tris.push_back({a, b, c});
    alive.push_back(1);
  };
  Vec3 inside = (P(s[0]) + P(s[1]) + P(s[2]) + P(s[3])) / Scalar(4);
  add(s[0], s[1], s[2], inside);
  add(s[0], s[1], s[3], inside);
  add(s[0], s[2], s[3], inside);
  add(s[1], s[2], s[3], inside);

  std::vector<char> used(pts.size(), 0);
  for (int i : s) used[static_cast<size_t>(i)] = 1;
  for (int pi = 0; pi < static_cast<int>(pts.size()); ++pi) {
    if (used[static_cast<size_t>(pi)]) continue;
    const Vec3& p = P(pi);
    std::vector<size_t> visible;
    for (size_t t = 0; t < tris.size(); ++t)
      if (alive[t] && sgn(orient(P(tris[t][0]), P(tris[t][1]), P(tris[t][2]), p)) > 0)
        visible.push_back(t);
    if (visible.empty()) continue;
    std::map<std::pair<int, int>, int> directed;
    for (size_t t : visible)
      for (int k = 0; k < 3; ++k) directed[{tris[t][k], tris[t][(k + 1) % 3]}]++;
    for (size_t t : visible) alive[t] = 0;
    for (const auto& [e, count] : directed) {
      if (directed.count({e.second, e.first})) continue;
      tris.push_back({e.first, e.second, pi});
      alive.push_back(1);
    }
  }

  std::vector<Tri> live;
  for (size_t t = 0; t < tris.size(); ++t)
    if (alive[t]) live.push_back(tris[t]);

  // Merge coplanar neighbours.
  std::map<std::pair<int, int>, int> owner;
  for (size_t t = 0; t < live.size(); ++t)
    for (int k = 0; k < 3; ++k) owner[{live[t][k], live[t][(k + 1) % 3]}] = static_cast<int>(t);
  DisjointSets ds(live.size());
  for (size_t t = 0; t < live.size(); ++t)
    for (int k = 0; k < 3; ++k) {
      int a = live[t][k], b = live[t][(k + 1) % 3];
      int u = owner.at({b, a});
      const Tri& o = live[static_cast<size_t>(u)];
      int apex = o[0] + o[1] + o[2] - a - b;
      if (sgn(orient(P(live[t][0]), P(live[t][1]), P(live[t][2]), P(apex))) == 0)
        ds.unite(static_cast<int>(t), u);
    }

  std::map<int, std::map<int, int>> boundary;  // group -> (from -> to)
  for (size_t t = 0; t < live.size(); ++t) {
    int g = ds.find(static_cast<int>(t));
    for (int k = 0; k < 3; ++k) {
      int a = live[t][k], b = live[t][(k + 1) % 3];
      if (ds.find(owner.at({b, a})) != g) boundary[g][a] = b;
    }
  }

  std::vector<Cycle> cycles;
  for (auto& [g, next] : boundary) {
    Cycle c;
    int start = next.begin()->first, v = start;
    do {
      c.push_back(v);
      v = next.at(v);
    } while (v != start && c.size() <= next.size());
    // drop vertices in the relative interior of a polygon edge
    bool changed = true;
    while (changed && c.size() > 3) {
      changed = false;
      for (size_t i = 0; i < c.size(); ++i) {
        const Vec3& u = P(c[(i + c.size() - 1) % c.size()]);
        const Vec3& w = P(c[(i + 1) % c.size()]);
        if (norm2(cross(P(c[i]) - u, w - P(c[i]))) == 0) {
          c.erase(c.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    cycles.push_back(std::move(c));
  }

  std::vector<int> remap(pts.size(), -1);
  Polyhedron out;
  for (const auto& c : cycles)
    for (int i : c) remap[static_cast<size_t>(i)] = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    if (remap[i] == 0) {
      remap[i] = out.v();
      out.vertices.push_back(pts[i]);
    }
  for (auto& c : cycles) {
    for (int& i : c) i = remap[static_cast<size_t>(i)];
    out.faces.push_back(std::move(c));
  }
  canonicalize_faces(out.faces);
  return out;
}

}  // namespace equilib
