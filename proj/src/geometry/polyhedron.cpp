#include "equilib/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "equilib/error.hpp"

namespace equilib {

int Topology::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].a == a && edges[i].b == b) return static_cast<int>(i);
  return -1;
}

Topology topology(const std::vector<Cycle>& faces, int nvertices) {
  auto key = [nvertices](int a, int b) {
    return static_cast<long long>(a) * nvertices + b;
  };
  std::unordered_map<long long, int> owner;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const Cycle& c = faces[fi];
    for (size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 0 || b < 0 || a >= nvertices || b >= nvertices)
        throw Error(ErrorKind::ValidationError, "face index out of range");
      if (!owner.emplace(key(a, b), static_cast<int>(fi)).second)
        throw Error(ErrorKind::ValidationError,
                    "directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                        " used twice");
    }
  }
  Topology t;
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<size_t>(nvertices));
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const Cycle& c = faces[fi];
    for (size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      auto twin = owner.find(key(b, a));
      if (twin == owner.end())
        throw Error(ErrorKind::ValidationError,
                    "edge " + std::to_string(a) + "->" + std::to_string(b) + " has no twin");
      if (a < b) t.edges.push_back({a, b, static_cast<int>(fi), twin->second});
      out[static_cast<size_t>(a)].push_back({b, static_cast<int>(fi)});
    }
  }
  std::sort(t.edges.begin(), t.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

  // Walk around each vertex: the face after f (counterclockwise) owns v->u where
  // u precedes v in f.
  t.vertex_faces.resize(static_cast<size_t>(nvertices));
  t.vertex_neighbors.resize(static_cast<size_t>(nvertices));
  for (int v = 0; v < nvertices; ++v) {
    const auto& o = out[static_cast<size_t>(v)];
    if (o.empty()) continue;
    int f = o.front().second;
    for (size_t guard = 0; guard <= o.size(); ++guard) {
      const Cycle& c = faces[static_cast<size_t>(f)];
      auto it = std::find(c.begin(), c.end(), v);
      size_t i = static_cast<size_t>(it - c.begin());
      int next = c[(i + 1) % c.size()];
      int prev = c[(i + c.size() - 1) % c.size()];
      t.vertex_faces[static_cast<size_t>(v)].push_back(f);
      t.vertex_neighbors[static_cast<size_t>(v)].push_back(next);
      f = owner.at(key(v, prev));
      if (f == o.front().second) break;
    }
    if (t.vertex_faces[static_cast<size_t>(v)].size() != o.size())
      throw Error(ErrorKind::ValidationError,
                  "vertex " + std::to_string(v) + " link is not a single cycle");
  }
  return t;
}

PolyhedronD to_double(const Polyhedron& p) {
  PolyhedronD d;
  d.faces = p.faces;
  d.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) d.vertices.push_back(to_double(v));
  return d;
}

void canonicalize_faces(std::vector<Cycle>& faces) {
  for (auto& c : faces) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(faces.begin(), faces.end());
}

Polyhedron canonical(const Polyhedron& p) {
  std::vector<int> order(p.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.vertices[static_cast<size_t>(a)] < p.vertices[static_cast<size_t>(b)]; });
  std::vector<int> remap(p.vertices.size());
  Polyhedron q;
  for (size_t i = 0; i < order.size(); ++i) {
    remap[static_cast<size_t>(order[i])] = static_cast<int>(i);
    q.vertices.push_back(p.vertices[static_cast<size_t>(order[i])]);
  }
  q.faces = p.faces;
  for (auto& c : q.faces)
    for (int& i : c) i = remap[static_cast<size_t>(i)];
  canonicalize_faces(q.faces);
  return q;
}

Polyhedron translate(const Polyhedron& p, const Vec3& t) {
  Polyhedron q = p;
  for (auto& v : q.vertices) v += t;
  return q;
}

Polyhedron scale(const Polyhedron& p, const Scalar& s) {
  Polyhedron q = p;
  for (auto& v : q.vertices) v *= s;
  return q;
}

double diameter(const PolyhedronD& p) {
  double best = 0;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    for (size_t j = i + 1; j < p.vertices.size(); ++j)
      best = std::max(best, norm(p.vertices[i] - p.vertices[j]));
  return best;
}

double diameter(const Polyhedron& p) { return diameter(to_double(p)); }

bool same_polyhedron(const Polyhedron& a, const Polyhedron& b) {
  Polyhedron x = canonical(a), y = canonical(b);
  return x.vertices == y.vertices && x.faces == y.faces;
}

Polyhedron regular_tetrahedron() {
  Polyhedron p;
  p.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  p.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return canonical(p);
}

Polyhedron box(const Vec3& lo, const Vec3& hi) {
  Polyhedron p;
  for (int i = 0; i < 8; ++i)
    p.vertices.push_back({(i & 1) ? hi.x : lo.x, (i & 2) ? hi.y : lo.y, (i & 4) ? hi.z : lo.z});
  p.faces = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  return canonical(p);
}

Polyhedron octahedron(const Scalar& r) {
  Polyhedron p;
  Scalar z(0), m(-r);
  p.vertices = {{r, z, z}, {m, z, z}, {z, r, z}, {z, m, z}, {z, z, r}, {z, z, m}};
  // +x=0 -x=1 +y=2 -y=3 +z=4 -z=5
  p.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
             {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return canonical(p);
}

}  // namespace equilib
