#include "surfflow/complex.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace surfflow {

int SimplicialSurface::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = edge_index_.find(key(a, b));
  return it == edge_index_.end() ? -1 : it->second;
}

std::vector<int> SimplicialSurface::interior_edges() const {
  std::vector<int> out;
  out.reserve(edges_.size() - boundary_edges_.size());
  for (int e = 0; e < num_edges(); ++e) {
    if (!is_boundary_edge(e)) out.push_back(e);
  }
  return out;
}

SimplicialSurface build_complex(std::vector<Point3> vertices, std::vector<Triangle> triangles) {
  SimplicialSurface sc;
  const int nv = static_cast<int>(vertices.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const Triangle& tri = triangles[t];
    for (int v : tri) {
      if (v < 0 || v >= nv) {
        throw IndexOutOfRange("triangle " + std::to_string(t) + " references vertex " +
                              std::to_string(v) + " (have " + std::to_string(nv) + ")");
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw DegenerateTriangle("triangle " + std::to_string(t) + " repeats a vertex");
    }
  }

  std::vector<Edge> edges;
  edges.reserve(triangles.size() * 3);
  for (const Triangle& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      const int a = tri[(k + 1) % 3];
      const int b = tri[(k + 2) % 3];
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.v0 != y.v0 ? x.v0 < y.v0 : x.v1 < y.v1;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  sc.edge_index_.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    sc.edge_index_.emplace(SimplicialSurface::key(edges[e].v0, edges[e].v1), static_cast<int>(e));
  }

  const int nt = static_cast<int>(triangles.size());
  sc.tri_edges_.resize(triangles.size());
  sc.tri_signs_.resize(triangles.size());
  sc.edge_tris_.assign(edges.size(), {-1, -1});
  // Traversal sign of the first incident triangle, for the orientability check.
  std::vector<int> first_sign(edges.size(), 0);

  for (int t = 0; t < nt; ++t) {
    const Triangle& tri = triangles[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tri[(k + 1) % 3];
      const int b = tri[(k + 2) % 3];
      const int e = sc.edge_index_.at(SimplicialSurface::key(std::min(a, b), std::max(a, b)));
      const int sign = a < b ? 1 : -1;
      sc.tri_edges_[t][k] = e;
      sc.tri_signs_[t][k] = sign;
      auto& inc = sc.edge_tris_[e];
      if (inc[0] < 0) {
        inc[0] = t;
        first_sign[e] = sign;
      } else if (inc[1] < 0) {
        if (sign == first_sign[e]) {
          throw NonOrientable("triangles " + std::to_string(inc[0]) + " and " + std::to_string(t) +
                              " traverse edge (" + std::to_string(edges[e].v0) + "," +
                              std::to_string(edges[e].v1) + ") in the same direction");
        }
        inc[1] = t;
      } else {
        throw NonManifold("edge (" + std::to_string(edges[e].v0) + "," +
                          std::to_string(edges[e].v1) + ") belongs to more than two triangles");
      }
    }
  }

  // Boundary edges, directed as their single triangle traverses them.
  std::map<int, std::pair<int, int>> outgoing;  // tail vertex -> (edge, head vertex)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (sc.edge_tris_[e][1] >= 0) continue;
    sc.boundary_edges_.push_back(e);
    const int tail = first_sign[e] > 0 ? edges[e].v0 : edges[e].v1;
    const int head = first_sign[e] > 0 ? edges[e].v1 : edges[e].v0;
    if (!outgoing.emplace(tail, std::make_pair(e, head)).second) {
      throw NonManifold("boundary vertex " + std::to_string(tail) +
                        " is shared by more than one boundary curve");
    }
  }

  // Walk loops starting from the lowest unvisited boundary vertex so that
  // loops come out ordered by their lowest vertex id.
  std::vector<char> visited(edges.size(), 0);
  for (const auto& [start, first] : outgoing) {
    if (visited[first.first]) continue;
    BoundaryLoop loop;
    int v = start;
    while (true) {
      const auto it = outgoing.find(v);
      if (it == outgoing.end()) {
        throw NonManifold("boundary curve through vertex " + std::to_string(v) + " is not closed");
      }
      const auto [e, head] = it->second;
      if (visited[e]) break;
      visited[e] = 1;
      loop.vertices.push_back(v);
      loop.edges.push_back(e);
      loop.signs.push_back(first_sign[e]);
      v = head;
    }
    if (v != start) {
      throw NonManifold("boundary curve starting at vertex " + std::to_string(start) +
                        " does not close on itself");
    }
    sc.loops_.push_back(std::move(loop));
  }

  sc.vertices_ = std::move(vertices);
  sc.triangles_ = std::move(triangles);
  sc.edges_ = std::move(edges);
  return sc;
}

linalg::SparseMatrix boundary_2(const SimplicialSurface& sc) {
  std::vector<linalg::Triplet> t;
  t.reserve(static_cast<std::size_t>(sc.num_triangles()) * 3);
  for (int f = 0; f < sc.num_triangles(); ++f) {
    const auto& es = sc.triangle_edges(f);
    const auto& ss = sc.triangle_edge_signs(f);
    for (int k = 0; k < 3; ++k) t.emplace_back(es[k], f, static_cast<double>(ss[k]));
  }
  return linalg::from_triplets<double>(sc.num_edges(), sc.num_triangles(), t);
}

linalg::SparseMatrix boundary_1(const SimplicialSurface& sc) {
  std::vector<linalg::Triplet> t;
  t.reserve(static_cast<std::size_t>(sc.num_edges()) * 2);
  for (int e = 0; e < sc.num_edges(); ++e) {
    t.emplace_back(sc.edges()[e].v0, e, -1.0);
    t.emplace_back(sc.edges()[e].v1, e, 1.0);
  }
  return linalg::from_triplets<double>(sc.num_vertices(), sc.num_edges(), t);
}

linalg::SparseMatrix coboundary_0(const SimplicialSurface& sc) {
  return linalg::transpose(boundary_1(sc));
}

linalg::SparseMatrix coboundary_1(const SimplicialSurface& sc) {
  return linalg::transpose(boundary_2(sc));
}

}  // namespace surfflow
