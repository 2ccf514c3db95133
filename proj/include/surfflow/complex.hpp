#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "surfflow/linalg.hpp"

namespace surfflow {

using Point3 = Eigen::Vector3d;
using Triangle = std::array<int, 3>;

// Edge stored with its lower vertex id first.
struct Edge {
  int v0 = 0;
  int v1 = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A closed boundary curve, walked in the direction induced by the incident
// triangles' orientation.
struct BoundaryLoop {
  std::vector<int> vertices;  // starts at the lowest vertex id of the loop
  std::vector<int> edges;     // edges[i] joins vertices[i] -> vertices[i+1]
  std::vector<int> signs;     // +1 if the walk agrees with the canonical edge direction
};

// Oriented 2D simplicial complex embedded in R^3. Immutable once built.
//
// Local edge k of triangle t is the edge opposite local vertex k, i.e. it
// joins tri[(k+1)%3] -> tri[(k+2)%3] in traversal order.
class SimplicialSurface {
 public:
  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }

  // Edge id for the unordered pair {a, b}, or -1.
  int find_edge(int a, int b) const;

  const std::array<int, 3>& triangle_edges(int t) const { return tri_edges_[t]; }
  const std::array<int, 3>& triangle_edge_signs(int t) const { return tri_signs_[t]; }
  // Incident triangles of an edge; second entry is -1 on the boundary.
  const std::array<int, 2>& edge_triangles(int e) const { return edge_tris_[e]; }
  bool is_boundary_edge(int e) const { return edge_tris_[e][1] < 0; }

  const std::vector<int>& boundary_edges() const { return boundary_edges_; }
  const std::vector<BoundaryLoop>& boundary_loops() const { return loops_; }
  std::vector<int> interior_edges() const;

 private:
  friend SimplicialSurface build_complex(std::vector<Point3> vertices,
                                         std::vector<Triangle> triangles);
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::vector<Point3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<std::array<int, 3>> tri_signs_;
  std::vector<std::array<int, 2>> edge_tris_;
  std::vector<int> boundary_edges_;
  std::vector<BoundaryLoop> loops_;
};

// Throws IndexOutOfRange, DegenerateTriangle, NonManifold, NonOrientable.
SimplicialSurface build_complex(std::vector<Point3> vertices, std::vector<Triangle> triangles);

// d2: triangles -> edges, entry (e, t) = +1 when t traverses e low -> high.
linalg::SparseMatrix boundary_2(const SimplicialSurface& sc);
// d1: edges -> vertices, column (a, b) has -1 at a and +1 at b.
linalg::SparseMatrix boundary_1(const SimplicialSurface& sc);
// Coboundaries are the transposes: d0 = boundary_1^T (E x V), d1 = boundary_2^T (F x E).
linalg::SparseMatrix coboundary_0(const SimplicialSurface& sc);
linalg::SparseMatrix coboundary_1(const SimplicialSurface& sc);

}  // namespace surfflow
