#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "surfflow/geometry.hpp"

namespace surfflow {

enum class HodgeFlavor { dec, whitney };

const char* to_string(HodgeFlavor f);
// Accepts "dec" or "whitney"; throws InvalidSpec otherwise.
HodgeFlavor parse_hodge_flavor(const std::string& name);

// Discrete Hodge star on primal 1-cochains (E x E, symmetric).
struct HodgeStar1 {
  linalg::SparseMatrix matrix;
  HodgeFlavor flavor = HodgeFlavor::dec;
  // DEC only: edges whose diagonal entry is <= 0 (non-Delaunay warning).
  std::vector<int> nonpositive_edges;
};

// Diagonal star, entry = dual length / primal length.
HodgeStar1 dec_hodge_star_1(const SimplicialSurface& sc, const DualMetrics& metrics);

// Mass matrix of Whitney 1-forms, assembled from closed-form local matrices.
HodgeStar1 whitney_mass_matrix_1(const SimplicialSurface& sc, const DualMetrics& metrics);

HodgeStar1 hodge_star_1(const SimplicialSurface& sc, const DualMetrics& metrics, HodgeFlavor flavor);

// Local Whitney mass matrix of one triangle. Row/column k is the edge opposite
// vertex k, oriented p_{k+1} -> p_{k+2}. Uses
//   eta_ij = l_i grad(l_j) - l_j grad(l_i),
//   int l_a l_b dA = area (1 + [a == b]) / 12.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> whitney_local_mass(const Vec3<Scalar>& p0, const Vec3<Scalar>& p1,
                                               const Vec3<Scalar>& p2) {
  const Eigen::Matrix<Scalar, 3, 3> g = barycentric_gradients<Scalar>(p0, p1, p2);
  const Eigen::Matrix<Scalar, 3, 3> gram = g.transpose() * g;
  const Scalar area = triangle_area<Scalar>(p0, p1, p2);
  auto moment = [area](int a, int b) { return area * (a == b ? Scalar(2) : Scalar(1)) / Scalar(12); };

  Eigen::Matrix<Scalar, 3, 3> m;
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    for (int l = 0; l < 3; ++l) {
      const int a = (l + 1) % 3, b = (l + 2) % 3;
      m(k, l) = gram(j, b) * moment(i, a) - gram(j, a) * moment(i, b) -
                gram(i, b) * moment(j, a) + gram(i, a) * moment(j, b);
    }
  }
  return m;
}

}  // namespace surfflow
