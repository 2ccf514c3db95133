#include "surfflow/hodge.hpp"

namespace surfflow {

const char* to_string(HodgeFlavor f) {
  return f == HodgeFlavor::dec ? "dec" : "whitney";
}

HodgeFlavor parse_hodge_flavor(const std::string& name) {
  if (name == "dec") return HodgeFlavor::dec;
  if (name == "whitney") return HodgeFlavor::whitney;
  throw InvalidSpec("unknown Hodge star flavor '" + name + "' (expected dec or whitney)");
}

HodgeStar1 dec_hodge_star_1(const SimplicialSurface& sc, const DualMetrics& metrics) {
  HodgeStar1 star;
  star.flavor = HodgeFlavor::dec;
  std::vector<linalg::Triplet> t;
  t.reserve(static_cast<std::size_t>(sc.num_edges()));
  for (int e = 0; e < sc.num_edges(); ++e) {
    const double entry = metrics.dual_edge_length[e] / metrics.edge_length[e];
    if (entry <= 0.0) star.nonpositive_edges.push_back(e);
    t.emplace_back(e, e, entry);
  }
  // Exact zeros (co-circular quads) stay out of the pattern.
  star.matrix = linalg::from_triplets<double>(sc.num_edges(), sc.num_edges(), t);
  return star;
}

HodgeStar1 whitney_mass_matrix_1(const SimplicialSurface& sc, const DualMetrics& /*metrics*/) {
  HodgeStar1 star;
  star.flavor = HodgeFlavor::whitney;
  const auto& pts = sc.vertices();
  std::vector<linalg::Triplet> t;
  t.reserve(static_cast<std::size_t>(sc.num_triangles()) * 9);
  for (int f = 0; f < sc.num_triangles(); ++f) {
    const Triangle& tri = sc.triangles()[f];
    const Eigen::Matrix3d local = whitney_local_mass<double>(pts[tri[0]], pts[tri[1]], pts[tri[2]]);
    const auto& es = sc.triangle_edges(f);
    const auto& ss = sc.triangle_edge_signs(f);
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) t.emplace_back(es[k], es[l], ss[k] * ss[l] * local(k, l));
    }
  }
  star.matrix = linalg::from_triplets<double>(sc.num_edges(), sc.num_edges(), t);
  return star;
}

HodgeStar1 hodge_star_1(const SimplicialSurface& sc, const DualMetrics& metrics, HodgeFlavor flavor) {
  return flavor == HodgeFlavor::dec ? dec_hodge_star_1(sc, metrics)
                                    : whitney_mass_matrix_1(sc, metrics);
}

}  // namespace surfflow
