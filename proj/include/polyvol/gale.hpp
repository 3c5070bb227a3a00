#pragma once

#include <array>
#include <string>
#include <vector>

#include "polyvol/hrep.hpp"

namespace polyvol {

// Planar Gale diagram of an n-polytope with n+3 facets: one exact 2-vector
// per facet, meaningful only up to positive scaling (stored as primitive
// integer vectors). A facet subset J intersects in a face of the polytope
// exactly when the origin lies in the relative interior of the convex hull
// of the complementary vectors.
struct GaleDiagram {
  std::vector<std::array<Rat, 2>> vectors;
  std::vector<std::string> labels;

  int index_of(const std::string& label) const;  // throws on unknown label
};

// Builds the diagram from a bounded full-dimensional H-representation with
// exactly dim+3 inequalities, none redundant: the vertex barycenter moves to
// the origin, every inequality is normalized to a.x <= 1, and the diagram
// vectors are the coordinates of a rational kernel basis of the stacked
// (normals, 1) matrix.
GaleDiagram gale_transform(const HPolytope& p);

// Face test for the facet subset J (by index or by label).
bool is_face(const GaleDiagram& g, const std::vector<int>& j);
bool is_face(const GaleDiagram& g, const std::vector<std::string>& j_labels);

// All vertex incidence sets readable from the diagram: the maximal facet
// subsets passing is_face. Sorted deterministically; entries are sorted
// index lists.
std::vector<std::vector<int>> vertex_sets_from_gale(const GaleDiagram& g);

// One "label x y" line per facet, integer coordinates.
std::string write_gale(const GaleDiagram& g);

}  // namespace polyvol
