#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "polyvol/hrep.hpp"
#include "polyvol/linalg.hpp"

namespace polyvol {

// Full-dimensional simplex as n+1 strictly increasing indices into a shared
// point list.
struct Simplex {
  std::vector<int> ids;
};

// Triangulation of a convex hull. Boundary facets (sorted n-tuples of point
// indices) map to their unique adjacent simplex; `witness` is a point in the
// hull interior (the centroid of the seed simplex) used as the fixed
// reference for every visibility test.
struct Triangulation {
  int dim = 0;
  std::vector<Vec> points;
  std::vector<Simplex> simplices;
  std::map<std::vector<int>, int> boundary;
  Vec witness;
};

// Incremental triangulation by coning each point to the boundary facets it
// sees. Seeding takes the first affinely independent dim+1 points in input
// order; duplicates are collapsed first; points inside (or on) the current
// hull are skipped. A facet whose affine hull contains the new point exactly
// is not considered visible, so no degenerate simplex is ever created.
// Throws DegenerateError when all points lie in a common hyperplane.
Triangulation incremental_triangulation(const std::vector<Vec>& points);

// Wraps externally supplied simplices over a point list (boundary facets are
// the ones appearing in exactly one simplex).
Triangulation triangulation_from_simplices(std::vector<Vec> points,
                                           std::vector<Simplex> simplices);

// Boundary facets strictly separating x from the hull interior.
std::vector<std::vector<int>> visible_facets(const Triangulation& t, const Vec& x);

// Exact sum of the simplex volumes.
Rat total_volume(const Triangulation& t);

// One facet-adjacency record: a facet shared by two simplices has
// simplex_b >= 0; a boundary facet instead lists every inequality of the
// verified polytope that is tight on all of its points.
struct FacetRecord {
  std::vector<int> facet;
  int simplex_a = -1;
  int simplex_b = -1;
  std::vector<int> tight_ineqs;
};

struct CoverReport {
  bool pass = false;
  std::vector<std::string> violations;
  Rat triangulated_volume;
  Rat hull_volume;
  std::vector<FacetRecord> facets;
  std::string summary() const;
};

// Certifies that the simplices tile p exactly: every simplex has positive
// volume; every facet of every simplex is either shared with exactly one
// other simplex or lies inside a bounding hyperplane of p; and the volumes
// sum to an independently recomputed volume of p (vertex enumeration of p
// followed by a fresh triangulation).
CoverReport verify_covering(const Triangulation& t, const HPolytope& p);

// Serialization:
//   points <k> dim <n>
//   <point per line>
//   simplices <m>
//   <sorted 0-based id tuple per line>
std::string write_triangulation(const Triangulation& t);
Triangulation parse_triangulation(std::istream& in);
Triangulation parse_triangulation_file(const std::string& path);

}  // namespace polyvol
