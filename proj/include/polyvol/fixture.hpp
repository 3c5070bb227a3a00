#pragma once

#include <array>
#include <string>
#include <vector>

#include "polyvol/hrep.hpp"
#include "polyvol/symmetry.hpp"

namespace polyvol {

// Bundled reference polytope: a 6-dimensional polytope with 9 facets,
// 21 vertices, exact volume 1/2880, and a coordinate symmetry group of
// order 6. The bundle carries everything needed to re-derive its volume by
// decomposition: the two cuts that carve out one of three congruent wedges,
// the mirror cut that splits the wedge into congruent halves, and the six
// simplices that tile one half, with their expected facet adjacencies and
// volumes.
struct Fixture {
  struct LabeledPoint {
    std::string label;
    Vec point;
    std::string alpha_flags;  // tightness on a1/a2/a3 as '+'/'-'
  };

  struct Cell {
    std::string label;
    std::array<std::string, 7> vertices;
    // Per vertex position: what lies behind the opposite facet — another
    // cell's label or the label of a bounding hyperplane of the half.
    std::array<std::string, 7> neighbors;
    Rat volume;
  };

  HPolytope polytope;  // labels a1 a2 a3 p12 p23 p31 p13 p32 p21
  Ineq sum_bound;      // "s": valid for the polytope but not a facet
  Ineq wedge_cut1;     // "t1": wedge keeps the >= side
  Ineq wedge_cut2;     // "t2": wedge keeps the <= side
  Ineq mirror_cut;     // "d": halves keep >= / <= respectively

  std::vector<LabeledPoint> vertices;  // all 21
  LabeledPoint mirror_edge_point;      // K21_31, created by the mirror cut

  std::vector<std::string> wedge_vertex_labels;  // 14
  std::vector<std::string> half1_vertex_labels;  // 11, includes K21_31
  std::vector<std::string> half2_vertex_labels;  // 11, includes K21_31

  std::vector<Cell> cells;  // the six simplices tiling half 1

  CoordPerm rot3;    // order-3 rotation cycling the three wedges
  CoordPerm mirror;  // involution swapping the two halves of a wedge

  Rat volume;        // 1/2880
  Rat wedge_volume;  // 1/8640
  Rat half_volume;   // 1/17280

  // Label lookup; sub/superscript index pairs are unordered, so e.g.
  // "T21_12" finds "T12_21". Throws on anything unknown.
  const Vec& point(const std::string& label) const;

  HPolytope wedge() const;  // polytope cut by t1 (>=) and t2 (<=)
  HPolytope half1() const;  // wedge cut by d, >= side
  HPolytope half2() const;  // wedge cut by d, <= side
};

const Fixture& fixture();

struct ReferenceReport {
  bool pass = false;
  std::string text;  // one PASS/FAIL line per claim
};

// Re-derives every bundled quantity from scratch: vertex set and incidence
// flags, total volume, redundancy of the sum bound, the wedge and half
// decomposition with its volumes and vertex lists, the six-cell tiling with
// its adjacency structure, the symmetry group with its congruences, and the
// planar-diagram reading of the face structure.
ReferenceReport reference_report();

}  // namespace polyvol
