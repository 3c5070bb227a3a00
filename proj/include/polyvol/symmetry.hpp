#pragma once

#include <string>
#include <vector>

#include "polyvol/hrep.hpp"

namespace polyvol {

// Permutation of coordinate axes, acting on points as out[i] = in[image[i]].
// Coordinate permutations are isometries, so they preserve volumes and map
// vertex sets of congruent polytopes onto each other.
struct CoordPerm {
  std::vector<int> image;

  static CoordPerm identity(int n);
  bool is_identity() const;
};

// Validates that image is a bijection on 0..n-1; throws otherwise.
void check_perm(const CoordPerm& g);

Vec apply_to_point(const CoordPerm& g, const Vec& v);

// Coefficient vectors transform exactly like points under a coordinate
// permutation (the matrix is orthogonal); right-hand sides are unchanged.
HPolytope apply_to_polytope(const CoordPerm& g, const HPolytope& p);

CoordPerm compose(const CoordPerm& g, const CoordPerm& h);  // g after h
CoordPerm inverse(const CoordPerm& g);

struct SymmetryOptions {
  int max_dim = 8;  // brute force over dim! candidates; 8! = 40320
};

// All coordinate permutations mapping the inequality system of p to itself
// as a set (inequalities compared in primitive integer form). The result is
// verified to be a group before it is returned.
std::vector<CoordPerm> find_symmetries(const HPolytope& p,
                                       const SymmetryOptions& opts = {});

// True iff g maps vertex list a bijectively onto vertex list b; this
// certifies congruence of the two hulls.
bool certify_congruent(const std::vector<Vec>& a, const std::vector<Vec>& b,
                       const CoordPerm& g);

// Cycle notation over the given coordinate names ("(x1 x3)(x2 x4)"), or over
// 1-based indices when no names are supplied. Identity prints as "()".
std::string cycle_string(const CoordPerm& g, const std::vector<std::string>& names = {});

}  // namespace polyvol
