#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyvol/linalg.hpp"

namespace polyvol {

// One linear inequality coeffs . x <= rhs.
struct Ineq {
  Vec coeffs;
  Rat rhs;
  std::string label;  // may be empty; parse_hrep fills a default
};

// Convex polytope as an ordered inequality system.
struct HPolytope {
  int dim = 0;
  std::vector<Ineq> ineqs;
  std::vector<std::string> coord_names;  // optional, size dim when present
};

// Vertices with their full facet incidence. Points are sorted
// lexicographically; incidence[i] lists every inequality index the i-th
// point satisfies with equality, recomputed against the whole system rather
// than inherited from whichever basis produced the point.
struct VertexSet {
  std::vector<Vec> points;
  std::vector<std::vector<int>> incidence;
};

// Text format:
//   dim <n>
//   order <name_1> ... <name_n>          (optional)
//   [label:] c_1 ... c_n <= r            (one line per inequality)
// '#' starts a comment; blank lines are skipped; all numbers are exact
// rationals "p", "-p" or "p/q". Throws ParseError with the line number.
HPolytope parse_hrep(std::istream& in);
HPolytope parse_hrep_string(const std::string& text);
HPolytope parse_hrep_file(const std::string& path);
std::string write_hrep(const HPolytope& p);

struct EnumerateOptions {
  long long basis_budget = 1'000'000;  // max number of dim-subsets to try
  int threads = 1;
};

// Exact vertex enumeration: every dim-subset of inequalities with an
// invertible coefficient matrix is solved and the solution kept when it
// satisfies the whole system. Requires a bounded region (checked first with
// exact LPs in every +/- coordinate direction; throws UnboundedError).
// An empty feasible region yields an empty VertexSet.
VertexSet enumerate_vertices(const HPolytope& p, const EnumerateOptions& opts = {});

// For each vertex and each requested inequality index: true when the vertex
// satisfies that inequality with equality.
std::vector<std::vector<bool>> incidence_table(const HPolytope& p, const VertexSet& vs,
                                               const std::vector<int>& which);

// Indices of inequalities that can each be dropped without changing the
// feasible region (exact LP test: maximize the inequality's left-hand side
// subject to all the others, capped one unit past its own bound).
std::set<int> find_redundant(const HPolytope& p);

// Cut p by the hyperplane coeffs . x = rhs of h. First piece keeps the <=
// side, second piece the >= side; both carry the cut as a labeled inequality.
std::pair<HPolytope, HPolytope> slice(const HPolytope& p, const Ineq& h);

// Exact convex-hull membership via LP feasibility.
bool point_in_hull(const std::vector<Vec>& points, const Vec& q);

// `points` line per vertex: coordinates, then the incidence labels in
// brackets, e.g. "0 1/2 0 [a1 p12]".
std::string format_vertices(const HPolytope& p, const VertexSet& vs);

}  // namespace polyvol
