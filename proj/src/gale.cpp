#include "polyvol/gale.hpp"

#include <algorithm>
#include <sstream>

#include "polyvol/errors.hpp"
#include "polyvol/lp.hpp"

namespace polyvol {

namespace {

// Scale an exact 2-vector to the primitive integer vector on the same ray.
std::array<Rat, 2> primitive(const std::array<Rat, 2>& v) {
  mpz_class l = lcm(v[0].den(), v[1].den());
  mpz_class a = v[0].num() * (l / v[0].den());
  mpz_class b = v[1].num() * (l / v[1].den());
  mpz_class g = gcd(abs(a), abs(b));
  if (g == 0) return {Rat(0), Rat(0)};
  return {Rat(a / g, 1), Rat(b / g, 1)};
}

// Origin strictly inside the relative interior of conv{g.vectors[c] : c}.
bool origin_in_relint(const GaleDiagram& g, const std::vector<int>& complement) {
  if (complement.empty()) return false;
  Mat eq(3, int(complement.size()));
  for (int c = 0; c < int(complement.size()); ++c) {
    eq.at(0, c) = g.vectors[complement[c]][0];
    eq.at(1, c) = g.vectors[complement[c]][1];
    eq.at(2, c) = 1;
  }
  return lp_feasible_strict(eq, Vec{Rat(0), Rat(0), Rat(1)}).has_value();
}

}  // namespace

int GaleDiagram::index_of(const std::string& label) const {
  for (int i = 0; i < int(labels.size()); ++i)
    if (labels[i] == label) return i;
  throw Error("unknown facet label '" + label + "'");
}

GaleDiagram gale_transform(const HPolytope& p) {
  const int n = p.dim;
  const int m = int(p.ineqs.size());
  if (m != n + 3)
    throw Error("gale_transform handles exactly dim+3 facets, got " +
                std::to_string(m) + " inequalities in dimension " + std::to_string(n));
  if (!find_redundant(p).empty())
    throw Error("inequality system contains redundant members; run find_redundant "
                "and drop them first");

  VertexSet vs = enumerate_vertices(p);
  if (vs.points.empty()) throw Error("gale_transform: empty polytope");
  if (affine_rank(vs.points) != n)
    throw Error("gale_transform: polytope is not full-dimensional");

  Vec center(n);
  for (const Vec& v : vs.points) center = add(center, v);
  center = scaled(center, Rat(1, long(vs.points.size())));

  // After translating the barycenter to the origin each facet reads
  // a.x <= r with r > 0; normalize to a/r . x <= 1 and stack (a/r, 1).
  Mat stacked(n + 1, m);
  for (int i = 0; i < m; ++i) {
    Rat r = p.ineqs[i].rhs - dot(p.ineqs[i].coeffs, center);
    if (r.sign() <= 0)
      throw Error("gale_transform: barycenter not strictly inside facet '" +
                  p.ineqs[i].label + "'");
    for (int c = 0; c < n; ++c) stacked.at(c, i) = p.ineqs[i].coeffs[c] / r;
    stacked.at(n, i) = 1;
  }

  std::vector<Vec> basis = kernel_basis(stacked);
  if (basis.size() != 2)
    throw Error("gale_transform: kernel dimension " + std::to_string(basis.size()) +
                ", expected 2");

  GaleDiagram g;
  for (int i = 0; i < m; ++i) {
    g.vectors.push_back(primitive({basis[0][i], basis[1][i]}));
    g.labels.push_back(p.ineqs[i].label.empty() ? "i" + std::to_string(i + 1)
                                                : p.ineqs[i].label);
  }
  for (const auto& v : g.vectors)
    if (v[0].is_zero() && v[1].is_zero())
      throw Error("gale_transform: zero diagram vector; inconsistent state for an "
                  "irredundant bounded input");
  std::vector<int> everyone(m);
  for (int i = 0; i < m; ++i) everyone[i] = i;
  if (!origin_in_relint(g, everyone))
    throw Error("gale_transform: diagram does not positively span the plane");
  return g;
}

bool is_face(const GaleDiagram& g, const std::vector<int>& j) {
  const int m = int(g.vectors.size());
  std::vector<bool> in_j(m, false);
  for (int idx : j) {
    if (idx < 0 || idx >= m) throw Error("is_face: facet index out of range");
    in_j[idx] = true;
  }
  std::vector<int> complement;
  for (int i = 0; i < m; ++i)
    if (!in_j[i]) complement.push_back(i);
  return origin_in_relint(g, complement);
}

bool is_face(const GaleDiagram& g, const std::vector<std::string>& j_labels) {
  std::vector<int> j;
  j.reserve(j_labels.size());
  for (const std::string& l : j_labels) j.push_back(g.index_of(l));
  return is_face(g, j);
}

std::vector<std::vector<int>> vertex_sets_from_gale(const GaleDiagram& g) {
  const int m = int(g.vectors.size());
  if (m > 20) throw BudgetError("diagram too large for subset enumeration");

  // Face test per complement mask; complements of size < 2 can never hold
  // the origin in their hull's relative interior (no zero vectors exist).
  const unsigned total = 1u << m;
  std::vector<bool> face(total, false);
  for (unsigned comp = 0; comp < total; ++comp) {
    if (unsigned(__builtin_popcount(comp)) < 2) continue;
    std::vector<int> c;
    for (int i = 0; i < m; ++i)
      if (comp & (1u << i)) c.push_back(i);
    face[comp] = origin_in_relint(g, c);
  }

  // Vertices are the maximal face subsets J (strict superset check: the face
  // family is not closed under single-element growth, e.g. extending an edge
  // to its vertex may require two facets at once).
  std::vector<std::vector<int>> out;
  for (unsigned comp = 0; comp < total; ++comp) {
    if (!face[comp]) continue;
    unsigned j_mask = (total - 1) & ~comp;
    bool maximal = true;
    for (unsigned sub = (comp - 1) & comp; maximal; sub = (sub - 1) & comp) {
      if (face[sub]) maximal = false;
      if (sub == 0) break;
    }
    if (!maximal) continue;
    std::vector<int> j;
    for (int i = 0; i < m; ++i)
      if (j_mask & (1u << i)) j.push_back(i);
    out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string write_gale(const GaleDiagram& g) {
  std::ostringstream os;
  for (size_t i = 0; i < g.vectors.size(); ++i)
    os << g.labels[i] << ' ' << g.vectors[i][0] << ' ' << g.vectors[i][1] << "\n";
  return os.str();
}

}  // namespace polyvol
