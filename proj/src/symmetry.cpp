#include "polyvol/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "polyvol/errors.hpp"

namespace polyvol {

namespace {

// Primitive integer form of an inequality under positive scaling only, so
// orientation is preserved: (coeffs, rhs) scaled by the positive rational
// that clears denominators and divides out the common factor.
std::vector<mpz_class> canonical_ineq(const Ineq& q) {
  mpz_class l = q.rhs.den();
  for (const Rat& c : q.coeffs) l = lcm(l, c.den());
  std::vector<mpz_class> v;
  v.reserve(q.coeffs.size() + 1);
  for (const Rat& c : q.coeffs) v.push_back(c.num() * (l / c.den()));
  v.push_back(q.rhs.num() * (l / q.rhs.den()));
  mpz_class g = 0;
  for (const mpz_class& x : v) g = gcd(g, abs(x));
  if (g > 1)
    for (mpz_class& x : v) x /= g;
  return v;
}

std::map<std::vector<mpz_class>, int> canonical_multiset(const HPolytope& p) {
  std::map<std::vector<mpz_class>, int> ms;
  for (const Ineq& q : p.ineqs) ms[canonical_ineq(q)] += 1;
  return ms;
}

}  // namespace

CoordPerm CoordPerm::identity(int n) {
  CoordPerm g;
  g.image.resize(n);
  std::iota(g.image.begin(), g.image.end(), 0);
  return g;
}

bool CoordPerm::is_identity() const {
  for (int i = 0; i < int(image.size()); ++i)
    if (image[i] != i) return false;
  return true;
}

void check_perm(const CoordPerm& g) {
  const int n = int(g.image.size());
  std::vector<bool> seen(n, false);
  for (int v : g.image) {
    if (v < 0 || v >= n || seen[v]) throw Error("image is not a permutation");
    seen[v] = true;
  }
}

Vec apply_to_point(const CoordPerm& g, const Vec& v) {
  if (g.image.size() != v.size())
    throw DimensionError("apply_to_point: dimension mismatch");
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[g.image[i]];
  return out;
}

HPolytope apply_to_polytope(const CoordPerm& g, const HPolytope& p) {
  if (int(g.image.size()) != p.dim)
    throw DimensionError("apply_to_polytope: dimension mismatch");
  HPolytope out = p;
  for (Ineq& q : out.ineqs) q.coeffs = apply_to_point(g, q.coeffs);
  if (!out.coord_names.empty()) {
    for (int i = 0; i < p.dim; ++i) out.coord_names[i] = p.coord_names[g.image[i]];
  }
  return out;
}

CoordPerm compose(const CoordPerm& g, const CoordPerm& h) {
  if (g.image.size() != h.image.size()) throw DimensionError("compose: size mismatch");
  CoordPerm r;
  r.image.resize(g.image.size());
  // (g.h)(x)[i] = h(x)[g.image[i]] = x[h.image[g.image[i]]]
  for (size_t i = 0; i < r.image.size(); ++i) r.image[i] = h.image[g.image[i]];
  return r;
}

CoordPerm inverse(const CoordPerm& g) {
  CoordPerm r;
  r.image.resize(g.image.size());
  for (size_t i = 0; i < g.image.size(); ++i) r.image[g.image[i]] = int(i);
  return r;
}

std::vector<CoordPerm> find_symmetries(const HPolytope& p, const SymmetryOptions& opts) {
  const int n = p.dim;
  if (n > opts.max_dim)
    throw BudgetError("dimension " + std::to_string(n) +
                      " exceeds the permutation search budget (max_dim = " +
                      std::to_string(opts.max_dim) + ")");

  const auto target = canonical_multiset(p);
  std::vector<CoordPerm> group;
  CoordPerm g = CoordPerm::identity(n);
  do {
    std::map<std::vector<mpz_class>, int> image_ms;
    bool ok = true;
    for (const Ineq& q : p.ineqs) {
      Ineq moved{apply_to_point(g, q.coeffs), q.rhs, {}};
      auto key = canonical_ineq(moved);
      if (!target.count(key)) {
        ok = false;
        break;
      }
      image_ms[key] += 1;
    }
    if (ok && image_ms == target) group.push_back(g);
  } while (std::next_permutation(g.image.begin(), g.image.end()));

  // The fixed-point set of a group action is a group; verify anyway.
  std::vector<std::vector<int>> images;
  for (const CoordPerm& a : group) images.push_back(a.image);
  std::sort(images.begin(), images.end());
  auto contains = [&](const CoordPerm& a) {
    return std::binary_search(images.begin(), images.end(), a.image);
  };
  for (const CoordPerm& a : group) {
    if (!contains(inverse(a))) throw Error("symmetry set not closed under inverse");
    for (const CoordPerm& b : group)
      if (!contains(compose(a, b))) throw Error("symmetry set not closed under composition");
  }
  return group;
}

bool certify_congruent(const std::vector<Vec>& a, const std::vector<Vec>& b,
                       const CoordPerm& g) {
  if (a.size() != b.size()) return false;
  std::vector<Vec> moved;
  moved.reserve(a.size());
  for (const Vec& v : a) moved.push_back(apply_to_point(g, v));
  std::sort(moved.begin(), moved.end());
  std::vector<Vec> sorted_b = b;
  std::sort(sorted_b.begin(), sorted_b.end());
  return moved == sorted_b;
}

std::string cycle_string(const CoordPerm& g, const std::vector<std::string>& names) {
  const int n = int(g.image.size());
  if (!names.empty() && int(names.size()) != n)
    throw DimensionError("cycle_string: name count mismatch");
  auto name_of = [&](int i) {
    return names.empty() ? std::to_string(i + 1) : names[i];
  };
  // The value at coordinate j moves to coordinate sigma(j) = image^{-1}(j);
  // cycles read in movement order.
  CoordPerm sigma = inverse(g);
  std::ostringstream os;
  std::vector<bool> done(n, false);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (done[i] || sigma.image[i] == i) continue;
    os << '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      os << (first ? "" : " ") << name_of(j);
      first = false;
      j = sigma.image[j];
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace polyvol
