#include "polyvol/triangulate.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "polyvol/errors.hpp"

namespace polyvol {

namespace {

std::vector<Vec> facet_points(const Triangulation& t, const std::vector<int>& ids) {
  std::vector<Vec> pts;
  pts.reserve(ids.size());
  for (int id : ids) pts.push_back(t.points[id]);
  return pts;
}

Vec centroid(const std::vector<Vec>& pts) {
  Vec c(pts[0].size());
  for (const Vec& p : pts) c = add(c, p);
  return scaled(c, Rat(1, long(pts.size())));
}

// Visibility of a boundary facet from x, decided against the fixed interior
// witness: strictly opposite sides of the facet's hyperplane. Sign 0 at x
// (coplanar) counts as not visible.
bool facet_visible(const Triangulation& t, const std::vector<int>& facet, const Vec& x) {
  std::vector<Vec> pts = facet_points(t, facet);
  int sx = side_sign(pts, x);
  if (sx == 0) return false;
  int sw = side_sign(pts, t.witness);
  if (sw == 0) throw Error("interior witness on a boundary facet; inconsistent state");
  return sx * sw < 0;
}

}  // namespace

Triangulation incremental_triangulation(const std::vector<Vec>& input) {
  if (input.empty()) throw DegenerateError("no points");
  const int n = int(input[0].size());
  for (const Vec& p : input)
    if (int(p.size()) != n) throw DimensionError("points of mixed dimension");

  Triangulation t;
  t.dim = n;
  for (const Vec& p : input)
    if (std::find(t.points.begin(), t.points.end(), p) == t.points.end())
      t.points.push_back(p);
  const int k = int(t.points.size());

  // Seed: first affinely independent n+1 points in input order.
  std::vector<int> seed;
  std::vector<Vec> seed_pts;
  for (int i = 0; i < k && int(seed.size()) < n + 1; ++i) {
    seed_pts.push_back(t.points[i]);
    if (affine_rank(seed_pts) == int(seed_pts.size()) - 1)
      seed.push_back(i);
    else
      seed_pts.pop_back();
  }
  if (int(seed.size()) < n + 1)
    throw DegenerateError("all points lie in a common hyperplane");

  t.witness = centroid(seed_pts);
  t.simplices.push_back({seed});
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<int> facet;
    for (int i = 0; i <= n; ++i)
      if (i != drop) facet.push_back(seed[i]);
    t.boundary.emplace(std::move(facet), 0);
  }

  std::vector<bool> in_seed(k, false);
  for (int s : seed) in_seed[s] = true;

  for (int v = 0; v < k; ++v) {
    if (in_seed[v]) continue;
    const Vec& x = t.points[v];

    std::vector<std::vector<int>> visible;
    for (const auto& [facet, adj] : t.boundary)
      if (facet_visible(t, facet, x)) visible.push_back(facet);

    if (visible.empty()) {
      // Must be inside or on the hull: an exterior point always lies strictly
      // beyond some facet of a convex boundary.
      std::vector<Vec> so_far(t.points.begin(), t.points.begin() + v);
      for (int s : seed)
        if (s > v) so_far.push_back(t.points[s]);
      if (!point_in_hull(so_far, x))
        throw Error("exterior point saw no facet; inconsistent state");
      continue;
    }

    std::map<std::vector<int>, std::pair<int, int>> rim;  // facet -> (count, simplex)
    for (const std::vector<int>& f : visible) {
      t.boundary.erase(f);
      std::vector<int> ids = f;
      ids.push_back(v);
      std::sort(ids.begin(), ids.end());
      int s_idx = int(t.simplices.size());
      t.simplices.push_back({ids});
      for (int drop = 0; drop <= n; ++drop) {
        if (ids[drop] == v) continue;  // that is the base facet f itself
        std::vector<int> g;
        for (int i = 0; i <= n; ++i)
          if (i != drop) g.push_back(ids[i]);
        auto [it, fresh] = rim.emplace(std::move(g), std::make_pair(1, s_idx));
        if (!fresh) it->second.first += 1;
      }
    }
    for (auto& [facet, cs] : rim) {
      if (cs.first == 1)
        t.boundary.emplace(facet, cs.second);
      else if (cs.first != 2)
        throw Error("facet shared by more than two cones; inconsistent state");
    }
  }
  return t;
}

Triangulation triangulation_from_simplices(std::vector<Vec> points,
                                           std::vector<Simplex> simplices) {
  if (points.empty() || simplices.empty())
    throw DegenerateError("empty triangulation");
  Triangulation t;
  t.dim = int(points[0].size());
  t.points = std::move(points);
  std::map<std::vector<int>, std::pair<int, int>> count;
  for (int s = 0; s < int(simplices.size()); ++s) {
    std::vector<int>& ids = simplices[s].ids;
    std::sort(ids.begin(), ids.end());
    if (int(ids.size()) != t.dim + 1)
      throw DimensionError("simplex with wrong vertex count");
    for (int id : ids)
      if (id < 0 || id >= int(t.points.size())) throw Error("simplex id out of range");
    for (size_t drop = 0; drop < ids.size(); ++drop) {
      std::vector<int> f;
      for (size_t i = 0; i < ids.size(); ++i)
        if (i != drop) f.push_back(ids[i]);
      auto [it, fresh] = count.emplace(std::move(f), std::make_pair(1, s));
      if (!fresh) it->second.first += 1;
    }
  }
  t.simplices = std::move(simplices);
  for (auto& [facet, cs] : count)
    if (cs.first == 1) t.boundary.emplace(facet, cs.second);
  std::vector<Vec> first;
  for (int id : t.simplices[0].ids) first.push_back(t.points[id]);
  t.witness = centroid(first);
  return t;
}

std::vector<std::vector<int>> visible_facets(const Triangulation& t, const Vec& x) {
  if (t.simplices.empty()) throw Error("visible_facets: empty triangulation");
  std::vector<std::vector<int>> out;
  for (const auto& [facet, adj] : t.boundary)
    if (facet_visible(t, facet, x)) out.push_back(facet);
  return out;
}

Rat total_volume(const Triangulation& t) {
  Rat v;
  for (const Simplex& s : t.simplices) v += simplex_volume(facet_points(t, s.ids));
  return v;
}

std::string CoverReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << ": " << facets.size() << " facets, volume "
     << triangulated_volume << " vs hull " << hull_volume << "\n";
  for (const std::string& v : violations) os << "  violation: " << v << "\n";
  return os.str();
}

CoverReport verify_covering(const Triangulation& t, const HPolytope& p) {
  CoverReport rep;
  std::ostringstream msg;

  for (size_t i = 0; i < t.points.size(); ++i)
    for (const Ineq& q : p.ineqs)
      if (dot(q.coeffs, t.points[i]) > q.rhs)
        rep.violations.push_back("point " + std::to_string(i) +
                                 " violates inequality '" + q.label + "'");

  for (size_t s = 0; s < t.simplices.size(); ++s) {
    Rat vol = simplex_volume(facet_points(t, t.simplices[s].ids));
    rep.triangulated_volume += vol;
    if (vol.is_zero())
      rep.violations.push_back("simplex " + std::to_string(s) + " is degenerate");
  }

  // Facet matching: shared with exactly one other simplex, or lying inside
  // a bounding hyperplane of p.
  std::map<std::vector<int>, std::vector<int>> owners;
  for (int s = 0; s < int(t.simplices.size()); ++s) {
    const std::vector<int>& ids = t.simplices[s].ids;
    for (size_t drop = 0; drop < ids.size(); ++drop) {
      std::vector<int> f;
      for (size_t i = 0; i < ids.size(); ++i)
        if (i != drop) f.push_back(ids[i]);
      owners[f].push_back(s);
    }
  }
  for (auto& [facet, who] : owners) {
    FacetRecord rec;
    rec.facet = facet;
    rec.simplex_a = who[0];
    if (who.size() == 2) {
      rec.simplex_b = who[1];
    } else if (who.size() == 1) {
      for (int i = 0; i < int(p.ineqs.size()); ++i) {
        bool all_tight = true;
        for (int id : facet)
          if (dot(p.ineqs[i].coeffs, t.points[id]) != p.ineqs[i].rhs) {
            all_tight = false;
            break;
          }
        if (all_tight) rec.tight_ineqs.push_back(i);
      }
      if (rec.tight_ineqs.empty()) {
        std::ostringstream v;
        v << "orphan facet {";
        for (size_t i = 0; i < facet.size(); ++i) v << (i ? " " : "") << facet[i];
        v << "} of simplex " << who[0]
          << " is neither shared nor on a bounding hyperplane";
        rep.violations.push_back(v.str());
      }
    } else {
      rep.violations.push_back("facet shared by " + std::to_string(who.size()) +
                               " simplices");
    }
    rep.facets.push_back(std::move(rec));
  }

  // Independent volume: enumerate p's vertices and triangulate them afresh.
  VertexSet vs = enumerate_vertices(p);
  if (vs.points.empty()) {
    rep.violations.push_back("polytope has no vertices");
  } else if (affine_rank(vs.points) != t.dim) {
    rep.violations.push_back("polytope is not full-dimensional");
  } else {
    rep.hull_volume = total_volume(incremental_triangulation(vs.points));
    if (rep.hull_volume != rep.triangulated_volume)
      rep.violations.push_back("volume mismatch: simplices sum to " +
                               rep.triangulated_volume.str() + " but the hull measures " +
                               rep.hull_volume.str());
  }

  rep.pass = rep.violations.empty();
  return rep;
}

std::string write_triangulation(const Triangulation& t) {
  std::ostringstream os;
  os << "points " << t.points.size() << " dim " << t.dim << "\n";
  for (const Vec& p : t.points) os << vec_str(p) << "\n";
  os << "simplices " << t.simplices.size() << "\n";
  std::vector<std::vector<int>> tuples;
  tuples.reserve(t.simplices.size());
  for (const Simplex& s : t.simplices) tuples.push_back(s.ids);
  std::sort(tuples.begin(), tuples.end());
  for (const std::vector<int>& ids : tuples) {
    for (size_t i = 0; i < ids.size(); ++i) os << (i ? " " : "") << ids[i];
    os << "\n";
  }
  return os.str();
}

Triangulation parse_triangulation(std::istream& in) {
  std::string tok;
  long k = 0, n = 0, m = 0;
  if (!(in >> tok) || tok != "points" || !(in >> k) || !(in >> tok) || tok != "dim" ||
      !(in >> n) || k < 1 || n < 1)
    throw ParseError(1, "expected 'points <k> dim <n>'");
  std::vector<Vec> points(k, Vec(n));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < n; ++j) {
      if (!(in >> tok)) throw ParseError(int(i + 2), "truncated point list");
      auto r = Rat::parse(tok);
      if (!r) throw ParseError(int(i + 2), "malformed rational '" + tok + "'");
      points[i][j] = *r;
    }
  if (!(in >> tok) || tok != "simplices" || !(in >> m) || m < 1)
    throw ParseError(int(k + 2), "expected 'simplices <m>'");
  std::vector<Simplex> simplices(m);
  for (long s = 0; s < m; ++s)
    for (long j = 0; j <= n; ++j) {
      long id;
      if (!(in >> id) || id < 0 || id >= k)
        throw ParseError(int(k + 3 + s), "bad simplex id");
      simplices[s].ids.push_back(int(id));
    }
  return triangulation_from_simplices(std::move(points), std::move(simplices));
}

Triangulation parse_triangulation_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return parse_triangulation(f);
}

}  // namespace polyvol
