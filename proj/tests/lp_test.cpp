#include "polyvol/lp.hpp"

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/hrep.hpp"

using namespace polyvol;

namespace {

// eq matrix for "sum lambda_i c_i = 0, sum lambda_i = 1" over 2-vectors
Mat barycentric_system(const std::vector<Vec>& cs) {
  Mat eq(3, int(cs.size()));
  for (int i = 0; i < int(cs.size()); ++i) {
    eq.at(0, i) = cs[i][0];
    eq.at(1, i) = cs[i][1];
    eq.at(2, i) = 1;
  }
  return eq;
}

const Vec kRhs{Rat(0), Rat(0), Rat(1)};

}  // namespace

TEST_CASE("lp_maximize: bounded, unbounded, infeasible") {
  // max x + y on the triangle x,y >= 0, x + y <= 3
  Mat a(1, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  LpResult r = lp_maximize(a, Vec{Rat(3)}, {Rel::Le}, Vec{Rat(1), Rat(1)},
                           std::vector<bool>{true, true});
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rat(3));

  // same feasible set, free variables: unbounded
  r = lp_maximize(a, Vec{Rat(3)}, {Rel::Le}, Vec{Rat(1), Rat(-1)});
  CHECK(r.status == LpStatus::Unbounded);

  // x <= -1, x >= 0: infeasible
  Mat b(2, 1);
  b.at(0, 0) = 1;
  b.at(1, 0) = 1;
  r = lp_maximize(b, Vec{Rat(-1), Rat(0)}, {Rel::Le, Rel::Ge}, Vec{Rat(1)});
  CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("lp_maximize: exact rational optimum on a degenerate system") {
  // max x subject to x <= 1/3 stated three redundant ways plus an equality
  Mat a(4, 2);
  for (int i = 0; i < 3; ++i) {
    a.at(i, 0) = Rat(i + 1);
    a.at(i, 1) = 0;
  }
  a.at(3, 0) = 0;
  a.at(3, 1) = 1;
  Vec rhs{Rat(1, 3), Rat(2, 3), Rat(1), Rat(7, 5)};
  LpResult r = lp_maximize(a, rhs, {Rel::Le, Rel::Le, Rel::Le, Rel::Eq},
                           Vec{Rat(1), Rat(0)});
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rat(1, 3));
  CHECK(r.x[1] == Rat(7, 5));
}

TEST_CASE("lp_feasible_strict: antipodal pair, separated pair, surrounding triangle") {
  auto lam = lp_feasible_strict(
      barycentric_system({{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}}), kRhs);
  REQUIRE(lam.has_value());
  CHECK(*lam == Vec{Rat(1, 2), Rat(1, 2)});

  CHECK(!lp_feasible_strict(
      barycentric_system({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}), kRhs));

  auto tri = lp_feasible_strict(
      barycentric_system({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}),
      kRhs);
  REQUIRE(tri.has_value());
  for (const Rat& l : *tri) CHECK(l.sign() > 0);
}

TEST_CASE("lp_feasible_strict: origin on hull boundary is rejected") {
  // origin lies on the segment between the first two vectors but the third
  // cannot take positive weight
  CHECK(!lp_feasible_strict(
      barycentric_system({{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}}),
      kRhs));
}

TEST_CASE("lp_maximize: optimum equals the best vertex of random bounded hulls") {
  // Independent cross-check of the simplex method: over a bounded region the
  // maximum of a linear objective is attained at a vertex, and the vertices
  // come from basis enumeration, a completely different code path.
  oracles::RatSampler s(1999, 3, 2);
  int checked = 0;
  while (checked < 40) {
    int dim = 2 + int(s.rng() % 3);
    std::vector<Vec> cloud;
    for (int i = 0; i < dim + 4; ++i) cloud.push_back(s.point(dim));
    if (polyvol::affine_rank(cloud) != dim) continue;
    HPolytope hull = oracles::brute_force_hull(cloud);
    VertexSet vs = enumerate_vertices(hull);
    REQUIRE(!vs.points.empty());

    Vec obj = s.point(dim);
    Mat a(int(hull.ineqs.size()), dim);
    Vec rhs(hull.ineqs.size());
    std::vector<Rel> rel(hull.ineqs.size(), Rel::Le);
    for (int r = 0; r < int(hull.ineqs.size()); ++r) {
      for (int c = 0; c < dim; ++c) a.at(r, c) = hull.ineqs[r].coeffs[c];
      rhs[r] = hull.ineqs[r].rhs;
    }
    LpResult res = lp_maximize(a, rhs, rel, obj);
    REQUIRE(res.status == LpStatus::Optimal);

    Rat best = dot(obj, vs.points[0]);
    for (const Vec& v : vs.points) best = std::max(best, dot(obj, v));
    CHECK(res.objective == best);
    ++checked;
  }
}

TEST_CASE("lp_feasible_strict: solutions verify by substitution") {
  oracles::RatSampler s(5150, 3, 2);
  int found = 0;
  for (int it = 0; it < 200; ++it) {
    std::vector<Vec> cs;
    int k = 2 + int(it % 5);
    for (int i = 0; i < k; ++i) cs.push_back(s.point(2));
    Mat eq = barycentric_system(cs);
    auto lam = lp_feasible_strict(eq, kRhs);
    if (!lam) continue;
    ++found;
    REQUIRE(lam->size() == size_t(k));
    for (int r = 0; r < 3; ++r) {
      Rat acc;
      for (int i = 0; i < k; ++i) acc += eq.at(r, i) * (*lam)[i];
      CHECK(acc == kRhs[r]);
    }
    for (const Rat& l : *lam) CHECK(l.sign() > 0);
  }
  CHECK(found > 30);
}
