#include "polyvol/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "polyvol/errors.hpp"
#include "polyvol/gale.hpp"
#include "polyvol/triangulate.hpp"

namespace polyvol {

namespace {

Fixture build_fixture() {
  Fixture f;

  f.polytope.dim = 6;
  f.polytope.coord_names = {"x12", "x23", "x31", "x13", "x32", "x21"};
  auto ineq = [&](std::string label, std::vector<long> c, long rhs) {
    Ineq q;
    for (long v : c) q.coeffs.push_back(Rat(v));
    q.rhs = Rat(rhs);
    q.label = std::move(label);
    return q;
  };
  f.polytope.ineqs = {
      ineq("a1", {1, 0, 2, 1, 0, 2}, 1),   ineq("a2", {2, 1, 0, 0, 2, 1}, 1),
      ineq("a3", {0, 2, 1, 2, 1, 0}, 1),   ineq("p12", {-1, 0, 0, 0, 0, 0}, 0),
      ineq("p23", {0, -1, 0, 0, 0, 0}, 0), ineq("p31", {0, 0, -1, 0, 0, 0}, 0),
      ineq("p13", {0, 0, 0, -1, 0, 0}, 0), ineq("p32", {0, 0, 0, 0, -1, 0}, 0),
      ineq("p21", {0, 0, 0, 0, 0, -1}, 0)};

  f.sum_bound = ineq("s", {1, 1, 1, 1, 1, 1}, 1);
  f.wedge_cut1 = ineq("t1", {1, -2, 1, -1, -1, 2}, 0);
  f.wedge_cut2 = ineq("t2", {1, 1, -2, -1, 2, -1}, 0);
  f.mirror_cut = ineq("d", {1, 1, 1, -1, -1, -1}, 0);

  const Rat h(1, 2), t(1, 3), q(1, 4);
  const Rat o(0);
  auto v = [&](std::string label, Vec p, std::string flags) {
    f.vertices.push_back({std::move(label), std::move(p), std::move(flags)});
  };
  v("O", {o, o, o, o, o, o}, "---");
  v("Q23_21", {o, h, o, o, o, h}, "+++");
  v("Q32_31", {o, o, h, o, h, o}, "+++");
  v("Q13_12", {h, o, o, h, o, o}, "+++");
  v("P12", {h, o, o, o, o, o}, "-+-");
  v("P23", {o, h, o, o, o, o}, "--+");
  v("P31", {o, o, h, o, o, o}, "+--");
  v("P13", {o, o, o, h, o, o}, "--+");
  v("P32", {o, o, o, o, h, o}, "-+-");
  v("P21", {o, o, o, o, o, h}, "+--");
  v("R1", {t, t, t, o, o, o}, "+++");
  v("R2", {o, o, o, t, t, t}, "+++");
  v("T12_21", {t, o, o, o, o, t}, "++-");
  v("T23_32", {o, t, o, o, t, o}, "-++");
  v("T31_13", {o, o, t, t, o, o}, "+-+");
  v("V21_32", {o, o, o, o, q, h}, "++-");
  v("V12_31", {h, o, q, o, o, o}, "++-");
  v("V13_21", {o, o, o, h, o, q}, "+-+");
  v("V31_23", {o, q, h, o, o, o}, "+-+");
  v("V32_13", {o, o, o, q, h, o}, "-++");
  v("V23_12", {q, h, o, o, o, o}, "-++");

  f.mirror_edge_point = {"K21_31", {o, o, q, o, o, q}, ""};

  f.wedge_vertex_labels = {"Q23_21", "T12_21", "P21", "R1",     "V21_32", "V13_21", "Q32_31",
                           "T31_13", "P31",    "R2",  "V31_23", "V12_31", "Q13_12", "O"};
  f.half1_vertex_labels = {"P31", "R1", "V31_23", "V12_31", "O",      "Q23_21",
                           "Q32_31", "Q13_12", "T12_21", "T31_13", "K21_31"};
  f.half2_vertex_labels = {"P21", "R2", "V21_32", "V13_21", "O",      "Q23_21",
                           "Q32_31", "Q13_12", "T12_21", "T31_13", "K21_31"};

  const Rat c720(1, 720);
  auto cell = [&](std::string label, std::array<std::string, 7> verts,
                  std::array<std::string, 7> nbrs, Rat vol) {
    f.cells.push_back({std::move(label), std::move(verts), std::move(nbrs), vol});
  };
  cell("D1", {"O", "P31", "Q32_31", "Q23_21", "T31_13", "T12_21", "K21_31"},
       {"a1", "d", "p32", "p23", "p13", "p12", "D2"}, Rat(1, 9) * Rat(2, 64) * c720);
  cell("D2", {"O", "P31", "Q32_31", "Q23_21", "T31_13", "T12_21", "Q13_12"},
       {"a1", "d", "p32", "p23", "D3", "D4", "D1"}, Rat(1, 9) * Rat(1, 16) * c720);
  cell("D3", {"O", "P31", "Q32_31", "Q23_21", "R1", "T12_21", "Q13_12"},
       {"a1", "t2", "p32", "D5", "D2", "D4", "p13"}, Rat(1, 9) * Rat(2, 16) * c720);
  cell("D4", {"O", "P31", "Q32_31", "Q23_21", "T31_13", "R1", "Q13_12"},
       {"a1", "t1", "p32", "p21", "D3", "D2", "D6"}, Rat(1, 9) * Rat(1, 16) * c720);
  cell("D5", {"O", "P31", "Q32_31", "V12_31", "R1", "T12_21", "Q13_12"},
       {"a1", "t2", "p32", "D3", "p23", "p21", "p13"}, Rat(1, 9) * Rat(1, 16) * c720);
  cell("D6", {"O", "P31", "Q32_31", "Q23_21", "T31_13", "R1", "V31_23"},
       {"a1", "t1", "p32", "p21", "p13", "p12", "D4"}, Rat(1, 9) * Rat(2, 64) * c720);

  f.rot3.image = {2, 0, 1, 4, 5, 3};   // values move x12->x23->x31, x13->x21->x32
  f.mirror.image = {3, 4, 5, 0, 1, 2}; // swaps x12<->x13, x23<->x32, x31<->x21

  f.volume = Rat(1, 2880);
  f.wedge_volume = Rat(1, 8640);
  f.half_volume = Rat(1, 17280);
  return f;
}

// "T21_12" and "T12_21" name the same point: the two index pairs are an
// unordered pair of pairs.
std::string swapped_pairs(const std::string& label) {
  auto us = label.find('_');
  if (us == std::string::npos || us < 2) return label;
  size_t head = label.size();
  for (size_t i = 0; i < label.size(); ++i)
    if (std::isdigit(static_cast<unsigned char>(label[i]))) {
      head = i;
      break;
    }
  if (head == 0 || head >= us) return label;
  return label.substr(0, head) + label.substr(us + 1) + "_" +
         label.substr(head, us - head);
}

}  // namespace

const Vec& Fixture::point(const std::string& label) const {
  for (const std::string& cand : {label, swapped_pairs(label)}) {
    if (cand == mirror_edge_point.label) return mirror_edge_point.point;
    for (const LabeledPoint& lp : vertices)
      if (lp.label == cand) return lp.point;
  }
  throw Error("unknown vertex label '" + label + "'");
}

HPolytope Fixture::wedge() const {
  HPolytope keep_ge = slice(polytope, wedge_cut1).second;
  return slice(keep_ge, wedge_cut2).first;
}

HPolytope Fixture::half1() const { return slice(wedge(), mirror_cut).second; }

HPolytope Fixture::half2() const { return slice(wedge(), mirror_cut).first; }

const Fixture& fixture() {
  static const Fixture f = build_fixture();
  return f;
}

namespace {

std::vector<Vec> labeled_points(const Fixture& f, const std::vector<std::string>& labels) {
  std::vector<Vec> pts;
  pts.reserve(labels.size());
  for (const std::string& l : labels) pts.push_back(f.point(l));
  return pts;
}

std::vector<Vec> sorted_points(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

class Checker {
 public:
  void claim(const std::string& name, bool ok, const std::string& detail = "") {
    os_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) os_ << " (" << detail << ")";
    os_ << "\n";
    pass_ &= ok;
  }
  ReferenceReport finish() { return {pass_, os_.str()}; }

 private:
  std::ostringstream os_;
  bool pass_ = true;
};

}  // namespace

ReferenceReport reference_report() {
  const Fixture& f = fixture();
  Checker ck;

  // Vertex set and incidence flags.
  VertexSet vs = enumerate_vertices(f.polytope);
  std::vector<Vec> expected;
  for (const auto& lp : f.vertices) expected.push_back(lp.point);
  ck.claim("vertex set matches the bundled table (21 points)",
           vs.points.size() == 21 && vs.points == sorted_points(expected),
           "enumerated " + std::to_string(vs.points.size()) + " vertices");

  bool flags_ok = true;
  auto table = incidence_table(f.polytope, vs, {0, 1, 2});
  for (const auto& lp : f.vertices) {
    auto it = std::find(vs.points.begin(), vs.points.end(), lp.point);
    if (it == vs.points.end()) {
      flags_ok = false;
      break;
    }
    const auto& row = table[it - vs.points.begin()];
    for (int j = 0; j < 3; ++j)
      if (row[j] != (lp.alpha_flags[j] == '+')) flags_ok = false;
  }
  ck.claim("facet incidence flags match the bundled table", flags_ok);

  // Total volume.
  Rat vol = total_volume(incremental_triangulation(vs.points));
  ck.claim("volume is 1/2880", vol == f.volume, "got " + vol.str());

  // The sum bound is valid but not a facet.
  HPolytope with_sum = f.polytope;
  with_sum.ineqs.push_back(f.sum_bound);
  std::set<int> red = find_redundant(with_sum);
  ck.claim("appended sum bound is the only redundant inequality",
           red == std::set<int>{9});
  ck.claim("all nine bundled inequalities are facets", find_redundant(f.polytope).empty());

  // Wedge decomposition.
  HPolytope wedge = f.wedge();
  VertexSet wvs = enumerate_vertices(wedge);
  ck.claim("wedge slice has the listed 14 vertices",
           wvs.points == sorted_points(labeled_points(f, f.wedge_vertex_labels)),
           "enumerated " + std::to_string(wvs.points.size()) + " vertices");
  Rat wedge_vol = total_volume(incremental_triangulation(wvs.points));
  ck.claim("wedge volume is 1/8640 (a third of the total)",
           wedge_vol == f.wedge_volume && wedge_vol * 3 == f.volume,
           "got " + wedge_vol.str());

  // Mirror halves.
  VertexSet h1 = enumerate_vertices(f.half1());
  VertexSet h2 = enumerate_vertices(f.half2());
  ck.claim("mirror halves have the listed 11-point vertex sets",
           h1.points == sorted_points(labeled_points(f, f.half1_vertex_labels)) &&
               h2.points == sorted_points(labeled_points(f, f.half2_vertex_labels)));
  Rat v1 = total_volume(incremental_triangulation(h1.points));
  Rat v2 = total_volume(incremental_triangulation(h2.points));
  ck.claim("mirror halves each measure 1/17280 (half the wedge)",
           v1 == f.half_volume && v2 == f.half_volume && v1 + v2 == wedge_vol,
           v1.str() + " and " + v2.str());

  // Six-cell tiling of half 1.
  std::vector<Vec> cell_points = labeled_points(f, f.half1_vertex_labels);
  std::map<std::string, int> point_id;
  for (size_t i = 0; i < f.half1_vertex_labels.size(); ++i)
    point_id[f.half1_vertex_labels[i]] = int(i);
  std::vector<Simplex> cells;
  bool cell_vols_ok = true;
  Rat cell_sum;
  for (const auto& c : f.cells) {
    Simplex s;
    std::vector<Vec> pts;
    for (const std::string& l : c.vertices) {
      s.ids.push_back(point_id.at(l));
      pts.push_back(f.point(l));
    }
    cells.push_back(s);
    Rat cv = simplex_volume(pts);
    cell_sum += cv;
    if (cv != c.volume) cell_vols_ok = false;
  }
  ck.claim("cell volumes match the bundled table", cell_vols_ok);
  ck.claim("cell volumes sum to 1/17280", cell_sum == f.half_volume,
           "got " + cell_sum.str());

  Triangulation tiling = triangulation_from_simplices(cell_points, cells);
  HPolytope half1 = f.half1();
  CoverReport cover = verify_covering(tiling, half1);
  ck.claim("cells tile the first half (covering certificate)", cover.pass,
           cover.violations.empty() ? "" : cover.violations.front());

  // Facet adjacency graph against the bundled neighbor data.
  bool nbrs_ok = true;
  std::string nbr_detail;
  for (int ci = 0; ci < int(f.cells.size()) && nbrs_ok; ++ci) {
    for (int vi = 0; vi < 7 && nbrs_ok; ++vi) {
      std::vector<int> facet;
      for (int k = 0; k < 7; ++k)
        if (k != vi) facet.push_back(point_id.at(f.cells[ci].vertices[k]));
      std::sort(facet.begin(), facet.end());
      const FacetRecord* rec = nullptr;
      for (const FacetRecord& r : cover.facets)
        if (r.facet == facet && (r.simplex_a == ci || r.simplex_b == ci)) rec = &r;
      const std::string& want = f.cells[ci].neighbors[vi];
      bool ok = false;
      if (rec) {
        if (rec->simplex_b >= 0) {
          int other = rec->simplex_a == ci ? rec->simplex_b : rec->simplex_a;
          ok = f.cells[other].label == want;
        } else if (rec->tight_ineqs.size() == 1) {
          ok = half1.ineqs[rec->tight_ineqs[0]].label == want;
        }
      }
      if (!ok) {
        nbrs_ok = false;
        nbr_detail = f.cells[ci].label + " facet opposite " + f.cells[ci].vertices[vi] +
                     " should meet " + want;
      }
    }
  }
  ck.claim("facet pairing matches the bundled neighbor table", nbrs_ok, nbr_detail);

  // Symmetry group.
  std::vector<CoordPerm> group = find_symmetries(f.polytope);
  auto in_group = [&](const CoordPerm& g) {
    for (const CoordPerm& a : group)
      if (a.image == g.image) return true;
    return false;
  };
  ck.claim("coordinate symmetry group has order 6 and contains both generators",
           group.size() == 6 && in_group(f.rot3) && in_group(f.mirror),
           "order " + std::to_string(group.size()));

  HPolytope wedge2 = apply_to_polytope(f.rot3, wedge);
  VertexSet wvs2 = enumerate_vertices(wedge2);
  ck.claim("rotation maps the wedge onto its image wedge (congruence certificate)",
           certify_congruent(wvs.points, wvs2.points, f.rot3));
  ck.claim("mirror maps half 1 onto half 2 (congruence certificate)",
           certify_congruent(h1.points, h2.points, f.mirror));
  ck.claim("six times the half volume reproduces the volume",
           v1 * 6 == f.volume && v1 * 6 == vol);

  // Planar diagram vs direct enumeration.
  GaleDiagram g = gale_transform(f.polytope);
  std::vector<std::vector<int>> from_gale = vertex_sets_from_gale(g);
  std::vector<std::vector<int>> direct = vs.incidence;
  std::sort(direct.begin(), direct.end());
  ck.claim("facet subsets read from the planar diagram match direct enumeration",
           from_gale == direct,
           std::to_string(from_gale.size()) + " diagram sets vs " +
               std::to_string(direct.size()) + " enumerated");

  return ck.finish();
}

}  // namespace polyvol
