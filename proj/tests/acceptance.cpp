// Acceptance suite: re-derives every bundled reference quantity end to end
// and exercises the CLI binary (path expected as argv[1]). Prints one
// PASS/FAIL line per criterion and exits nonzero when anything fails.
// Run from the repository root so the fixtures/ paths resolve.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyvol/fixture.hpp"
#include "polyvol/gale.hpp"
#include "polyvol/hrep.hpp"
#include "polyvol/symmetry.hpp"
#include "polyvol/triangulate.hpp"

using namespace polyvol;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI binary and captures stdout (diagnostics stay on stderr).
CommandResult run_cli(const std::string& binary, const std::string& args) {
  CommandResult r;
  std::string cmd = binary + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<Vec> label_points(const std::vector<std::string>& labels) {
  std::vector<Vec> pts;
  for (const std::string& l : labels) pts.push_back(fixture().point(l));
  std::sort(pts.begin(), pts.end());
  return pts;
}

// --- criterion 1: vertex and incidence reproduction -------------------------

void criterion1(const std::string& cli) {
  auto t0 = std::chrono::steady_clock::now();
  const Fixture& f = fixture();
  VertexSet vs = enumerate_vertices(f.polytope);

  std::vector<Vec> expected;
  for (const auto& lp : f.vertices) expected.push_back(lp.point);
  std::sort(expected.begin(), expected.end());
  bool ok = vs.points == expected;

  auto flags = incidence_table(f.polytope, vs, {0, 1, 2});
  for (const auto& lp : f.vertices) {
    auto it = std::find(vs.points.begin(), vs.points.end(), lp.point);
    if (it == vs.points.end()) {
      ok = false;
      break;
    }
    const auto& row = flags[it - vs.points.begin()];
    for (int j = 0; j < 3; ++j) ok &= row[j] == (lp.alpha_flags[j] == '+');
  }
  double dt = seconds_since(t0);
  ok &= dt < 1.0;

  CommandResult cr = run_cli(cli, "vertices fixtures/reference.hrep");
  long lines = std::count(cr.output.begin(), cr.output.end(), '\n');
  ok &= cr.exit_code == 0 && lines == 21;
  ok &= cr.output.rfind("0 0 0 0 0 0 [p12 p23 p31 p13 p32 p21]\n", 0) == 0;

  report(1, "vertex set and incidence flags reproduce the bundled table", ok,
         fmt_seconds(dt) + ", cli lines " + std::to_string(lines));
}

// --- criterion 2: exact volume ----------------------------------------------

void criterion2(const std::string& cli) {
  auto t0 = std::chrono::steady_clock::now();
  const Fixture& f = fixture();
  VertexSet vs = enumerate_vertices(f.polytope);
  Rat vol = total_volume(incremental_triangulation(vs.points));
  double dt = seconds_since(t0);
  bool ok = vol == Rat(1, 2880) && dt < 5.0;

  CommandResult cr = run_cli(cli, "volume fixtures/reference.hrep");
  ok &= cr.exit_code == 0 && cr.output == "1/2880\n";
  CommandResult simplex = run_cli(cli, "volume fixtures/unit-simplex-6.hrep");
  ok &= simplex.exit_code == 0 && simplex.output == "1/720\n";

  report(2, "volume is exactly 1/2880", ok, "got " + vol.str() + ", " + fmt_seconds(dt));
}

// --- criterion 3: the appended sum bound is redundant ------------------------

void criterion3(const std::string& cli) {
  const Fixture& f = fixture();
  HPolytope with_sum = f.polytope;
  with_sum.ineqs.push_back(f.sum_bound);
  bool ok = find_redundant(with_sum) == std::set<int>{9};
  ok &= find_redundant(f.polytope).empty();

  CommandResult cr = run_cli(cli, "redundant fixtures/reference-sum.hrep");
  ok &= cr.exit_code == 0 && cr.output == "s\n";

  report(3, "appended sum bound is flagged redundant, the nine facets are not", ok, "");
}

// --- criterion 4: decomposition chain ----------------------------------------

void criterion4() {
  const Fixture& f = fixture();
  VertexSet wedge = enumerate_vertices(f.wedge());
  VertexSet h1 = enumerate_vertices(f.half1());
  VertexSet h2 = enumerate_vertices(f.half2());

  bool ok = wedge.points == label_points(f.wedge_vertex_labels);
  ok &= h1.points == label_points(f.half1_vertex_labels);
  ok &= h2.points == label_points(f.half2_vertex_labels);

  Rat wedge_vol = total_volume(incremental_triangulation(wedge.points));
  Rat v1 = total_volume(incremental_triangulation(h1.points));
  Rat v2 = total_volume(incremental_triangulation(h2.points));
  ok &= wedge_vol == Rat(1, 8640);
  ok &= v1 == Rat(1, 17280) && v2 == Rat(1, 17280);

  report(4, "slice chain: wedge 1/8640 with 14 vertices, halves 1/17280 with 11 each",
         ok, wedge_vol.str() + ", " + v1.str() + ", " + v2.str());
}

// --- criterion 5: six-cell tiling certification -------------------------------

void criterion5() {
  const Fixture& f = fixture();
  const std::array<Rat, 6> expected_vols{
      Rat(1, 9) * Rat(2, 64) * Rat(1, 720), Rat(1, 9) * Rat(1, 16) * Rat(1, 720),
      Rat(1, 9) * Rat(2, 16) * Rat(1, 720), Rat(1, 9) * Rat(1, 16) * Rat(1, 720),
      Rat(1, 9) * Rat(1, 16) * Rat(1, 720), Rat(1, 9) * Rat(2, 64) * Rat(1, 720)};

  std::map<std::string, int> id;
  std::vector<Vec> pts;
  for (const std::string& l : f.half1_vertex_labels) {
    id[l] = int(pts.size());
    pts.push_back(f.point(l));
  }

  bool ok = true;
  Rat sum;
  std::vector<Simplex> cells;
  for (size_t c = 0; c < f.cells.size(); ++c) {
    Simplex s;
    std::vector<Vec> cv;
    for (const std::string& l : f.cells[c].vertices) {
      s.ids.push_back(id.at(l));
      cv.push_back(f.point(l));
    }
    cells.push_back(s);
    Rat vol = simplex_volume(cv);
    ok &= vol == expected_vols[c];
    sum += vol;
  }
  ok &= sum == Rat(1, 9) * Rat(6, 16) * Rat(1, 720);  // = (1/24)(1/720)
  ok &= sum == Rat(1, 17280);

  HPolytope half = f.half1();
  CoverReport rep = verify_covering(triangulation_from_simplices(pts, cells), half);
  ok &= rep.pass;

  // facet pairing graph against the bundled neighbor table
  for (size_t c = 0; c < f.cells.size() && ok; ++c) {
    for (int vi = 0; vi < 7 && ok; ++vi) {
      std::vector<int> facet;
      for (int k = 0; k < 7; ++k)
        if (k != vi) facet.push_back(id.at(f.cells[c].vertices[k]));
      std::sort(facet.begin(), facet.end());
      const std::string& want = f.cells[c].neighbors[vi];
      bool match = false;
      for (const FacetRecord& r : rep.facets) {
        if (r.facet != facet || (r.simplex_a != int(c) && r.simplex_b != int(c)))
          continue;
        if (r.simplex_b >= 0) {
          int other = r.simplex_a == int(c) ? r.simplex_b : r.simplex_a;
          match = f.cells[other].label == want;
        } else if (r.tight_ineqs.size() == 1) {
          match = half.ineqs[r.tight_ineqs[0]].label == want;
        }
        break;
      }
      ok &= match;
    }
  }
  report(5, "six cells: volumes, sum 1/17280, covering certificate, neighbor graph",
         ok, "sum " + sum.str());
}

// --- criterion 6: symmetry ----------------------------------------------------

void criterion6() {
  const Fixture& f = fixture();
  std::vector<CoordPerm> group = find_symmetries(f.polytope);
  auto in_group = [&](const CoordPerm& g) {
    for (const CoordPerm& a : group)
      if (a.image == g.image) return true;
    return false;
  };
  bool ok = group.size() == 6 && in_group(f.rot3) && in_group(f.mirror);

  HPolytope wedge = f.wedge();
  VertexSet w1 = enumerate_vertices(wedge);
  VertexSet w2 = enumerate_vertices(apply_to_polytope(f.rot3, wedge));
  ok &= certify_congruent(w1.points, w2.points, f.rot3);

  VertexSet h1 = enumerate_vertices(f.half1());
  VertexSet h2 = enumerate_vertices(f.half2());
  ok &= certify_congruent(h1.points, h2.points, f.mirror);

  Rat v1 = total_volume(incremental_triangulation(h1.points));
  Rat total = total_volume(
      incremental_triangulation(enumerate_vertices(f.polytope).points));
  ok &= v1 * 6 == total && total == Rat(1, 2880);

  report(6, "order-6 symmetry group, congruence certificates, sixfold quotient", ok,
         "group order " + std::to_string(group.size()));
}

// --- criterion 7: planar diagram equals direct enumeration --------------------

void criterion7() {
  const Fixture& f = fixture();
  GaleDiagram g = gale_transform(f.polytope);
  std::vector<std::vector<int>> from_diagram = vertex_sets_from_gale(g);
  std::vector<std::vector<int>> direct = enumerate_vertices(f.polytope).incidence;
  std::sort(direct.begin(), direct.end());
  bool ok = from_diagram.size() == 21 && from_diagram == direct;
  report(7, "21 co-facet sets from the planar diagram match direct enumeration", ok,
         std::to_string(from_diagram.size()) + " sets");
}

// --- criterion 8: triangulation robustness ------------------------------------

void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  const Fixture& f = fixture();
  bool ok = true;

  std::vector<Vec> pts;
  for (const auto& lp : f.vertices) pts.push_back(lp.point);
  std::mt19937 rng(20260808);
  for (int it = 0; it < 20 && ok; ++it) {
    std::shuffle(pts.begin(), pts.end(), rng);
    Triangulation t = incremental_triangulation(pts);
    ok &= total_volume(t) == Rat(1, 2880);
    ok &= verify_covering(t, f.polytope).pass;
  }

  oracles::RatSampler sampler(424242, 3, 4);  // coordinates in {-3..3}/{1..4}
  int done = 0;
  while (done < 100 && ok) {
    int dim = 2 + int(sampler.rng() % 3);
    int count = dim + 1 + int(sampler.rng() % (12 - dim));
    std::vector<Vec> cloud;
    for (int i = 0; i < count; ++i) cloud.push_back(sampler.point(dim));
    if (affine_rank(cloud) != dim) continue;
    ++done;

    Triangulation t = incremental_triangulation(cloud);
    HPolytope hull = oracles::brute_force_hull(cloud);
    ok &= verify_covering(t, hull).pass;

    std::shuffle(cloud.begin(), cloud.end(), sampler.rng);
    ok &= total_volume(incremental_triangulation(cloud)) == total_volume(t);
  }

  double dt = seconds_since(t0);
  ok &= dt < 60.0;
  report(8, "20 random insertion orders plus 100 random hulls verify exactly", ok,
         fmt_seconds(dt));
}

// --- criterion 9: the CLI pipeline --------------------------------------------

void criterion9(const std::string& cli) {
  CommandResult cr = run_cli(cli, "verify --paper");
  bool ok = cr.exit_code == 0 && !cr.output.empty();
  int pass_lines = 0, fail_lines = 0;
  std::istringstream is(cr.output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("PASS ", 0) == 0) ++pass_lines;
    else ++fail_lines;
  }
  ok &= fail_lines == 0 && pass_lines >= 12;

  // byte-determinism across runs
  CommandResult again = run_cli(cli, "verify --paper");
  ok &= again.exit_code == 0 && again.output == cr.output;

  // diagnostics never reach the data stream
  CommandResult bad = run_cli(cli, "vertices /nonexistent.hrep 2>/dev/null");
  ok &= bad.exit_code == 1 && bad.output.empty();

  // triangulation serialization survives a round trip through verify-cover
  CommandResult cover = run_cli(
      cli, "triangulate fixtures/reference.hrep > /tmp/polyvol_ref.tri && " + cli +
               " verify-cover /tmp/polyvol_ref.tri fixtures/reference.hrep");
  ok &= cover.exit_code == 0 && cover.output.rfind("PASS", 0) == 0;

  // slice emits files that parse back; the two pieces split the area evenly
  CommandResult sl = run_cli(
      cli, "slice fixtures/unit-square.hrep --by 1 -1 0 --out /tmp/polyvol_sq");
  ok &= sl.exit_code == 0;
  for (const char* side : {"le", "ge"}) {
    CommandResult piece =
        run_cli(cli, std::string("volume /tmp/polyvol_sq.") + side + ".hrep");
    ok &= piece.exit_code == 0 && piece.output == "1/2\n";
  }

  report(9, "`verify --paper` prints one PASS line per claim and exits 0", ok,
         std::to_string(pass_lines) + " claims");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: polyvol_acceptance <path-to-polyvol-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  criterion1(cli);
  criterion2(cli);
  criterion3(cli);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(cli);
  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
