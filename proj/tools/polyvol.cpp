// polyvol command line: exact polytope computations on H-representation files.
// Subcommands cover vertex enumeration, exact volume, redundancy detection,
// hyperplane slicing, planar (Gale) diagrams, coordinate symmetries,
// triangulation, covering certificates, and the bundled reference pipeline.
// Exit codes: 0 success/PASS, 1 FAIL or computational error, 2 usage or
// parse error. Results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/fixture.hpp"
#include "polyvol/gale.hpp"
#include "polyvol/hrep.hpp"
#include "polyvol/symmetry.hpp"
#include "polyvol/triangulate.hpp"

namespace {

using namespace polyvol;

EnumerateOptions enum_options(int threads) {
  EnumerateOptions opts;
  opts.threads = threads;
  if (const char* env = std::getenv("POLYVOL_BASIS_BUDGET")) {
    try {
      opts.basis_budget = std::stoll(env);
    } catch (...) {
      throw Error("POLYVOL_BASIS_BUDGET is not an integer: '" + std::string(env) + "'");
    }
  }
  return opts;
}

Rat parse_rat_arg(const std::string& s) {
  auto r = Rat::parse(s);
  if (!r) throw Error("malformed rational '" + s + "'");
  return *r;
}

// Canonical vertex order used by `triangulate --order`: the lexicographically
// sorted output of enumerate_vertices.
std::vector<Vec> canonical_vertices(const std::string& path, int threads) {
  HPolytope p = parse_hrep_file(path);
  return enumerate_vertices(p, enum_options(threads)).points;
}

std::string stem_of(const std::string& path) {
  std::string stem = path;
  if (auto dot = stem.rfind(".hrep"); dot != std::string::npos && dot == stem.size() - 5)
    stem.erase(dot);
  return stem;
}

int run(int argc, char** argv) {
  CLI::App app{"exact rational polytope computations"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for vertex enumeration")
      ->check(CLI::PositiveNumber);

  std::string file, tri_file, hrep_file, order, out_prefix, cut_label = "cut";
  std::vector<std::string> by;

  auto* c_vertices = app.add_subcommand("vertices", "enumerate vertices with incidence labels");
  c_vertices->add_option("file", file)->required();

  auto* c_volume = app.add_subcommand("volume", "exact volume via triangulation");
  c_volume->add_option("file", file)->required();

  auto* c_redundant = app.add_subcommand("redundant", "labels of removable inequalities");
  c_redundant->add_option("file", file)->required();

  auto* c_slice = app.add_subcommand("slice", "cut by a hyperplane, write both pieces");
  c_slice->add_option("file", file)->required();
  c_slice->add_option("--by", by, "hyperplane: c_1 ... c_n rhs")->required()->expected(-1);
  c_slice->add_option("--label", cut_label, "label for the cut inequality");
  c_slice->add_option("--out", out_prefix, "output prefix (default: input stem)");

  auto* c_gale = app.add_subcommand("gale", "planar diagram and vertex co-facet sets");
  c_gale->add_option("file", file)->required();

  auto* c_symmetry = app.add_subcommand("symmetry", "coordinate permutation symmetries");
  c_symmetry->add_option("file", file)->required();

  auto* c_tri = app.add_subcommand("triangulate", "triangulate the vertex set");
  c_tri->add_option("file", file)->required();
  c_tri->add_option("--order", order, "comma-separated insertion order of vertex ids");

  auto* c_cover = app.add_subcommand("verify-cover", "check a triangulation against an H-rep");
  c_cover->add_option("tri-file", tri_file)->required();
  c_cover->add_option("hrep-file", hrep_file)->required();

  auto* c_verify = app.add_subcommand("verify", "re-derive bundled reference results");
  bool paper = false;
  c_verify->add_flag("--paper", paper, "run the full reference pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*c_vertices) {
    HPolytope p = parse_hrep_file(file);
    VertexSet vs = enumerate_vertices(p, enum_options(threads));
    std::cout << format_vertices(p, vs);
  } else if (*c_volume) {
    HPolytope p = parse_hrep_file(file);
    std::vector<Vec> pts = enumerate_vertices(p, enum_options(threads)).points;
    // empty or lower-dimensional regions have measure zero
    if (pts.empty() || affine_rank(pts) < p.dim) {
      std::cout << "0\n";
      return 0;
    }
    std::cout << total_volume(incremental_triangulation(pts)) << "\n";
  } else if (*c_redundant) {
    HPolytope p = parse_hrep_file(file);
    for (int i : find_redundant(p)) std::cout << p.ineqs[i].label << "\n";
  } else if (*c_slice) {
    HPolytope p = parse_hrep_file(file);
    if (int(by.size()) != p.dim + 1)
      throw Error("--by needs " + std::to_string(p.dim) + " coefficients and a right-hand side");
    Ineq h;
    for (int j = 0; j < p.dim; ++j) h.coeffs.push_back(parse_rat_arg(by[j]));
    h.rhs = parse_rat_arg(by[p.dim]);
    h.label = cut_label;
    auto [below, above] = slice(p, h);
    std::string prefix = out_prefix.empty() ? stem_of(file) : out_prefix;
    for (auto& [suffix, piece] : {std::pair<std::string, HPolytope&>{"le", below},
                                  std::pair<std::string, HPolytope&>{"ge", above}}) {
      std::string path = prefix + "." + suffix + ".hrep";
      std::ofstream out(path);
      if (!out) throw Error("cannot write '" + path + "'");
      out << write_hrep(piece);
      std::cout << path << "\n";
    }
  } else if (*c_gale) {
    HPolytope p = parse_hrep_file(file);
    GaleDiagram g = gale_transform(p);
    std::cout << write_gale(g);
    std::cout << "vertex-sets\n";
    for (const auto& j : vertex_sets_from_gale(g)) {
      for (size_t i = 0; i < j.size(); ++i)
        std::cout << (i ? " " : "") << g.labels[j[i]];
      std::cout << "\n";
    }
  } else if (*c_symmetry) {
    HPolytope p = parse_hrep_file(file);
    std::vector<CoordPerm> group = find_symmetries(p);
    std::cout << "order " << group.size() << "\n";
    for (const CoordPerm& g : group) std::cout << cycle_string(g, p.coord_names) << "\n";
  } else if (*c_tri) {
    std::vector<Vec> pts = canonical_vertices(file, threads);
    if (!order.empty()) {
      std::vector<int> perm;
      std::istringstream is(order);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        size_t used = 0;
        int id = -1;
        try {
          id = std::stoi(tok, &used);
        } catch (...) {
        }
        if (used != tok.size() || id < 0)
          throw Error("--order entry '" + tok + "' is not a vertex id");
        perm.push_back(id);
      }
      std::vector<bool> seen(pts.size(), false);
      if (perm.size() != pts.size())
        throw Error("--order must list all " + std::to_string(pts.size()) + " vertex ids");
      std::vector<Vec> reordered;
      for (int id : perm) {
        if (id < 0 || id >= int(pts.size()) || seen[id])
          throw Error("--order is not a permutation of 0.." + std::to_string(pts.size() - 1));
        seen[id] = true;
        reordered.push_back(pts[id]);
      }
      pts = std::move(reordered);
    }
    std::cout << write_triangulation(incremental_triangulation(pts));
  } else if (*c_cover) {
    Triangulation t = parse_triangulation_file(tri_file);
    HPolytope p = parse_hrep_file(hrep_file);
    CoverReport rep = verify_covering(t, p);
    std::cout << rep.summary();
    return rep.pass ? 0 : 1;
  } else if (*c_verify) {
    if (!paper) throw Error("verify requires --paper");
    ReferenceReport rep = reference_report();
    std::cout << rep.text;
    return rep.pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polyvol::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
