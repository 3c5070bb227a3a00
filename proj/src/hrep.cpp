#include "polyvol/hrep.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "polyvol/errors.hpp"
#include "polyvol/lp.hpp"

namespace polyvol {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

Rat parse_rat_tok(const std::string& tok, int line_no) {
  auto r = Rat::parse(tok);
  if (!r) throw ParseError(line_no, "malformed rational '" + tok + "'");
  return *r;
}

void check_system(const HPolytope& p) {
  if (p.dim <= 0) throw DimensionError("polytope dimension must be positive");
  for (const Ineq& q : p.ineqs)
    if (int(q.coeffs.size()) != p.dim)
      throw DimensionError("inequality arity does not match polytope dimension");
}

Mat coeff_matrix(const HPolytope& p) {
  Mat a(int(p.ineqs.size()), p.dim);
  for (int i = 0; i < int(p.ineqs.size()); ++i)
    for (int j = 0; j < p.dim; ++j) a.at(i, j) = p.ineqs[i].coeffs[j];
  return a;
}

Vec rhs_vector(const HPolytope& p) {
  Vec b(p.ineqs.size());
  for (size_t i = 0; i < p.ineqs.size(); ++i) b[i] = p.ineqs[i].rhs;
  return b;
}

bool satisfies_all(const HPolytope& p, const Vec& x) {
  for (const Ineq& q : p.ineqs)
    if (dot(q.coeffs, x) > q.rhs) return false;
  return true;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Throws UnboundedError when some +/- coordinate direction is unbounded;
// returns false when the feasible region is empty.
bool check_bounded(const HPolytope& p) {
  Mat a = coeff_matrix(p);
  Vec b = rhs_vector(p);
  std::vector<Rel> rel(p.ineqs.size(), Rel::Le);
  for (int j = 0; j < p.dim; ++j) {
    for (int s : {1, -1}) {
      Vec obj(p.dim);
      obj[j] = s;
      LpResult r = lp_maximize(a, b, rel, obj);
      if (r.status == LpStatus::Infeasible) return false;
      if (r.status == LpStatus::Unbounded)
        throw UnboundedError("feasible region is unbounded in coordinate " +
                             std::to_string(j + 1));
    }
  }
  return true;
}

}  // namespace

HPolytope parse_hrep(std::istream& in) {
  HPolytope p;
  bool have_dim = false;
  std::string raw;
  int line_no = 0;
  int auto_label = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;

    if (!have_dim) {
      if (toks.size() != 2 || toks[0] != "dim")
        throw ParseError(line_no, "expected 'dim <n>' before anything else");
      size_t used = 0;
      try {
        p.dim = std::stoi(toks[1], &used);
      } catch (...) {
        throw ParseError(line_no, "bad dimension '" + toks[1] + "'");
      }
      if (used != toks[1].size() || p.dim <= 0)
        throw ParseError(line_no, "bad dimension '" + toks[1] + "'");
      have_dim = true;
      continue;
    }
    if (toks[0] == "order" && p.ineqs.empty() && p.coord_names.empty()) {
      if (int(toks.size()) != p.dim + 1)
        throw ParseError(line_no, "'order' needs exactly dim coordinate names");
      p.coord_names.assign(toks.begin() + 1, toks.end());
      continue;
    }

    Ineq q;
    size_t k = 0;
    if (toks[0].size() > 1 && toks[0].back() == ':') {
      q.label = toks[0].substr(0, toks[0].size() - 1);
      k = 1;
    }
    if (int(toks.size() - k) != p.dim + 2)
      throw ParseError(line_no, "expected " + std::to_string(p.dim) +
                                    " coefficients, '<=' and a right-hand side");
    for (int j = 0; j < p.dim; ++j) q.coeffs.push_back(parse_rat_tok(toks[k + j], line_no));
    if (toks[k + p.dim] != "<=")
      throw ParseError(line_no, "expected '<=', got '" + toks[k + p.dim] + "'");
    q.rhs = parse_rat_tok(toks[k + p.dim + 1], line_no);
    if (is_zero_vec(q.coeffs))
      throw ParseError(line_no, "inequality with all-zero coefficients");
    ++auto_label;
    if (q.label.empty()) q.label = "i" + std::to_string(auto_label);
    p.ineqs.push_back(std::move(q));
  }
  if (!have_dim) throw ParseError(line_no + 1, "missing 'dim' line");
  if (p.ineqs.empty()) throw ParseError(line_no + 1, "empty inequality system");
  return p;
}

HPolytope parse_hrep_string(const std::string& text) {
  std::istringstream is(text);
  return parse_hrep(is);
}

HPolytope parse_hrep_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return parse_hrep(f);
}

std::string write_hrep(const HPolytope& p) {
  std::ostringstream os;
  os << "dim " << p.dim << "\n";
  if (!p.coord_names.empty()) {
    os << "order";
    for (const std::string& n : p.coord_names) os << ' ' << n;
    os << "\n";
  }
  for (const Ineq& q : p.ineqs) {
    if (!q.label.empty()) os << q.label << ": ";
    os << vec_str(q.coeffs) << " <= " << q.rhs << "\n";
  }
  return os.str();
}

VertexSet enumerate_vertices(const HPolytope& p, const EnumerateOptions& opts) {
  check_system(p);
  const int n = p.dim;
  const int m = int(p.ineqs.size());

  if (!check_bounded(p)) return {};
  if (m >= n && binomial(m, n) > mpz_class(static_cast<long>(opts.basis_budget)))
    throw BudgetError("basis enumeration over " + binomial(m, n).get_str() +
                      " subsets exceeds the budget of " +
                      std::to_string(opts.basis_budget));

  std::vector<Vec> found;
  std::mutex found_mu;
  auto scan = [&](int residue, int step) {
    std::vector<Vec> local;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    long long ordinal = 0;
    while (true) {
      if (ordinal % step == residue) {
        Mat a(n, n);
        Vec b(n);
        for (int r = 0; r < n; ++r) {
          for (int c = 0; c < n; ++c) a.at(r, c) = p.ineqs[idx[r]].coeffs[c];
          b[r] = p.ineqs[idx[r]].rhs;
        }
        if (auto x = solve_linear(a, b); x && satisfies_all(p, *x))
          local.push_back(std::move(*x));
      }
      ++ordinal;
      // next n-combination of {0..m-1} in lexicographic order
      int i = n - 1;
      while (i >= 0 && idx[i] == m - n + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::lock_guard<std::mutex> lock(found_mu);
    for (Vec& v : local) found.push_back(std::move(v));
  };

  if (m >= n) {
    int threads = std::max(1, opts.threads);
    if (threads == 1) {
      scan(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t, threads);
      for (auto& th : pool) th.join();
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  VertexSet vs;
  for (Vec& x : found) {
    std::vector<int> inc;
    std::vector<Vec> tight_rows;
    for (int i = 0; i < m; ++i)
      if (dot(p.ineqs[i].coeffs, x) == p.ineqs[i].rhs) {
        inc.push_back(i);
        tight_rows.push_back(p.ineqs[i].coeffs);
      }
    if (rank(Mat(tight_rows)) != n)
      throw Error("basic solution without full-rank incidence; inconsistent state");
    vs.points.push_back(std::move(x));
    vs.incidence.push_back(std::move(inc));
  }
  return vs;
}

std::vector<std::vector<bool>> incidence_table(const HPolytope& p, const VertexSet& vs,
                                               const std::vector<int>& which) {
  check_system(p);
  for (int i : which)
    if (i < 0 || i >= int(p.ineqs.size())) throw Error("incidence_table: bad index");
  std::vector<std::vector<bool>> table;
  table.reserve(vs.points.size());
  for (const Vec& x : vs.points) {
    std::vector<bool> row;
    row.reserve(which.size());
    for (int i : which) row.push_back(dot(p.ineqs[i].coeffs, x) == p.ineqs[i].rhs);
    table.push_back(std::move(row));
  }
  return table;
}

std::set<int> find_redundant(const HPolytope& p) {
  check_system(p);
  const int m = int(p.ineqs.size());
  std::set<int> redundant;
  for (int i = 0; i < m; ++i) {
    // Relax inequality i by one unit and maximize its left-hand side under
    // the rest; i is redundant iff the optimum stays within its bound.
    Mat a(m, p.dim);
    Vec b(m);
    std::vector<Rel> rel(m, Rel::Le);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < p.dim; ++c) a.at(r, c) = p.ineqs[r].coeffs[c];
      b[r] = p.ineqs[r].rhs;
    }
    b[i] += 1;
    LpResult r = lp_maximize(a, b, rel, p.ineqs[i].coeffs);
    if (r.status == LpStatus::Unbounded)
      throw Error("find_redundant: relaxed program unbounded; inconsistent state");
    if (r.status == LpStatus::Infeasible || r.objective <= p.ineqs[i].rhs)
      redundant.insert(i);
  }
  return redundant;
}

std::pair<HPolytope, HPolytope> slice(const HPolytope& p, const Ineq& h) {
  check_system(p);
  if (int(h.coeffs.size()) != p.dim) throw DimensionError("slice: arity mismatch");
  std::string label = h.label.empty() ? "cut" : h.label;
  HPolytope below = p;
  below.ineqs.push_back({h.coeffs, h.rhs, label});
  HPolytope above = p;
  Vec neg(h.coeffs.size());
  for (size_t i = 0; i < h.coeffs.size(); ++i) neg[i] = -h.coeffs[i];
  above.ineqs.push_back({std::move(neg), -h.rhs, label});
  return {std::move(below), std::move(above)};
}

bool point_in_hull(const std::vector<Vec>& points, const Vec& q) {
  if (points.empty()) return false;
  const int n = int(q.size());
  const int k = int(points.size());
  for (const Vec& pt : points)
    if (int(pt.size()) != n) throw DimensionError("point_in_hull: mixed dimensions");

  // lambda >= 0, sum lambda_i p_i = q, sum lambda_i = 1
  Mat a(n + 1, k);
  Vec b(n + 1);
  std::vector<Rel> rel(n + 1, Rel::Eq);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) a.at(r, c) = points[c][r];
    b[r] = q[r];
  }
  for (int c = 0; c < k; ++c) a.at(n, c) = 1;
  b[n] = 1;
  LpResult res = lp_maximize(a, b, rel, Vec(k), std::vector<bool>(k, true));
  return res.status == LpStatus::Optimal;
}

std::string format_vertices(const HPolytope& p, const VertexSet& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.points.size(); ++i) {
    os << vec_str(vs.points[i]) << " [";
    for (size_t j = 0; j < vs.incidence[i].size(); ++j) {
      if (j) os << ' ';
      os << p.ineqs[vs.incidence[i][j]].label;
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace polyvol
