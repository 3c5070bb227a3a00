#include "polyvol/lp.hpp"

#include <algorithm>

#include "polyvol/errors.hpp"

namespace polyvol {

namespace {

// Dense tableau for min-form problems: min cost . z, rows . z = rhs, z >= 0.
// Column layout is fixed by the caller; the last tableau column is the rhs.
// The cost row carries reduced costs; its rhs entry is minus the objective.
struct Tableau {
  std::vector<Vec> rows;   // m x (ncols + 1)
  Vec cost;                // ncols + 1
  std::vector<int> basis;  // basic column per row
  int ncols = 0;

  int m() const { return int(rows.size()); }

  void pivot(int r, int c) {
    Rat inv = Rat(1) / rows[r][c];
    for (int j = 0; j <= ncols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < m(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (!cost[c].is_zero()) {
      Rat f = cost[c];
      for (int j = 0; j <= ncols; ++j) cost[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Reduce the cost row against the current basis.
  void price_out() {
    for (int i = 0; i < m(); ++i) {
      int b = basis[i];
      if (cost[b].is_zero()) continue;
      Rat f = cost[b];
      for (int j = 0; j <= ncols; ++j) cost[j] -= f * rows[i][j];
    }
  }

  // Bland: entering column = lowest index with negative reduced cost;
  // leaving row = lowest basic index among the minimum-ratio rows.
  LpStatus run(const std::vector<bool>& eligible) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (eligible[j] && cost[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m(); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rat ratio = rows[i][ncols] / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const Mat& a, const Vec& rhs, const std::vector<Rel>& rel,
                     const Vec& objective, const std::vector<bool>& nonneg) {
  const int m = a.rows();
  const int nv = a.cols();
  if (int(rhs.size()) != m || int(rel.size()) != m)
    throw DimensionError("lp_maximize: row count mismatch");
  if (int(objective.size()) != nv)
    throw DimensionError("lp_maximize: objective length mismatch");
  if (!nonneg.empty() && int(nonneg.size()) != nv)
    throw DimensionError("lp_maximize: nonneg length mismatch");

  // Standard form: free variables split into u - w, slack/surplus per
  // inequality, then one artificial per row for the phase-1 basis.
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int ncols = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[j] = ncols++;
    if (nonneg.empty() || !nonneg[j]) neg_col[j] = ncols++;
  }
  const int slack_base = ncols;
  for (int i = 0; i < m; ++i)
    if (rel[i] != Rel::Eq) ++ncols;
  const int art_base = ncols;
  ncols += m;

  Tableau t;
  t.ncols = ncols;
  t.basis.assign(m, -1);
  t.rows.assign(m, Vec(ncols + 1));
  int slack_at = slack_base;
  for (int i = 0; i < m; ++i) {
    int flip = rhs[i].sign() < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) {
      Rat v = a.at(i, j) * Rat(flip);
      t.rows[i][pos_col[j]] = v;
      if (neg_col[j] >= 0) t.rows[i][neg_col[j]] = -v;
    }
    if (rel[i] != Rel::Eq) {
      Rat s = rel[i] == Rel::Le ? Rat(1) : Rat(-1);
      t.rows[i][slack_at++] = s * Rat(flip);
    }
    t.rows[i][art_base + i] = 1;
    t.rows[i][ncols] = rhs[i] * Rat(flip);
    t.basis[i] = art_base + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.cost.assign(ncols + 1, Rat(0));
  for (int i = 0; i < m; ++i) t.cost[art_base + i] = 1;
  t.price_out();
  std::vector<bool> eligible(ncols, true);
  LpStatus st = t.run(eligible);
  if (st != LpStatus::Optimal) throw Error("lp: phase 1 cannot be unbounded");
  if ((-t.cost[ncols]).sign() > 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; a row with no real pivot
  // candidate is redundant and gets parked (only artificials, all zero).
  std::vector<bool> keep_row(m, true);
  for (int i = 0; i < int(t.rows.size()); ++i) {
    if (t.basis[i] < art_base) continue;
    int c = -1;
    for (int j = 0; j < art_base; ++j)
      if (!t.rows[i][j].is_zero()) {
        c = j;
        break;
      }
    if (c >= 0)
      t.pivot(i, c);
    else
      keep_row[i] = false;
  }
  {
    std::vector<Vec> rows2;
    std::vector<int> basis2;
    for (int i = 0; i < t.m(); ++i)
      if (keep_row[i]) {
        rows2.push_back(std::move(t.rows[i]));
        basis2.push_back(t.basis[i]);
      }
    t.rows = std::move(rows2);
    t.basis = std::move(basis2);
  }
  for (int j = art_base; j < ncols; ++j) eligible[j] = false;

  // Phase 2: maximize objective = minimize its negation.
  t.cost.assign(ncols + 1, Rat(0));
  for (int j = 0; j < nv; ++j) {
    t.cost[pos_col[j]] = -objective[j];
    if (neg_col[j] >= 0) t.cost[neg_col[j]] = objective[j];
  }
  t.price_out();
  st = t.run(eligible);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  Vec z(ncols);
  for (int i = 0; i < t.m(); ++i) z[t.basis[i]] = t.rows[i][t.ncols];
  Vec x(nv);
  for (int j = 0; j < nv; ++j) {
    x[j] = z[pos_col[j]];
    if (neg_col[j] >= 0) x[j] -= z[neg_col[j]];
  }
  return {LpStatus::Optimal, dot(objective, x), std::move(x)};
}

std::optional<Vec> lp_feasible_strict(const Mat& eq, const Vec& rhs) {
  const int k = eq.cols();
  const int m = eq.rows();
  if (int(rhs.size()) != m) throw DimensionError("lp_feasible_strict: rhs mismatch");
  if (k == 0) return std::nullopt;

  // Variables (lambda_1..lambda_k, t): the equality system, lambda_i - t >= 0
  // for every i, and t <= 1 so the maximum always exists.
  Mat a(m + k + 1, k + 1);
  Vec b(m + k + 1);
  std::vector<Rel> rel(m + k + 1, Rel::Eq);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) a.at(i, j) = eq.at(i, j);
    b[i] = rhs[i];
  }
  for (int j = 0; j < k; ++j) {
    a.at(m + j, j) = 1;
    a.at(m + j, k) = -1;
    rel[m + j] = Rel::Ge;
  }
  a.at(m + k, k) = 1;
  b[m + k] = 1;
  rel[m + k] = Rel::Le;

  Vec obj(k + 1);
  obj[k] = 1;
  LpResult r = lp_maximize(a, b, rel, obj);
  if (r.status != LpStatus::Optimal || r.objective.sign() <= 0) return std::nullopt;
  Vec lambda(r.x.begin(), r.x.begin() + k);
  return lambda;
}

}  // namespace polyvol
