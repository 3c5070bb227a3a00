#pragma once

#include <optional>
#include <vector>

#include "polyvol/linalg.hpp"

namespace polyvol {

enum class Rel { Le, Eq, Ge };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;  // valid when Optimal
  Vec x;          // valid when Optimal
};

// maximize objective . x  subject to  a.row(i) . x  <rel[i]>  rhs[i].
// Variables are free unless nonneg[j] is set (nonneg empty = all free).
// Exact two-phase simplex with Bland's anti-cycling rule; with rational
// arithmetic cycling is the only way the method could fail to terminate,
// so termination is guaranteed.
LpResult lp_maximize(const Mat& a, const Vec& rhs, const std::vector<Rel>& rel,
                     const Vec& objective, const std::vector<bool>& nonneg = {});

// Strictly positive solution of the equality system eq . lambda = rhs, found
// by maximizing t subject to lambda_i >= t (t capped at 1 to keep the program
// bounded). Returns the solution when the optimum is strictly positive,
// nullopt otherwise.
std::optional<Vec> lp_feasible_strict(const Mat& eq, const Vec& rhs);

}  // namespace polyvol
