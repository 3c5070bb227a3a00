#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyvol/rat.hpp"

namespace polyvol {

// Points and coefficient vectors share one representation; the surrounding
// context fixes the ambient dimension.
using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rat& s);
bool is_zero_vec(const Vec& a);
std::string vec_str(const Vec& a);  // space-separated exact rationals

// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  explicit Mat(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
  Vec row(int r) const;

  static Mat identity(int n);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> e_;
};

// Exact determinant of a square matrix, computed fraction-free: denominators
// are cleared row by row, then Bareiss elimination runs over integers so the
// intermediate entries stay minors of the scaled matrix instead of blowing up
// as free-form fractions.
Rat det(const Mat& m);

// Unique solution of a.x = b when a is invertible, nullopt when singular.
// Forward elimination is the same integer Bareiss kernel as det.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

// Reduced row echelon form in place; returns the pivot column list.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of the right kernel {x : m.x = 0}, one vector per free column of the
// reduced echelon form, pivots chosen left to right.
std::vector<Vec> kernel_basis(const Mat& m);

// Affine rank of a point set = linear rank of {p_i - p_0}. Full-dimensional
// sets of k points have affine rank k-1.
int affine_rank(const std::vector<Vec>& points);

// |det(v_1 - v_0, ..., v_n - v_0)| / n! for exactly n+1 points of dimension n.
// Zero exactly when the points are affinely dependent.
Rat simplex_volume(const std::vector<Vec>& vertices);

// Orientation of the query point a against the hyperplane spanned by n points:
// sign of det(v_1 - a, ..., v_n - a). Two points are strictly separated by the
// hyperplane iff their signs multiply to -1; 0 means a lies on it. Throws
// DegenerateError when the spanning points do not span a hyperplane.
int side_sign(const std::vector<Vec>& h_points, const Vec& a);

}  // namespace polyvol
