#include "polyvol/linalg.hpp"

#include <sstream>
#include <utility>

#include "polyvol/errors.hpp"

namespace polyvol {

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& a, const Rat& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ' ';
    os << a[i];
  }
  return os.str();
}

Mat::Mat(const std::vector<Vec>& rows) {
  rows_ = int(rows.size());
  cols_ = rows.empty() ? 0 : int(rows[0].size());
  e_.resize(size_t(rows_) * cols_);
  for (int r = 0; r < rows_; ++r) {
    if (int(rows[r].size()) != cols_) throw DimensionError("Mat: ragged rows");
    for (int c = 0; c < cols_; ++c) at(r, c) = rows[r][c];
  }
}

Vec Mat::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row. Returns the product of the per-row scale
// factors, so det(input) = det(integer matrix) / scale.
mpz_class clear_denominators(const Mat& m, int extra_col_src, const Vec* rhs, ZMat& out) {
  const int n = m.rows();
  const int cols = m.cols() + (rhs ? 1 : 0);
  out.assign(n, std::vector<mpz_class>(cols));
  mpz_class scale = 1;
  for (int r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols(); ++c) l = lcm(l, m.at(r, c).den());
    if (rhs) l = lcm(l, (*rhs)[r].den());
    for (int c = 0; c < m.cols(); ++c)
      out[r][c] = m.at(r, c).num() * (l / m.at(r, c).den());
    if (rhs) out[r][m.cols()] = (*rhs)[r].num() * (l / (*rhs)[r].den());
    scale *= l;
  }
  (void)extra_col_src;
  return scale;
}

// Fraction-free forward elimination (Bareiss). Eliminates below the diagonal
// across all `cols` columns; rows may be swapped. Returns the sign of the row
// permutation, or 0 when some pivot column is entirely zero (singular).
int bareiss_forward(ZMat& m, int n, int cols) {
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  ZMat z;
  mpz_class scale = clear_denominators(m, -1, nullptr, z);
  int sign = bareiss_forward(z, n, n);
  if (sign == 0) return 0;
  return Rat(sign * z[n - 1][n - 1], scale);
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != a.cols()) throw DimensionError("solve_linear: matrix not square");
  if (int(b.size()) != a.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  const int n = a.rows();
  if (n == 0) return Vec{};
  ZMat z;
  clear_denominators(a, n, &b, z);
  if (bareiss_forward(z, n, n + 1) == 0) return std::nullopt;
  Vec x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat s(z[i][n], 1);
    for (int j = i + 1; j < n; ++j) s -= Rat(z[i][j], 1) * x[j];
    x[i] = s / Rat(z[i][i], 1);
  }
  return x;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Mat m) { return int(rref(m).size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(int(pr), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return rank(Mat(diffs));
}

Rat simplex_volume(const std::vector<Vec>& vertices) {
  if (vertices.empty()) throw DimensionError("simplex_volume: no vertices");
  const size_t n = vertices[0].size();
  if (vertices.size() != n + 1)
    throw DimensionError("simplex_volume: need n+1 points in dimension n");
  std::vector<Vec> edges;
  edges.reserve(n);
  for (size_t i = 1; i <= n; ++i) edges.push_back(sub(vertices[i], vertices[0]));
  Rat d = det(Mat(edges));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return d.abs() / Rat(fact, 1);
}

int side_sign(const std::vector<Vec>& h_points, const Vec& a) {
  if (h_points.empty()) throw DimensionError("side_sign: no spanning points");
  const size_t n = a.size();
  if (h_points.size() != n)
    throw DimensionError("side_sign: need n spanning points in dimension n");
  std::vector<Vec> rows;
  rows.reserve(n);
  for (const Vec& v : h_points) rows.push_back(sub(v, a));
  Rat d = det(Mat(rows));
  if (!d.is_zero()) return d.sign();
  // Zero can mean "a lies on the hyperplane" or "the spanning set is
  // degenerate"; only the former is a legal answer.
  if (affine_rank(h_points) != int(n) - 1)
    throw DegenerateError("side_sign: spanning points are affinely dependent");
  return 0;
}

}  // namespace polyvol
