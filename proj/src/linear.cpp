#include "nary/linear.hpp"

#include "nary/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace nary {

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim)); }

Vector unit_vector(int dim, int index) {
  Vector v(static_cast<std::size_t>(dim));
  v.at(static_cast<std::size_t>(index)) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void add_scaled(Vector& y, const Rational& a, std::span<const Rational> x) {
  if (y.size() != x.size()) throw DimensionMismatch("vector length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector scaled(const Rational& a, std::span<const Rational> x) {
  Vector out(x.begin(), x.end());
  for (auto& e : out) e *= a;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out = a;
  add_scaled(out, 1, b);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  add_scaled(out, -1, b);
  return out;
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix shape");
  data_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw DimensionMismatch("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + m.index(r, 0));
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + index(r, 0), data_.begin() + index(r, 0) + cols_);
}

Vector Matrix::column(int c) const {
  Vector v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(int c, std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("column length mismatch");
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const { return nary::is_zero(data_); }

Vector Matrix::apply(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(static_cast<std::size_t>(rows_));
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::unflatten(std::span<const Rational> flat, int rows, int cols) {
  if (static_cast<long>(flat.size()) != static_cast<long>(rows) * cols)
    throw DimensionMismatch("flat length does not match shape");
  Matrix m(rows, cols);
  std::copy(flat.begin(), flat.end(), m.data_.begin());
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (int j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (int j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix power(const Matrix& m, int k) {
  if (!m.is_square()) throw DimensionMismatch("power of non-square matrix");
  Matrix out = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  Matrix a = m;
  const int n = a.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 0) throw DimensionMismatch("negative ambient dimension");
}

Subspace::Subspace(int ambient_dim, const std::vector<Vector>& spanning) : Subspace(ambient_dim) {
  if (spanning.empty()) return;
  RrefResult r = rref(Matrix::from_rows(spanning, ambient_dim));
  for (int i = 0; i < r.rank; ++i) basis_.push_back(r.reduced.row(i));
  pivots_ = std::move(r.pivots);
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Vector> rows;
  for (int i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, rows);
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) throw DimensionMismatch("vector does not live in ambient space");
  Vector rest(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = rest[pivots_[i]];
    if (!f.is_zero()) add_scaled(rest, -f, basis_[i]);
  }
  return nary::is_zero(rest);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw DimensionMismatch("ambient dimension mismatch");
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& b) { return other.contains(b); });
}

Subspace nullspace(const Matrix& m) {
  const int cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(static_cast<std::size_t>(cols));
    v[free] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    kernel.push_back(std::move(v));
  }
  return Subspace(cols, kernel);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimension mismatch");
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient_dim(), rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimension mismatch");
  // x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  const int p = a.ambient_dim(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(p);
  Matrix sys(p, da + db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < p; ++k) sys(k, i) = a.basis()[i][k];
  for (int j = 0; j < db; ++j)
    for (int k = 0; k < p; ++k) sys(k, da + j) = -b.basis()[j][k];
  std::vector<Vector> common;
  const Subspace kernel = nullspace(sys);
  for (const Vector& st : kernel.basis()) {
    Vector x = zero_vector(p);
    for (int i = 0; i < da; ++i) add_scaled(x, st[i], a.basis()[i]);
    common.push_back(std::move(x));
  }
  return Subspace(p, common);
}

bool subspace_contains(const Subspace& a, std::span<const Rational> v) { return a.contains(v); }

Subspace row_space(const Matrix& m) {
  std::vector<Vector> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return Subspace(m.cols(), rows);
}

// ---------------------------------------------------------------- Jordan blocks

std::vector<int> nilpotent_jordan_blocks(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("Jordan blocks of non-square matrix");
  const int p = m.rows();
  // ranks[k] = rank(m^k)
  std::vector<int> ranks{p};
  Matrix pw = Matrix::identity(p);
  while (ranks.back() > 0) {
    pw = pw * m;
    int r = rank(pw);
    if (r == ranks.back()) throw NotNilpotent("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[k] = number of blocks of size >= k = r_{k-1} - r_k
  std::vector<int> blocks;
  const int top = static_cast<int>(ranks.size()) - 1;
  for (int k = top; k >= 1; --k) {
    int at_least_k = ranks[k - 1] - ranks[k];
    int at_least_next = k + 1 <= top ? ranks[k] - ranks[k + 1] : 0;
    for (int i = 0; i < at_least_k - at_least_next; ++i) blocks.push_back(k);
  }
  return blocks;
}

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency of non-square matrix");
  Matrix pw = m;
  for (int k = 1; k < m.rows() && !pw.is_zero(); ++k) pw = pw * m;
  return pw.is_zero();
}

}  // namespace nary
