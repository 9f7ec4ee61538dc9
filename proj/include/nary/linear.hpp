#pragma once

#include "nary/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace nary {

/// Dense vector of exact scalars; coordinates in the canonical basis.
using Vector = std::vector<Rational>;

Vector zero_vector(int dim);
Vector unit_vector(int dim, int index);
bool is_zero(std::span<const Rational> v);
/// y += a * x
void add_scaled(Vector& y, const Rational& a, std::span<const Rational> x);
Vector scaled(const Rational& a, std::span<const Rational> x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
/// `(c1, c2, ...)`
std::string to_string(std::span<const Rational> v);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rows, int cols);
  static Matrix from_columns(const std::vector<Vector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  Vector row(int r) const;
  Vector column(int c) const;
  void set_column(int c, std::span<const Rational> v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Vector apply(std::span<const Rational> v) const;
  Matrix transpose() const;
  /// Entries in row-major order.
  Vector flatten() const { return data_; }
  static Matrix unflatten(std::span<const Rational> flat, int rows, int cols);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  Vector data_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

/// Reduced row-echelon form. Pivots are chosen as the first row with a
/// nonzero entry in the column, so the result is deterministic.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
Matrix power(const Matrix& m, int k);
/// Throws DimensionMismatch for non-square input and std::domain_error if singular.
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Subspace of K^p stored by its reduced row-echelon basis, so equality of
/// subspaces is equality of the stored fields.
class Subspace {
public:
  explicit Subspace(int ambient_dim = 0);
  Subspace(int ambient_dim, const std::vector<Vector>& spanning);

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

private:
  int ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<int> pivots_;
};

/// Kernel of m, as a subspace of K^{cols}.
Subspace nullspace(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Rational> v);
/// Row space of m.
Subspace row_space(const Matrix& m);

/// Jordan block sizes of a nilpotent matrix, non-increasing. Throws
/// NotNilpotent when m^p != 0.
std::vector<int> nilpotent_jordan_blocks(const Matrix& m);
bool is_nilpotent_matrix(const Matrix& m);

}  // namespace nary
