#pragma once

#include "nary/linear.hpp"
#include "nary/tuples.hpp"

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace nary {

enum class Symmetry { general, skew, symmetric, cyclic };

std::string_view to_string(Symmetry s);
std::optional<Symmetry> parse_symmetry(std::string_view s);

/// (index, coefficient) pairs, sorted by index, no zero coefficients.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// One raw structure-constant line: mu(e_{indices}) = value. Indices are 0-based.
struct Relation {
  IndexTuple indices;
  Vector value;
};

/// An n-ary product on K^p given by structure constants.
///
/// Constants are stored sparsely on canonical keys only: strictly
/// increasing tuples for skew products, non-decreasing tuples for
/// symmetric ones, least rotation for cyclic ones, and every tuple for
/// general ones. Missing keys mean zero. Arity 1 is accepted so that
/// linear maps can be handled as 1-cochains.
class NAryProduct {
public:
  NAryProduct(int arity, int dim, Symmetry symmetry);

  /// Normalizes each relation to its canonical key (with the sign of the
  /// sorting permutation for skew products) and sums duplicates. Throws
  /// IndexOutOfRange, DimensionMismatch, ArityMismatch, and
  /// RepeatedIndexNonzero for a skew relation with a repeated index and a
  /// nonzero value.
  static NAryProduct from_relations(int arity, int dim, Symmetry symmetry, std::span<const Relation> raw);

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  Symmetry symmetry() const { return symmetry_; }
  bool is_abelian() const { return constants_.empty(); }
  const std::map<IndexTuple, SparseVector>& constants() const { return constants_; }

  struct Canonical {
    IndexTuple key;
    int sign = 0;  // 0: the product vanishes on this tuple by symmetry
  };
  Canonical canonicalize(std::span<const int> indices) const;

  /// mu(e_{i1}, ..., e_{in}) with the symmetry applied.
  Vector basis_bracket(std::span<const int> indices) const;
  /// out += scale * mu(e_{i1}, ..., e_{in})
  void accumulate_basis(std::span<const int> indices, const Rational& scale, Vector& out) const;
  /// out += scale * mu(e_{t0}, ..., mu(e_{t_pos}, ..., e_{t_{pos+n-1}}), ..., e_{t_last})
  /// for a (2n-1)-tuple t, with the inner product in outer slot `pos`.
  void accumulate_nested(std::span<const int> tuple, int pos, const Rational& scale, Vector& out) const;

  friend bool operator==(const NAryProduct&, const NAryProduct&) = default;

private:
  const SparseVector* find(std::span<const int> indices, int& sign) const;
  void check_indices(std::span<const int> indices) const;

  int arity_;
  int dim_;
  Symmetry symmetry_;
  std::map<IndexTuple, SparseVector> constants_;
};

NAryProduct make_product(int arity, int dim, Symmetry symmetry, std::span<const Relation> raw);
NAryProduct make_skew_product(int arity, int dim, std::span<const Relation> raw);

/// Every canonical key of the given symmetry kind, lexicographic.
std::vector<IndexTuple> canonical_tuples(int arity, int dim, Symmetry symmetry);

/// Multilinear evaluation of mu on arbitrary vectors.
Vector bracket(const NAryProduct& prod, std::span<const Vector> args);

/// Linear map K^source -> K^target, stored as a target x source matrix.
class LinearMap {
public:
  explicit LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {}
  int source_dim() const { return matrix_.cols(); }
  int target_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  Vector operator()(std::span<const Rational> v) const { return matrix_.apply(v); }

private:
  Matrix matrix_;
};

/// v -> mu(args_1, ..., args_{n-1}, v).
LinearMap adjoint(const NAryProduct& prod, std::span<const Vector> args);
/// Adjoint at basis vectors e_{i1}, ..., e_{i(n-1)}.
LinearMap basis_adjoint(const NAryProduct& prod, std::span<const int> indices);

/// Span of mu(w_1, ..., w_n) over basis vectors w_i of parts[i].
Subspace product_subspace(const NAryProduct& prod, std::span<const Subspace> parts);
bool is_subalgebra(const NAryProduct& prod, const Subspace& w);
/// Checks mu(V, ..., I, ..., V) in I with I in every slot position.
bool is_ideal(const NAryProduct& prod, const Subspace& ideal);
/// mu_dst o f^{(n)} == f o mu_src on all basis n-tuples.
bool is_morphism(const NAryProduct& src, const NAryProduct& dst, const LinearMap& f);

/// Structure constants in the basis given by the columns of `basis`
/// (expressed in the old basis). Throws std::domain_error if singular.
NAryProduct change_basis(const NAryProduct& prod, const Matrix& basis);

}  // namespace nary
