#pragma once

#include "nary/product.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nary {

enum class SeriesKind { derived, lower_central };

/// Descending series V = T_1 > T_2 > ... computed until a term repeats.
/// `terms` holds each distinct term once. `stabilized` is true when the
/// series became constant at a nonzero subspace; otherwise
/// `vanishing_index` is the k with T_k = 0 (1-based, T_1 = V).
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::optional<int> vanishing_index;

  std::vector<int> dims() const;
};

/// V^(1) = V, V^(k) = mu(V^(k-1), V^(k-1), V, ..., V).
SeriesReport derived_series(const NAryProduct& prod);
/// V^1 = V, V^k = mu(V^(k-1), V, ..., V).
SeriesReport lower_central_series(const NAryProduct& prod);
bool is_nilpotent(const NAryProduct& prod);
bool is_solvable(const NAryProduct& prod);

/// V^2 = mu(V, ..., V).
Subspace square(const NAryProduct& prod);
/// dim V / V^2.
int generators_quotient_dim(const NAryProduct& prod);

/// True iff every adjoint at a strictly increasing basis (n-1)-tuple is
/// nilpotent. Basis adjoints stand in for all adjoints.
bool check_kasymov(const NAryProduct& prod);

/// Jordan block sizes of an adjoint operator, non-increasing. Compared
/// lexicographically.
struct CharacteristicSequence {
  std::vector<int> parts;

  std::string str() const;
  friend auto operator<=>(const CharacteristicSequence&, const CharacteristicSequence&) = default;
};

/// Throws ArityMismatch unless n-1 vectors are given, DependentVectors
/// unless they are independent modulo V^2, and NotNilpotent if the adjoint
/// is not nilpotent.
CharacteristicSequence characteristic_tuple(const NAryProduct& prod, std::span<const Vector> vectors);

struct CharacteristicOptions {
  std::vector<std::vector<Vector>> extra_candidates;
  std::uint64_t seed = 0;
  int random_candidates = 32;
};

struct CharacteristicResult {
  CharacteristicSequence sequence;
  /// The maximum is provably the characteristic sequence: it reached
  /// (p-n+1, 1, ..., 1) or the product is abelian.
  bool certified = false;
  int candidates = 0;
};

/// Lexicographic maximum of characteristic_tuple over (1) all increasing
/// (n-1)-tuples of coordinate vectors outside V^2's pivot columns, (2)
/// the extra candidates, (3) `random_candidates` seeded random tuples.
/// Throws NotNilpotent for non-nilpotent products.
CharacteristicResult characteristic_sequence(const NAryProduct& prod, const CharacteristicOptions& options = {});

/// (p-n+1, 1, ..., 1).
CharacteristicSequence filiform_sequence(int arity, int dim);
/// Nilpotent with characteristic sequence (p-n+1, 1, ..., 1).
bool is_filiform(const NAryProduct& prod, const CharacteristicOptions& options = {});

/// Basis of Der(V) as p x p matrices.
std::vector<Matrix> derivation_algebra(const NAryProduct& prod);
bool is_derivation(const NAryProduct& prod, const Matrix& d);
bool derivations_closed_under_commutator(const NAryProduct& prod);

struct NonsingularDerivationSearch {
  bool found = false;
  /// The answer is exact: found, or refuted by a common-kernel / image
  /// certificate or by the full evaluation grid.
  bool exact = false;
  std::optional<Matrix> witness;
};

/// Looks for an invertible element of Der(V). Tries fixed pseudo-random
/// integer combinations; a negative answer is certified by a common kernel
/// vector, a common proper image, or by evaluating det on the grid
/// {0..p}^k (k = dim Der), which no nonzero polynomial of degree <= p in
/// each variable can vanish on. The grid is skipped above
/// `grid_budget` points.
NonsingularDerivationSearch find_nonsingular_derivation(const NAryProduct& prod, long grid_budget = 20000);
bool has_nonsingular_derivation(const NAryProduct& prod);

/// Diagonal derivations f(X_i) = lambda_i X_i relative to a declared basis.
/// Each nonzero constant C^l_{i_1..i_n} contributes the row
/// lambda_{i_1} + ... + lambda_{i_n} - lambda_l = 0.
struct WeightSystem {
  std::vector<std::string> basis_labels;
  Matrix constraint_matrix;
  int solution_dim = 0;
  /// Basis of the solution space.
  std::vector<Vector> solutions;
};

/// `basis` columns are the declared basis in current coordinates; the
/// canonical basis is used when absent.
WeightSystem diagonal_derivation_weights(const NAryProduct& prod, const std::optional<Matrix>& basis = std::nullopt,
                                         std::vector<std::string> labels = {});

}  // namespace nary
