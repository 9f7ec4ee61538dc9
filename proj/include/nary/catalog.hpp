#pragma once

#include "nary/polynomial.hpp"
#include "nary/product.hpp"

#include <string>
#include <vector>

namespace nary {

/// A_{n+1}: [v_1, .., v̂_i, .., v_{n+1}] = (-1)^{n+1+i} v_i (1-based i).
NAryProduct simple_algebra(int n);

enum class DimNKind { abelian, e1 };
/// n-dimensional n-ary algebra, either abelian or [e_1, .., e_n] = e_1.
NAryProduct dim_n_algebra(int n, DimNKind kind);

/// [X_1, .., X_{n-1}, X_i] = X_{i+1} for i = n .. p-1. Requires p >= n+1.
NAryProduct filiform_model(int n, int p);

/// Ternary, dim 5: [X1,X2,X3] = X4, [X1,X2,X4] = X5, [X1,X3,X4] = a X5,
/// [X2,X3,X4] = b X5.
NAryProduct filiform5(const Rational& a, const Rational& b);
/// Columns X1, X2, X3 - a X2, X4, X5.
Matrix filiform5_adapted_basis(const Rational& a);

/// n-dimensional, [X_1, .., X_n] = X_2. Throws BadParams for n < 3.
NAryProduct counterexample_algebra(int n);

/// Basis of J_r in n variables: monomials of degree 3..r-1 in the order of
/// monomials_in_degree_range.
std::vector<Exponents> truncated_jacobian_basis(int n, int r);
/// J_r = I_3 / I_r with the Jacobian bracket. Requires n >= 2, r > 3.
NAryProduct truncated_jacobian_algebra(int n, int r);

/// mu(A, B, C) = A B^T C on rows x cols matrices; E_ab has index a*cols + b.
NAryProduct ternary_matrix_product(int rows, int cols);

/// Orbit representatives of {0..d-1}^3 under rotation, least rotation
/// first, sorted. Basis vector i is the sum of e_{ijk} over orbit i.
std::vector<IndexTuple> cyclic_tensor_orbits(int d);
/// (T U V)_{ijk} = sum_l T_{lij} U_{lki} V_{ljk} on rotation-invariant
/// tensors. The raw product leaves that subspace, so the output is averaged
/// over the three rotations of (i, j, k); the result is invariant under
/// rotating its arguments and is stored with cyclic symmetry.
NAryProduct cyclic_tensor_product(int d);
/// False when some raw product of basis tensors is not rotation-invariant.
bool cyclic_tensor_product_is_closed(int d);

/// (f • g)(x_1..x_{k+m-1}) = sum_{i=1}^{k} (-1)^{(i-1)(m-1)} f(x_1, .., g(x_i..x_{i+m-1}), .., x_{k+m-1}).
/// f and g are cochains on the base algebra's space (any symmetry, arity
/// >= 1); the result is a general product of arity k+m-1.
NAryProduct gerstenhaber_bullet(const NAryProduct& base, const NAryProduct& f, const NAryProduct& g);

NAryProduct abelian(int n, int p);

/// Named catalog instance, used for sweeps over "every catalog algebra".
struct CatalogEntry {
  std::string name;
  NAryProduct product;
};

/// Fixed list of skew catalog algebras with small parameters.
std::vector<CatalogEntry> standard_catalog();

}  // namespace nary
