#pragma once

#include "nary/permutation.hpp"
#include "nary/product.hpp"
#include "nary/rational.hpp"

#include <map>
#include <vector>

namespace nary {

/// Largest degree for which full group-algebra sums are built.
inline constexpr int kMaxGroupAlgebraDegree = 7;

/// Element of K[S_m]: a finite rational combination of permutations.
/// Zero coefficients are never stored.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int degree);
  static GroupAlgebraElement delta(const Permutation& p, const Rational& coefficient = 1);
  static GroupAlgebraElement identity(int degree) { return delta(Permutation::identity(degree)); }

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& p) const;

  void add(const Permutation& p, const Rational& coefficient);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
  int degree_;
  std::map<Permutation, Rational> terms_;
};

/// Bilinear extension of permutation composition, a o b.
GroupAlgebraElement compose(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// All (n,k)-shuffles of S_{n+k}: increasing on positions 1..n and on
/// n+1..n+k. C(n+k, n) of them, lexicographic by image array.
std::vector<Permutation> shuffles(int n, int k);

/// Id + sum_i (-1)^i pi_i in K[S_{2n-1}], where pi_i has image row
/// (i, n+1, ..., 2n-1, 1, ..., i-1, i+1, ..., n). It encodes the Filippov
/// identity through nested_action().
GroupAlgebraElement filippov_vector(int n);

/// sum over S_m of sign(s) s. Throws TooLarge for m > kMaxGroupAlgebraDegree.
GroupAlgebraElement total_antisym_vector(int m);

/// The scalar c with x = c * w, where w = total_antisym_vector(x.degree()).
/// Throws NotProportional when no such scalar exists.
Rational proportionality_to_antisym(const GroupAlgebraElement& x);

/// Composes total_antisym_vector(2n-1) with filippov_vector(n) and returns
/// the scalar alpha(n) with w o v = alpha(n) w.
Rational verify_wv_identity(int n);

/// Builds v = alpha Id + beta c + gamma c^2 in K[S_3] (c the 3-cycle),
/// composes w o v and returns the proportionality scalar.
Rational colored_reduction(const Rational& alpha, const Rational& beta, const Rational& gamma);

/// sum_s coeff(s) * mu(mu(x_{s(1)}, ..., x_{s(n)}), x_{s(n+1)}, ..., x_{s(2n-1)})
/// on basis vectors x_j = e_{tuple[j]}. Slot k of the nested product
/// receives argument s(k).
Vector nested_action(const NAryProduct& prod, const GroupAlgebraElement& element, std::span<const int> tuple);

}  // namespace nary
