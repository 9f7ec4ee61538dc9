#pragma once

#include "nary/product.hpp"

#include <map>
#include <optional>
#include <string>

namespace nary {

/// Element of Λ^k(V*) in the dual basis ω_1..ω_p, stored on strictly
/// increasing 0-based index tuples.
class ExteriorForm {
public:
  ExteriorForm(int ambient_dim, int degree);
  /// ω_l
  static ExteriorForm basis_one_form(int ambient_dim, int l);
  /// c ω_{i_1} ∧ ... ∧ ω_{i_k} for any index order (sorted with sign; zero on repeats).
  static ExteriorForm monomial(int ambient_dim, std::span<const int> indices, const Rational& c = 1);

  int ambient_dim() const { return ambient_dim_; }
  int degree() const { return degree_; }
  const std::map<IndexTuple, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::span<const int> increasing) const;

  void add_term(std::span<const int> indices, const Rational& c);
  /// `2 w1^w2^w3 - w1^w2^w4`, 1-based.
  std::string str() const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b);
  friend ExteriorForm operator*(const Rational& s, const ExteriorForm& a);
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

private:
  void check(const ExteriorForm& o) const;

  int ambient_dim_;
  int degree_;
  std::map<IndexTuple, Rational> terms_;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// dω_l = sum over increasing I of C^l_I ω_I. Throws NotSkew, IndexOutOfRange.
ExteriorForm d_one(const NAryProduct& prod, int l);

/// How d acts on a wedge of n one-forms. `graded` treats d as a derivation
/// of degree n-1: the j-th factor (1-based) carries (-1)^{(n-1)(j-1)}.
/// `all_plus` uses + for every factor; the two agree for odd n.
enum class ExtensionSign { graded, all_plus };

/// d on a degree-n form, replacing each factor by its d_one image in place.
/// Throws DimensionMismatch unless the form has degree n.
ExteriorForm d_extend(const NAryProduct& prod, const ExteriorForm& form, ExtensionSign rule = ExtensionSign::graded);

struct MaurerCartanWitness {
  int l;
  /// Least increasing (2n-1)-tuple carrying a nonzero coefficient in some
  /// d(dω_l); `l` is the least index whose form is nonzero there.
  IndexTuple tuple;
  ExteriorForm defect;
};

struct MaurerCartanResult {
  std::optional<MaurerCartanWitness> witness;
  bool vacuous = false;  // p < 2n-1
  bool passed() const { return !witness.has_value(); }
};

/// d(dω_l) = 0 for every l. Throws NotSkew.
MaurerCartanResult maurer_cartan_check(const NAryProduct& prod, ExtensionSign rule = ExtensionSign::graded);

}  // namespace nary
