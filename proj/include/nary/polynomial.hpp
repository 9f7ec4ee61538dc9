#pragma once

#include "nary/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace nary {

/// Exponent vector of a monomial x_1^{a_1} ... x_k^{a_k}.
using Exponents = std::vector<int>;

/// Sparse polynomial in a fixed number of variables over the rationals.
class Polynomial {
public:
  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(int num_vars, const Rational& c);
  static Polynomial variable(int num_vars, int index);
  static Polynomial monomial(const Exponents& exps, const Rational& c = 1);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a term, -1 for the zero polynomial.
  int low_degree() const;
  Rational coefficient(const Exponents& exps) const;

  void add_term(const Exponents& exps, const Rational& c);
  Polynomial derivative(int var) const;
  /// `3*x1^2*x2 - x2^3`, variables 1-based.
  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  int num_vars_;
  std::map<Exponents, Rational> terms_;
};

/// Total degree of an exponent vector.
int total_degree(const Exponents& exps);

/// det(d P_i / d x_j) for n polynomials in n variables. Throws
/// ArityMismatch if the count does not match the variable count and
/// DegreeOverflow if an input or the result has degree above `degree_cap`.
Polynomial polynomial_jacobian_bracket(std::span<const Polynomial> polys, int degree_cap);

/// All monomials in `num_vars` variables with total degree in [lo, hi],
/// ordered by degree, then by exponent vector descending (x^3 before x^2 y).
std::vector<Exponents> monomials_in_degree_range(int num_vars, int lo, int hi);

/// Element of I_3 / I_r: a polynomial with only terms of total degree 3..r-1.
class TruncatedPolynomial {
public:
  TruncatedPolynomial(int num_vars, int r);
  /// Drops terms of degree >= r. Throws InternalInconsistency on a term of
  /// degree < 3, which cannot lie in I_3.
  static TruncatedPolynomial from(const Polynomial& p, int r);

  int num_vars() const { return poly_.num_vars(); }
  int truncation() const { return r_; }
  const Polynomial& polynomial() const { return poly_; }

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

private:
  int r_;
  Polynomial poly_;
};

}  // namespace nary
