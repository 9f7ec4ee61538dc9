#include "nary/polynomial.hpp"

#include "nary/errors.hpp"
#include "nary/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace nary {

int total_degree(const Exponents& exps) { return std::accumulate(exps.begin(), exps.end(), 0); }

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw IndexOutOfRange("variable index out of range");
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& exps, const Rational& c) {
  Polynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Polynomial::low_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    const int t = total_degree(e);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != num_vars_) throw DimensionMismatch("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= num_vars_) throw IndexOutOfRange("variable index out of range");
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    const int a = e[static_cast<std::size_t>(var)];
    if (a == 0) continue;
    Exponents f = e;
    --f[static_cast<std::size_t>(var)];
    out.add_term(f, c * Rational(a));
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest degree first, in basis order.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first), db = total_degree(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) s += c.sign() < 0 ? "-" : "";
    else s += c.sign() < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) s += mag.str();
    else if (mag == Rational(1)) s += mono;
    else s += mag.str() + "*" + mono;
  }
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("polynomials in different variable counts");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial out(a.num_vars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

Polynomial polynomial_jacobian_bracket(std::span<const Polynomial> polys, int degree_cap) {
  const int n = static_cast<int>(polys.size());
  if (n == 0) throw ArityMismatch("Jacobian of no polynomials");
  for (const Polynomial& p : polys) {
    if (p.num_vars() != n) throw ArityMismatch("Jacobian needs as many polynomials as variables");
    if (p.degree() > degree_cap) throw DegreeOverflow("input polynomial exceeds the degree cap");
  }
  std::vector<std::vector<Polynomial>> jac(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac[static_cast<std::size_t>(i)].push_back(polys[static_cast<std::size_t>(i)].derivative(j));

  // Leibniz expansion; n is the arity, so n! stays small.
  Polynomial det(n);
  for (const Permutation& s : all_permutations(n)) {
    Polynomial term = Polynomial::constant(n, s.sign());
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(s(i))];
    det += term;
  }
  if (det.degree() > degree_cap) throw DegreeOverflow("Jacobian exceeds the degree cap");
  return det;
}

std::vector<Exponents> monomials_in_degree_range(int num_vars, int lo, int hi) {
  std::vector<Exponents> out;
  for (int d = std::max(lo, 0); d <= hi; ++d) {
    std::vector<Exponents> level;
    Exponents e(static_cast<std::size_t>(num_vars), 0);
    // Compositions of d into num_vars parts, generated recursively.
    auto rec = [&](auto&& self, int var, int left) -> void {
      if (var == num_vars - 1) {
        e[static_cast<std::size_t>(var)] = left;
        level.push_back(e);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[static_cast<std::size_t>(var)] = a;
        self(self, var + 1, left - a);
      }
    };
    if (num_vars > 0) rec(rec, 0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

TruncatedPolynomial::TruncatedPolynomial(int num_vars, int r) : r_(r), poly_(num_vars) {
  if (r <= 3) throw BadParams("truncation degree must exceed 3");
}

TruncatedPolynomial TruncatedPolynomial::from(const Polynomial& p, int r) {
  TruncatedPolynomial t(p.num_vars(), r);
  for (const auto& [e, c] : p.terms()) {
    const int d = total_degree(e);
    if (d < 3) throw InternalInconsistency("term of degree below 3 in I_3");
    if (d < r) t.poly_.add_term(e, c);
  }
  return t;
}

}  // namespace nary
