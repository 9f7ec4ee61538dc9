#include "nary/exterior.hpp"

#include "nary/errors.hpp"
#include "nary/permutation.hpp"

#include <algorithm>

namespace nary {

ExteriorForm::ExteriorForm(int ambient_dim, int degree) : ambient_dim_(ambient_dim), degree_(degree) {
  if (ambient_dim < 0 || degree < 0) throw DimensionMismatch("negative form dimensions");
}

ExteriorForm ExteriorForm::basis_one_form(int ambient_dim, int l) {
  const int idx[] = {l};
  return monomial(ambient_dim, idx);
}

ExteriorForm ExteriorForm::monomial(int ambient_dim, std::span<const int> indices, const Rational& c) {
  ExteriorForm f(ambient_dim, static_cast<int>(indices.size()));
  f.add_term(indices, c);
  return f;
}

Rational ExteriorForm::coefficient(std::span<const int> increasing) const {
  auto it = terms_.find(IndexTuple(increasing.begin(), increasing.end()));
  return it == terms_.end() ? Rational() : it->second;
}

void ExteriorForm::add_term(std::span<const int> indices, const Rational& c) {
  if (static_cast<int>(indices.size()) != degree_) throw DimensionMismatch("term has wrong degree");
  for (int i : indices)
    if (i < 0 || i >= ambient_dim_) throw IndexOutOfRange("form index out of range");
  if (c.is_zero()) return;
  IndexTuple key(indices.begin(), indices.end());
  const int sign = sorting_sign(key);
  if (sign == 0) return;
  std::sort(key.begin(), key.end());
  Rational v = sign > 0 ? c : -c;
  auto [it, inserted] = terms_.emplace(std::move(key), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string ExteriorForm::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) s += c.sign() < 0 ? "-" : "";
    else s += c.sign() < 0 ? " - " : " + ";
    first = false;
    if (mag != Rational(1) || key.empty()) s += mag.str() + (key.empty() ? "" : " ");
    for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "^w" : "w") + std::to_string(key[i] + 1);
  }
  return s;
}

void ExteriorForm::check(const ExteriorForm& o) const {
  if (o.ambient_dim_ != ambient_dim_ || o.degree_ != degree_) throw DimensionMismatch("forms of different shape");
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  check(o);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a += Rational(-1) * b; }

ExteriorForm operator*(const Rational& s, const ExteriorForm& a) {
  ExteriorForm out(a.ambient_dim_, a.degree_);
  if (s.is_zero()) return out;
  for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, s * c);
  return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("wedge of forms on different spaces");
  ExteriorForm out(a.ambient_dim(), a.degree() + b.degree());
  IndexTuple joined;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      joined = ka;
      joined.insert(joined.end(), kb.begin(), kb.end());
      out.add_term(joined, ca * cb);
    }
  return out;
}

ExteriorForm d_one(const NAryProduct& prod, int l) {
  if (prod.symmetry() != Symmetry::skew) throw NotSkew("Maurer-Cartan operator needs a skew product");
  if (l < 0 || l >= prod.dim()) throw IndexOutOfRange("d_one index out of range");
  ExteriorForm out(prod.dim(), prod.arity());
  for (const auto& [key, value] : prod.constants())
    for (const auto& [t, c] : value)
      if (t == l) out.add_term(key, c);
  return out;
}

ExteriorForm d_extend(const NAryProduct& prod, const ExteriorForm& form, ExtensionSign rule) {
  const int n = prod.arity(), p = prod.dim();
  if (form.degree() != n) throw DimensionMismatch("d_extend needs a form of degree n");
  if (form.ambient_dim() != p) throw DimensionMismatch("form lives on a different space");
  std::vector<ExteriorForm> d;
  for (int l = 0; l < p; ++l) d.push_back(d_one(prod, l));

  ExteriorForm out(p, 2 * n - 1);
  for (const auto& [key, c] : form.terms())
    for (int j = 0; j < n; ++j) {
      const ExteriorForm& dj = d[static_cast<std::size_t>(key[static_cast<std::size_t>(j)])];
      if (dj.is_zero()) continue;
      const bool negative = rule == ExtensionSign::graded && ((n - 1) * j) % 2 == 1;
      ExteriorForm left = ExteriorForm::monomial(p, std::span<const int>(key).first(static_cast<std::size_t>(j)), negative ? -c : c);
      ExteriorForm right = ExteriorForm::monomial(p, std::span<const int>(key).subspan(static_cast<std::size_t>(j + 1)));
      out += wedge(wedge(left, dj), right);
    }
  return out;
}

MaurerCartanResult maurer_cartan_check(const NAryProduct& prod, ExtensionSign rule) {
  if (prod.symmetry() != Symmetry::skew) throw NotSkew("Maurer-Cartan check needs a skew product");
  const int n = prod.arity(), p = prod.dim();
  MaurerCartanResult res;
  res.vacuous = p < 2 * n - 1;
  for (int l = 0; l < p; ++l) {
    ExteriorForm dd = d_extend(prod, d_one(prod, l), rule);
    if (dd.is_zero()) continue;
    const IndexTuple& least = dd.terms().begin()->first;
    if (!res.witness || least < res.witness->tuple) res.witness = MaurerCartanWitness{l, least, std::move(dd)};
  }
  return res;
}

}  // namespace nary
