#include "nary/group_algebra.hpp"

#include "nary/errors.hpp"

#include <string>

namespace nary {

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
  if (degree < 1) throw DimensionMismatch("group algebra degree must be positive");
}

GroupAlgebraElement GroupAlgebraElement::delta(const Permutation& p, const Rational& coefficient) {
  GroupAlgebraElement e(p.degree());
  e.add(p, coefficient);
  return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& coefficient) {
  if (p.degree() != degree_) throw DimensionMismatch("permutation degree does not match element");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.degree_ != degree_) throw DimensionMismatch("group algebra degree mismatch");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.degree_);
  if (s.is_zero()) return out;
  for (const auto& [p, c] : a.terms_) out.terms_.emplace(p, s * c);
  return out;
}

GroupAlgebraElement compose(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("group algebra degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms()) out.add(p * q, c * d);
  return out;
}

std::vector<Permutation> shuffles(int n, int k) {
  if (n < 1 || k < 1) throw BadParams("shuffles need n, k >= 1");
  const int m = n + k;
  std::vector<Permutation> out;
  for_each_increasing(n, m, [&](const IndexTuple& head) {
    std::vector<int> images(head.begin(), head.end());
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int x : head) used[static_cast<std::size_t>(x)] = true;
    for (int x = 0; x < m; ++x)
      if (!used[static_cast<std::size_t>(x)]) images.push_back(x);
    out.emplace_back(std::move(images));
    return true;
  });
  return out;
}

GroupAlgebraElement filippov_vector(int n) {
  if (n < 2) throw BadParams("filippov_vector needs n >= 2");
  const int m = 2 * n - 1;
  GroupAlgebraElement v = GroupAlgebraElement::identity(m);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row{i};
    for (int j = n + 1; j <= m; ++j) row.push_back(j);
    for (int j = 1; j <= n; ++j)
      if (j != i) row.push_back(j);
    v.add(Permutation::from_one_based(row), i % 2 == 0 ? 1 : -1);
  }
  return v;
}

GroupAlgebraElement total_antisym_vector(int m) {
  if (m > kMaxGroupAlgebraDegree)
    throw TooLarge("refusing to expand S_" + std::to_string(m) + " (cap is " + std::to_string(kMaxGroupAlgebraDegree) + ")");
  GroupAlgebraElement w(m);
  for (const Permutation& s : all_permutations(m)) w.add(s, s.sign());
  return w;
}

Rational proportionality_to_antisym(const GroupAlgebraElement& x) {
  const Rational c = x.coefficient(Permutation::identity(x.degree()));
  if (c.is_zero()) {
    if (x.is_zero()) return 0;
    throw NotProportional("element is not a multiple of the antisymmetrizer");
  }
  if (x.size() != all_permutations(x.degree()).size()) throw NotProportional("element is not a multiple of the antisymmetrizer");
  for (const auto& [p, coeff] : x.terms())
    if (coeff != Rational(p.sign()) * c) throw NotProportional("element is not a multiple of the antisymmetrizer");
  return c;
}

Rational verify_wv_identity(int n) {
  if (n < 2) throw BadParams("verify_wv_identity needs n >= 2");
  return proportionality_to_antisym(compose(total_antisym_vector(2 * n - 1), filippov_vector(n)));
}

Rational colored_reduction(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  const Permutation c = Permutation::from_one_based(std::vector<int>{2, 3, 1});
  GroupAlgebraElement v(3);
  v.add(Permutation::identity(3), alpha);
  v.add(c, beta);
  v.add(c * c, gamma);
  return proportionality_to_antisym(compose(total_antisym_vector(3), v));
}

Vector nested_action(const NAryProduct& prod, const GroupAlgebraElement& element, std::span<const int> tuple) {
  const int n = prod.arity(), m = 2 * n - 1;
  if (element.degree() != m || static_cast<int>(tuple.size()) != m)
    throw DimensionMismatch("nested action needs a (2n-1)-tuple and an element of K[S_{2n-1}]");
  Vector out = zero_vector(prod.dim());
  IndexTuple slots(static_cast<std::size_t>(m));
  for (const auto& [s, c] : element.terms()) {
    for (int k = 0; k < m; ++k) slots[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(s(k))];
    prod.accumulate_nested(slots, 0, c, out);
  }
  return out;
}

}  // namespace nary
