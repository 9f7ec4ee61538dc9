#pragma once

// Seeded random products for property tests.

#include "nary/catalog.hpp"
#include "nary/linear.hpp"
#include "nary/product.hpp"
#include "nary/sampling.hpp"

#include <algorithm>
#include <vector>

namespace gen {

using namespace nary;

/// `keys` random relations on increasing tuples, each with 1-2 target terms.
inline std::vector<Relation> random_skew_relations(RationalSampler& rng, int n, int p, int keys) {
  std::vector<Relation> rels;
  for (int k = 0; k < keys; ++k) {
    IndexTuple t;
    while (static_cast<int>(t.size()) < n) {
      const int i = static_cast<int>(rng.integer(0, p - 1));
      if (std::find(t.begin(), t.end(), i) == t.end()) t.push_back(i);
    }
    Vector v = zero_vector(p);
    const int terms = static_cast<int>(rng.integer(1, 2));
    for (int j = 0; j < terms; ++j) v[static_cast<std::size_t>(rng.integer(0, p - 1))] = rng.nonzero_rational(3, 2);
    rels.push_back({t, v});
  }
  return rels;
}

inline NAryProduct random_skew(RationalSampler& rng, int n, int p, int keys) {
  return make_skew_product(n, p, random_skew_relations(rng, n, p, keys));
}

/// Every constant independently nonzero with probability ~density/10.
inline std::vector<Relation> random_general_relations(RationalSampler& rng, int n, int p, int density) {
  std::vector<Relation> rels;
  for_each_tuple(n, p, [&](const IndexTuple& t) {
    Vector v = zero_vector(p);
    for (int j = 0; j < p; ++j)
      if (rng.integer(0, 9) < density) v[static_cast<std::size_t>(j)] = rng.nonzero_rational(3, 2);
    if (!is_zero(v)) rels.push_back({t, v});
    return true;
  });
  return rels;
}

inline NAryProduct random_general(RationalSampler& rng, int n, int p, int density) {
  return make_product(n, p, Symmetry::general, random_general_relations(rng, n, p, density));
}

inline Matrix random_invertible(RationalSampler& rng, int p) {
  while (true) {
    Matrix m(p, p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) m(i, j) = rng.integer(-2, 2);
    if (!determinant(m).is_zero()) return m;
  }
}

/// Same product seen through a random change of basis.
inline NAryProduct disguised(RationalSampler& rng, const NAryProduct& prod) {
  return change_basis(prod, random_invertible(rng, prod.dim()));
}

/// prod on K^p with the extra coordinates central.
inline NAryProduct padded(const NAryProduct& prod, int p) {
  std::vector<Relation> rels;
  for (const auto& [key, value] : prod.constants()) {
    Vector v = zero_vector(p);
    for (const auto& [j, c] : value) v[static_cast<std::size_t>(j)] = c;
    rels.push_back({key, v});
  }
  return make_product(prod.arity(), p, prod.symmetry(), rels);
}

/// prod plus one extra relation.
inline NAryProduct perturbed(RationalSampler& rng, const NAryProduct& prod) {
  std::vector<Relation> rels;
  for (const auto& [key, value] : prod.constants()) {
    Vector v = zero_vector(prod.dim());
    for (const auto& [j, c] : value) v[static_cast<std::size_t>(j)] = c;
    rels.push_back({key, v});
  }
  for (auto& r : random_skew_relations(rng, prod.arity(), prod.dim(), 1)) rels.push_back(std::move(r));
  return make_product(prod.arity(), prod.dim(), prod.symmetry(), rels);
}

/// Ternary skew products on K^p from a fixed mix: disguised Filippov
/// algebras, their perturbations, and sparse random products.
inline std::vector<NAryProduct> ternary_mix(std::uint64_t seed, int count, int p_lo, int p_hi) {
  RationalSampler rng(seed);
  std::vector<NAryProduct> out;
  for (int i = 0; i < count; ++i) {
    const int p = static_cast<int>(p_lo + i % (p_hi - p_lo + 1));
    std::vector<NAryProduct> lie = {filiform_model(3, p), padded(simple_algebra(3), p), padded(counterexample_algebra(3), p)};
    if (p >= 5) lie.push_back(padded(filiform5(rng.rational(3, 2), rng.rational(3, 2)), p));
    const NAryProduct& base = lie[static_cast<std::size_t>(rng.integer(0, static_cast<long>(lie.size()) - 1))];
    switch (i % 4) {
      case 0: out.push_back(disguised(rng, base)); break;
      case 1: out.push_back(perturbed(rng, base)); break;
      case 2: out.push_back(random_skew(rng, 3, p, 1)); break;
      default: out.push_back(random_skew(rng, 3, p, static_cast<int>(rng.integer(2, 4)))); break;
    }
  }
  return out;
}

}  // namespace gen
