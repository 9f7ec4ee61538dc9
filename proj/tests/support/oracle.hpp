#pragma once

// Brute-force reference implementations used as test oracles. Everything
// here works on a dense table of mu over all p^n basis tuples and expands
// identities straight from their definitions, with permutations produced by
// std::next_permutation and signs by counting inversions. None of it calls
// the library's canonicalization, tuple enumeration, or identity code.

#include "nary/linear.hpp"
#include "nary/product.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using nary::Rational;
using nary::Vector;
using Tuple = std::vector<int>;

/// +1 / -1 by inversion count, 0 if an entry repeats.
inline int inversion_sign(const Tuple& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

/// All permutations of 0..m-1 as image lists, lexicographic.
inline std::vector<Tuple> permutations(int m) {
  Tuple p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Tuple> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every k-tuple over 0..p-1, lexicographic.
inline std::vector<Tuple> all_tuples(int k, int p) {
  std::vector<Tuple> out;
  Tuple t(static_cast<std::size_t>(k), 0);
  long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long c = 0; c < total; ++c) {
    long x = c;
    for (int i = k - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
      x /= p;
    }
    out.push_back(t);
  }
  return out;
}

inline bool strictly_increasing(const Tuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] >= t[i]) return false;
  return true;
}

inline Vector zero(int p) { return Vector(static_cast<std::size_t>(p)); }

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

inline void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

struct Dense {
  int n = 0;
  int p = 0;
  std::vector<Vector> table;

  Dense(int arity, int dim) : n(arity), p(dim) {
    long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    table.assign(static_cast<std::size_t>(total), zero(p));
  }

  std::size_t code(const Tuple& t) const {
    std::size_t c = 0;
    for (int i : t) c = c * static_cast<std::size_t>(p) + static_cast<std::size_t>(i);
    return c;
  }
  const Vector& at(const Tuple& t) const { return table[code(t)]; }
  Vector& at(const Tuple& t) { return table[code(t)]; }

  /// Each relation mu(e_key) = value is spread over all reorderings of the
  /// key with the permutation sign; relations with a repeated index are
  /// dropped (they must be zero).
  static Dense from_skew_relations(int n, int p, const std::vector<nary::Relation>& rels) {
    Dense d(n, p);
    for (const auto& r : rels) {
      if (inversion_sign(r.indices) == 0) continue;
      for (const Tuple& pi : permutations(n)) {
        Tuple t(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = r.indices[static_cast<std::size_t>(pi[static_cast<std::size_t>(k)])];
        axpy(d.at(t), inversion_sign(pi), r.value);
      }
    }
    return d;
  }

  static Dense from_general_relations(int n, int p, const std::vector<nary::Relation>& rels) {
    Dense d(n, p);
    for (const auto& r : rels) axpy(d.at(r.indices), 1, r.value);
    return d;
  }

  static Dense from_product(const nary::NAryProduct& prod) {
    Dense d(prod.arity(), prod.dim());
    for (const Tuple& t : all_tuples(prod.arity(), prod.dim())) d.at(t) = prod.basis_bracket(t);
    return d;
  }

  /// Full multilinear expansion.
  Vector eval(const std::vector<Vector>& args) const {
    Vector out = zero(p);
    for (const Tuple& t : all_tuples(n, p)) {
      Rational c = 1;
      for (int k = 0; k < n && !c.is_zero(); ++k) c *= args[static_cast<std::size_t>(k)][static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
      axpy(out, c, at(t));
    }
    return out;
  }

  /// mu(x_0, .., mu(x_pos .. x_{pos+n-1}), .., x_{2n-2}) on basis indices.
  Vector nested(const Tuple& x, int pos) const {
    const Tuple inner(x.begin() + pos, x.begin() + pos + n);
    const Vector& w = at(inner);
    Tuple outer(x.begin(), x.begin() + pos);
    outer.push_back(0);
    outer.insert(outer.end(), x.begin() + pos + n, x.end());
    Vector out = zero(p);
    for (int s = 0; s < p; ++s) {
      outer[static_cast<std::size_t>(pos)] = s;
      axpy(out, w[static_cast<std::size_t>(s)], at(outer));
    }
    return out;
  }

  /// mu(a_1..a_{k-1}, w, a_{k+1}..) with vector w in slot k, others basis.
  Vector with_vector(Tuple t, int k, const Vector& w) const {
    Vector out = zero(p);
    for (int s = 0; s < p; ++s) {
      t[static_cast<std::size_t>(k)] = s;
      axpy(out, w[static_cast<std::size_t>(s)], at(t));
    }
    return out;
  }
};

/// [[u], v] - sum_i [u_1 .. [u_i, v] .. u_n]
inline Vector filippov_defect(const Dense& d, const Tuple& u, const Tuple& v) {
  const int n = d.n;
  Tuple outer = {0};
  outer.insert(outer.end(), v.begin(), v.end());
  Vector out = d.with_vector(outer, 0, d.at(u));
  for (int i = 0; i < n; ++i) {
    Tuple in = {u[static_cast<std::size_t>(i)]};
    in.insert(in.end(), v.begin(), v.end());
    axpy(out, -1, d.with_vector(u, i, d.at(in)));
  }
  return out;
}

/// Every u in p^n and v in p^{n-1}.
inline bool filippov_holds(const Dense& d) {
  for (const Tuple& u : all_tuples(d.n, d.p))
    for (const Tuple& v : all_tuples(d.n - 1, d.p))
      if (!is_zero(filippov_defect(d, u, v))) return false;
  return true;
}

/// mu(v, mu(u)) - sum_i mu(u_1 .. mu(v, u_i) .. u_n)
inline bool leibniz_holds(const Dense& d) {
  const int n = d.n;
  for (const Tuple& u : all_tuples(n, d.p))
    for (const Tuple& v : all_tuples(n - 1, d.p)) {
      Tuple outer = v;
      outer.push_back(0);
      Vector out = d.with_vector(outer, n - 1, d.at(u));
      for (int i = 0; i < n; ++i) {
        Tuple in = v;
        in.push_back(u[static_cast<std::size_t>(i)]);
        axpy(out, -1, d.with_vector(u, i, d.at(in)));
      }
      if (!is_zero(out)) return false;
    }
  return true;
}

/// Shuffle permutations of 2n-1 letters: increasing on the first n images
/// and on the last n-1.
inline std::vector<Tuple> shuffle_perms(int n, int k) {
  std::vector<Tuple> out;
  for (const Tuple& s : permutations(n + k)) {
    if (std::is_sorted(s.begin(), s.begin() + n) && std::is_sorted(s.begin() + n, s.end())) out.push_back(s);
  }
  return out;
}

inline Vector sh_defect(const Dense& d, const Tuple& x) {
  Vector out = zero(d.p);
  for (const Tuple& s : shuffle_perms(d.n, d.n - 1)) {
    Tuple y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[static_cast<std::size_t>(s[k])];
    axpy(out, inversion_sign(s), d.nested(y, 0));
  }
  return out;
}

/// First increasing (2n-1)-tuple with nonzero sh defect.
inline std::optional<std::pair<Tuple, Vector>> sh_first_failure(const Dense& d) {
  for (const Tuple& x : all_tuples(2 * d.n - 1, d.p)) {
    if (!strictly_increasing(x)) continue;
    Vector v = sh_defect(d, x);
    if (!is_zero(v)) return std::make_pair(x, v);
  }
  return std::nullopt;
}

/// Inner product applied to e_{x_{q + sigma^{-1}(k)}} in slot k.
inline Vector twisted(const Dense& d, const Tuple& x, int q, const Tuple& sigma_images) {
  const int n = d.n;
  Tuple inv(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) inv[static_cast<std::size_t>(sigma_images[static_cast<std::size_t>(k)])] = k;
  Tuple y = x;
  for (int k = 0; k < n; ++k) y[static_cast<std::size_t>(q + k)] = x[static_cast<std::size_t>(q + inv[static_cast<std::size_t>(k)])];
  return d.nested(y, q);
}

inline Tuple perm_power(const Tuple& s, int e) {
  Tuple r(s.size());
  std::iota(r.begin(), r.end(), 0);
  for (int i = 0; i < e; ++i) {
    Tuple next(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) next[k] = s[static_cast<std::size_t>(r[k])];
    r = next;
  }
  return r;
}

inline bool sigma_partial_holds(const Dense& d, const Tuple& sigma) {
  const int n = d.n;
  const int eps = inversion_sign(sigma) == 1 ? 0 : 1;
  for (const Tuple& x : all_tuples(2 * n - 1, d.p)) {
    Vector out = zero(d.p);
    for (int q = 0; q < n; ++q) {
      const int e = q * (n - 1) + n * q * eps;
      axpy(out, e % 2 == 0 ? 1 : -1, twisted(d, x, q, perm_power(sigma, n * q)));
    }
    if (!is_zero(out)) return false;
  }
  return true;
}

inline bool sigma_total_holds(const Dense& d, const Tuple& sigma) {
  const int n = d.n;
  for (const Tuple& x : all_tuples(2 * n - 1, d.p)) {
    const Vector left = d.nested(x, 0);
    for (int q = 0; q < n; ++q)
      if (left != twisted(d, x, q, perm_power(sigma, n * q))) return false;
  }
  return true;
}

inline Dense antisymmetrized(const Dense& d) {
  Dense out(d.n, d.p);
  for (const Tuple& t : all_tuples(d.n, d.p))
    for (const Tuple& pi : permutations(d.n)) {
      Tuple y(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) y[k] = t[static_cast<std::size_t>(pi[k])];
      axpy(out.at(t), inversion_sign(pi), d.at(y));
    }
  return out;
}

inline bool commutative_holds(const Dense& d) {
  for (const Tuple& t : all_tuples(d.n, d.p)) {
    Vector s = zero(d.p);
    for (const Tuple& pi : permutations(d.n)) {
      Tuple y(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) y[k] = t[static_cast<std::size_t>(pi[k])];
      axpy(s, inversion_sign(pi), d.at(y));
    }
    if (!is_zero(s)) return false;
  }
  return true;
}

/// Equality of dense tables.
inline bool same(const Dense& a, const Dense& b) { return a.n == b.n && a.p == b.p && a.table == b.table; }

}  // namespace oracle
