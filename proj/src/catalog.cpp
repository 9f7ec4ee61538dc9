#include "nary/catalog.hpp"

#include "nary/errors.hpp"

#include <algorithm>
#include <map>

namespace nary {

namespace {

Relation rel(IndexTuple idx, int dim, int target, const Rational& c = 1) {
  Vector v = zero_vector(dim);
  v[static_cast<std::size_t>(target)] = c;
  return {std::move(idx), std::move(v)};
}

}  // namespace

NAryProduct simple_algebra(int n) {
  if (n < 2) throw BadParams("simple_algebra needs n >= 2");
  const int p = n + 1;
  std::vector<Relation> rels;
  for (int i = 0; i < p; ++i) {
    IndexTuple t;
    for (int j = 0; j < p; ++j)
      if (j != i) t.push_back(j);
    // 1-based exponent n + 1 + (i + 1)
    const int sign = (n + i) % 2 == 0 ? 1 : -1;
    rels.push_back(rel(t, p, i, sign));
  }
  return make_skew_product(n, p, rels);
}

NAryProduct dim_n_algebra(int n, DimNKind kind) {
  if (n < 2) throw BadParams("dim_n_algebra needs n >= 2");
  std::vector<Relation> rels;
  if (kind == DimNKind::e1) {
    IndexTuple t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
    rels.push_back(rel(t, n, 0));
  }
  return make_skew_product(n, n, rels);
}

NAryProduct filiform_model(int n, int p) {
  if (n < 2 || p < n + 1) throw BadParams("filiform_model needs n >= 2 and p >= n + 1");
  std::vector<Relation> rels;
  for (int i = n - 1; i < p - 1; ++i) {
    IndexTuple t;
    for (int j = 0; j < n - 1; ++j) t.push_back(j);
    t.push_back(i);
    rels.push_back(rel(t, p, i + 1));
  }
  return make_skew_product(n, p, rels);
}

NAryProduct filiform5(const Rational& a, const Rational& b) {
  const std::vector<Relation> rels = {
      rel({0, 1, 2}, 5, 3),
      rel({0, 1, 3}, 5, 4),
      rel({0, 2, 3}, 5, 4, a),
      rel({1, 2, 3}, 5, 4, b),
  };
  return make_skew_product(3, 5, rels);
}

Matrix filiform5_adapted_basis(const Rational& a) {
  Matrix m = Matrix::identity(5);
  m(1, 2) = -a;
  return m;
}

NAryProduct counterexample_algebra(int n) {
  if (n < 3) throw BadParams("counterexample_algebra is not defined for n < 3");
  IndexTuple t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
  const std::vector<Relation> rels = {rel(t, n, 1)};
  return make_skew_product(n, n, rels);
}

std::vector<Exponents> truncated_jacobian_basis(int n, int r) {
  if (n < 2 || r <= 3) throw BadParams("J_r needs n >= 2 and r > 3");
  return monomials_in_degree_range(n, 3, r - 1);
}

NAryProduct truncated_jacobian_algebra(int n, int r) {
  const std::vector<Exponents> basis = truncated_jacobian_basis(n, r);
  const int p = static_cast<int>(basis.size());
  std::map<Exponents, int> position;
  for (int i = 0; i < p; ++i) position.emplace(basis[static_cast<std::size_t>(i)], i);

  std::vector<Polynomial> monos;
  for (const Exponents& e : basis) monos.push_back(Polynomial::monomial(e));

  std::vector<Relation> rels;
  const int cap = n * (r - 1);
  for_each_increasing(n, p, [&](const IndexTuple& t) {
    std::vector<Polynomial> args;
    for (int i : t) args.push_back(monos[static_cast<std::size_t>(i)]);
    const TruncatedPolynomial jac = TruncatedPolynomial::from(polynomial_jacobian_bracket(args, cap), r);
    if (jac.polynomial().is_zero()) return true;
    Vector v = zero_vector(p);
    for (const auto& [e, c] : jac.polynomial().terms()) v[static_cast<std::size_t>(position.at(e))] = c;
    rels.push_back({t, std::move(v)});
    return true;
  });
  return make_skew_product(n, p, rels);
}

NAryProduct ternary_matrix_product(int rows, int cols) {
  if (rows < 1 || cols < 1) throw BadParams("matrix shape must be positive");
  const int p = rows * cols;
  auto idx = [cols](int a, int b) { return a * cols + b; };
  // E_ab (E_cd)^T E_ef = delta_bd delta_ce E_af
  std::vector<Relation> rels;
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < cols; ++b)
      for (int c = 0; c < rows; ++c)
        for (int f = 0; f < cols; ++f) rels.push_back(rel({idx(a, b), idx(c, b), idx(c, f)}, p, idx(a, f)));
  return make_product(3, p, Symmetry::general, rels);
}

std::vector<IndexTuple> cyclic_tensor_orbits(int d) {
  if (d < 1) throw BadParams("cyclic tensors need d >= 1");
  std::vector<IndexTuple> reps;
  for_each_tuple(3, d, [&](const IndexTuple& t) {
    const IndexTuple r1 = {t[1], t[2], t[0]}, r2 = {t[2], t[0], t[1]};
    if (t <= r1 && t <= r2) reps.push_back(t);
    return true;
  });
  return reps;
}

namespace {

using Tensor3 = std::vector<Rational>;  // d^3 entries, index (i*d + j)*d + k

struct CyclicSpace {
  int d;
  std::vector<IndexTuple> reps;
  std::vector<Tensor3> basis;
};

CyclicSpace cyclic_space(int d) {
  CyclicSpace s{d, cyclic_tensor_orbits(d), {}};
  auto at = [d](int i, int j, int k) { return static_cast<std::size_t>((i * d + j) * d + k); };
  for (const IndexTuple& r : s.reps) {
    Tensor3 t(static_cast<std::size_t>(d * d * d));
    t[at(r[0], r[1], r[2])] = 1;
    t[at(r[1], r[2], r[0])] = 1;
    t[at(r[2], r[0], r[1])] = 1;
    s.basis.push_back(std::move(t));
  }
  return s;
}

Tensor3 raw_cyclic_product(int d, const Tensor3& T, const Tensor3& U, const Tensor3& V) {
  auto at = [d](int i, int j, int k) { return static_cast<std::size_t>((i * d + j) * d + k); };
  Tensor3 W(static_cast<std::size_t>(d * d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Rational s;
        for (int l = 0; l < d; ++l) {
          const Rational& a = T[at(l, i, j)];
          if (a.is_zero()) continue;
          s += a * U[at(l, k, i)] * V[at(l, j, k)];
        }
        W[at(i, j, k)] = s;
      }
  return W;
}

bool rotation_invariant(int d, const Tensor3& W) {
  auto at = [d](int i, int j, int k) { return static_cast<std::size_t>((i * d + j) * d + k); };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (W[at(i, j, k)] != W[at(j, k, i)]) return false;
  return true;
}

}  // namespace

bool cyclic_tensor_product_is_closed(int d) {
  const CyclicSpace s = cyclic_space(d);
  const int p = static_cast<int>(s.basis.size());
  return for_each_tuple(3, p, [&](const IndexTuple& t) {
    return rotation_invariant(d, raw_cyclic_product(d, s.basis[static_cast<std::size_t>(t[0])],
                                                    s.basis[static_cast<std::size_t>(t[1])],
                                                    s.basis[static_cast<std::size_t>(t[2])]));
  });
}

NAryProduct cyclic_tensor_product(int d) {
  const CyclicSpace s = cyclic_space(d);
  const int p = static_cast<int>(s.basis.size());
  auto at = [d](int i, int j, int k) { return static_cast<std::size_t>((i * d + j) * d + k); };
  std::vector<Relation> rels;
  for (const IndexTuple& t : canonical_tuples(3, p, Symmetry::cyclic)) {
    const Tensor3 W = raw_cyclic_product(d, s.basis[static_cast<std::size_t>(t[0])], s.basis[static_cast<std::size_t>(t[1])],
                                         s.basis[static_cast<std::size_t>(t[2])]);
    Vector v = zero_vector(p);
    for (int o = 0; o < p; ++o) {
      const IndexTuple& r = s.reps[static_cast<std::size_t>(o)];
      v[static_cast<std::size_t>(o)] =
          (W[at(r[0], r[1], r[2])] + W[at(r[1], r[2], r[0])] + W[at(r[2], r[0], r[1])]) / Rational(3);
    }
    if (!is_zero(v)) rels.push_back({t, std::move(v)});
  }
  return make_product(3, p, Symmetry::cyclic, rels);
}

NAryProduct gerstenhaber_bullet(const NAryProduct& base, const NAryProduct& f, const NAryProduct& g) {
  const int p = base.dim();
  if (f.dim() != p || g.dim() != p) throw DimensionMismatch("cochains live on a different space");
  const int k = f.arity(), m = g.arity();
  const int arity = k + m - 1;
  std::vector<Relation> rels;
  IndexTuple outer(static_cast<std::size_t>(k));
  for_each_tuple(arity, p, [&](const IndexTuple& x) {
    Vector out = zero_vector(p);
    for (int i = 0; i < k; ++i) {
      const Vector inner = g.basis_bracket(std::span<const int>(x).subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(m)));
      const Rational sign = (i * (m - 1)) % 2 == 0 ? 1 : -1;
      for (int j = 0; j < i; ++j) outer[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
      for (int j = i + 1; j < k; ++j) outer[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j + m - 1)];
      for (int s = 0; s < p; ++s) {
        const Rational& c = inner[static_cast<std::size_t>(s)];
        if (c.is_zero()) continue;
        outer[static_cast<std::size_t>(i)] = s;
        f.accumulate_basis(outer, sign * c, out);
      }
    }
    if (!is_zero(out)) rels.push_back({x, std::move(out)});
    return true;
  });
  return make_product(arity, p, Symmetry::general, rels);
}

NAryProduct abelian(int n, int p) {
  if (n < 1 || p < 1) throw BadParams("abelian needs n, p >= 1");
  return NAryProduct(n, p, Symmetry::skew);
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 2; n <= 5; ++n) out.push_back({"simple n=" + std::to_string(n), simple_algebra(n)});
  for (int n = 2; n <= 5; ++n) out.push_back({"dim-n e1 n=" + std::to_string(n), dim_n_algebra(n, DimNKind::e1)});
  out.push_back({"dim-n abelian n=3", dim_n_algebra(3, DimNKind::abelian)});
  for (int p = 4; p <= 8; ++p) out.push_back({"filiform n=3 p=" + std::to_string(p), filiform_model(3, p)});
  out.push_back({"filiform n=4 p=6", filiform_model(4, 6)});
  out.push_back({"filiform n=4 p=7", filiform_model(4, 7)});
  out.push_back({"filiform5 a=0 b=0", filiform5(0, 0)});
  out.push_back({"filiform5 a=1 b=2", filiform5(1, 2)});
  out.push_back({"filiform5 a=-1/2 b=3", filiform5(Rational(-1, 2), 3)});
  out.push_back({"counterexample n=3", counterexample_algebra(3)});
  out.push_back({"counterexample n=4", counterexample_algebra(4)});
  out.push_back({"jr n=2 r=5", truncated_jacobian_algebra(2, 5)});
  out.push_back({"jr n=2 r=6", truncated_jacobian_algebra(2, 6)});
  out.push_back({"jr n=3 r=5", truncated_jacobian_algebra(3, 5)});
  out.push_back({"abelian n=3 p=5", abelian(3, 5)});
  return out;
}

}  // namespace nary
