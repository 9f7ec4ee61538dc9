#include "nary/product.hpp"

#include "nary/errors.hpp"
#include "nary/permutation.hpp"

#include <algorithm>
#include <string>

namespace nary {

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::general: return "general";
    case Symmetry::skew: return "skew";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::cyclic: return "cyclic";
  }
  return "general";
}

std::optional<Symmetry> parse_symmetry(std::string_view s) {
  if (s == "general") return Symmetry::general;
  if (s == "skew") return Symmetry::skew;
  if (s == "symmetric") return Symmetry::symmetric;
  if (s == "cyclic") return Symmetry::cyclic;
  return std::nullopt;
}

namespace {

SparseVector to_sparse(std::span<const Rational> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

}  // namespace

NAryProduct::NAryProduct(int arity, int dim, Symmetry symmetry)
    : arity_(arity), dim_(dim), symmetry_(symmetry) {
  if (arity < 1) throw ArityMismatch("arity must be at least 1");
  if (dim < 1) throw DimensionMismatch("dimension must be at least 1");
  if (symmetry == Symmetry::cyclic && arity != 3) throw ArityMismatch("cyclic products are ternary");
}

void NAryProduct::check_indices(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != arity_)
    throw ArityMismatch("expected " + std::to_string(arity_) + " indices, got " + std::to_string(indices.size()));
  for (int i : indices)
    if (i < 0 || i >= dim_) throw IndexOutOfRange("basis index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(dim_));
}

NAryProduct::Canonical NAryProduct::canonicalize(std::span<const int> indices) const {
  Canonical c{IndexTuple(indices.begin(), indices.end()), 1};
  IndexTuple& k = c.key;
  switch (symmetry_) {
    case Symmetry::general:
      break;
    case Symmetry::symmetric:
      std::sort(k.begin(), k.end());
      break;
    case Symmetry::skew: {
      // insertion sort, counting transpositions
      for (std::size_t i = 1; i < k.size(); ++i)
        for (std::size_t j = i; j > 0 && k[j - 1] >= k[j]; --j) {
          if (k[j - 1] == k[j]) {
            c.sign = 0;
            return c;
          }
          std::swap(k[j - 1], k[j]);
          c.sign = -c.sign;
        }
      break;
    }
    case Symmetry::cyclic: {
      IndexTuple best = k;
      IndexTuple rot = k;
      for (std::size_t r = 1; r < k.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
      }
      k = std::move(best);
      break;
    }
  }
  return c;
}

NAryProduct NAryProduct::from_relations(int arity, int dim, Symmetry symmetry, std::span<const Relation> raw) {
  NAryProduct prod(arity, dim, symmetry);
  std::map<IndexTuple, Vector> dense;
  for (const Relation& rel : raw) {
    prod.check_indices(rel.indices);
    if (static_cast<int>(rel.value.size()) != dim) throw DimensionMismatch("relation value has wrong length");
    Canonical c = prod.canonicalize(rel.indices);
    if (c.sign == 0) {
      if (!is_zero(rel.value)) {
        std::string t;
        for (int i : rel.indices) t += (t.empty() ? "" : " ") + std::to_string(i + 1);
        throw RepeatedIndexNonzero("skew relation [" + t + "] has a repeated index and a nonzero value");
      }
      continue;
    }
    auto [it, inserted] = dense.try_emplace(c.key, zero_vector(dim));
    add_scaled(it->second, c.sign, rel.value);
  }
  for (auto& [key, value] : dense)
    if (!is_zero(value)) prod.constants_.emplace(key, to_sparse(value));
  return prod;
}

const SparseVector* NAryProduct::find(std::span<const int> indices, int& sign) const {
  Canonical c = canonicalize(indices);
  sign = c.sign;
  if (sign == 0) return nullptr;
  auto it = constants_.find(c.key);
  return it == constants_.end() ? nullptr : &it->second;
}

Vector NAryProduct::basis_bracket(std::span<const int> indices) const {
  Vector out = zero_vector(dim_);
  accumulate_basis(indices, 1, out);
  return out;
}

void NAryProduct::accumulate_basis(std::span<const int> indices, const Rational& scale, Vector& out) const {
  int sign = 0;
  const SparseVector* value = find(indices, sign);
  if (!value) return;
  const Rational s = sign > 0 ? scale : -scale;
  for (const auto& [l, c] : *value) out[static_cast<std::size_t>(l)] += s * c;
}

void NAryProduct::accumulate_nested(std::span<const int> tuple, int pos, const Rational& scale, Vector& out) const {
  const int n = arity_;
  int sign = 0;
  const SparseVector* inner = find(tuple.subspan(static_cast<std::size_t>(pos), static_cast<std::size_t>(n)), sign);
  if (!inner) return;
  IndexTuple outer;
  outer.reserve(static_cast<std::size_t>(n));
  outer.insert(outer.end(), tuple.begin(), tuple.begin() + pos);
  outer.push_back(0);
  outer.insert(outer.end(), tuple.begin() + pos + n, tuple.end());
  const Rational s = sign > 0 ? scale : -scale;
  for (const auto& [t, c] : *inner) {
    outer[static_cast<std::size_t>(pos)] = t;
    accumulate_basis(outer, s * c, out);
  }
}

NAryProduct make_product(int arity, int dim, Symmetry symmetry, std::span<const Relation> raw) {
  return NAryProduct::from_relations(arity, dim, symmetry, raw);
}

NAryProduct make_skew_product(int arity, int dim, std::span<const Relation> raw) {
  return NAryProduct::from_relations(arity, dim, Symmetry::skew, raw);
}

std::vector<IndexTuple> canonical_tuples(int arity, int dim, Symmetry symmetry) {
  std::vector<IndexTuple> out;
  auto keep = [&](const IndexTuple& t) {
    out.push_back(t);
    return true;
  };
  switch (symmetry) {
    case Symmetry::skew: for_each_increasing(arity, dim, keep); break;
    case Symmetry::symmetric: for_each_nondecreasing(arity, dim, keep); break;
    case Symmetry::general: for_each_tuple(arity, dim, keep); break;
    case Symmetry::cyclic: {
      NAryProduct probe(arity, dim, symmetry);
      for_each_tuple(arity, dim, [&](const IndexTuple& t) {
        if (probe.canonicalize(t).key == t) out.push_back(t);
        return true;
      });
      break;
    }
  }
  return out;
}

Vector bracket(const NAryProduct& prod, std::span<const Vector> args) {
  const int n = prod.arity(), p = prod.dim();
  if (static_cast<int>(args.size()) != n)
    throw ArityMismatch("bracket expects " + std::to_string(n) + " arguments, got " + std::to_string(args.size()));
  std::vector<SparseVector> support;
  for (const Vector& a : args) {
    if (static_cast<int>(a.size()) != p) throw DimensionMismatch("bracket argument has wrong length");
    support.push_back(to_sparse(a));
  }
  Vector out = zero_vector(p);
  IndexTuple idx(static_cast<std::size_t>(n));
  // depth-first expansion over the support of each argument
  auto expand = [&](auto&& self, int slot, const Rational& weight) -> void {
    if (slot == n) {
      prod.accumulate_basis(idx, weight, out);
      return;
    }
    for (const auto& [i, c] : support[static_cast<std::size_t>(slot)]) {
      idx[static_cast<std::size_t>(slot)] = i;
      self(self, slot + 1, weight * c);
    }
  };
  expand(expand, 0, Rational(1));
  return out;
}

LinearMap adjoint(const NAryProduct& prod, std::span<const Vector> args) {
  const int n = prod.arity(), p = prod.dim();
  if (static_cast<int>(args.size()) != n - 1)
    throw ArityMismatch("adjoint expects " + std::to_string(n - 1) + " arguments, got " + std::to_string(args.size()));
  std::vector<Vector> full(args.begin(), args.end());
  full.push_back(zero_vector(p));
  Matrix m(p, p);
  for (int j = 0; j < p; ++j) {
    full.back() = unit_vector(p, j);
    m.set_column(j, bracket(prod, full));
  }
  return LinearMap(std::move(m));
}

LinearMap basis_adjoint(const NAryProduct& prod, std::span<const int> indices) {
  const int n = prod.arity(), p = prod.dim();
  if (static_cast<int>(indices.size()) != n - 1) throw ArityMismatch("adjoint expects n-1 indices");
  IndexTuple t(indices.begin(), indices.end());
  t.push_back(0);
  Matrix m(p, p);
  for (int j = 0; j < p; ++j) {
    t.back() = j;
    m.set_column(j, prod.basis_bracket(t));
  }
  return LinearMap(std::move(m));
}

Subspace product_subspace(const NAryProduct& prod, std::span<const Subspace> parts) {
  const int n = prod.arity(), p = prod.dim();
  if (static_cast<int>(parts.size()) != n) throw ArityMismatch("product_subspace expects n parts");
  for (const Subspace& s : parts)
    if (s.ambient_dim() != p) throw DimensionMismatch("ambient dimension mismatch");
  std::vector<Vector> images;
  for (const Subspace& s : parts)
    if (s.dim() == 0) return Subspace(p);
  std::vector<Vector> args(static_cast<std::size_t>(n));
  auto expand = [&](auto&& self, int slot) -> void {
    if (slot == n) {
      Vector v = bracket(prod, args);
      if (!is_zero(v)) images.push_back(std::move(v));
      return;
    }
    for (const Vector& b : parts[static_cast<std::size_t>(slot)].basis()) {
      args[static_cast<std::size_t>(slot)] = b;
      self(self, slot + 1);
    }
  };
  expand(expand, 0);
  return Subspace(p, images);
}

bool is_subalgebra(const NAryProduct& prod, const Subspace& w) {
  std::vector<Subspace> parts(static_cast<std::size_t>(prod.arity()), w);
  return product_subspace(prod, parts).is_subspace_of(w);
}

bool is_ideal(const NAryProduct& prod, const Subspace& ideal) {
  const int n = prod.arity();
  if (ideal.ambient_dim() != prod.dim()) throw DimensionMismatch("ambient dimension mismatch");
  const Subspace whole = Subspace::full(prod.dim());
  for (int slot = 0; slot < n; ++slot) {
    std::vector<Subspace> parts(static_cast<std::size_t>(n), whole);
    parts[static_cast<std::size_t>(slot)] = ideal;
    if (!product_subspace(prod, parts).is_subspace_of(ideal)) return false;
  }
  return true;
}

bool is_morphism(const NAryProduct& src, const NAryProduct& dst, const LinearMap& f) {
  if (src.arity() != dst.arity()) throw ArityMismatch("morphism between products of different arity");
  if (f.source_dim() != src.dim() || f.target_dim() != dst.dim()) throw DimensionMismatch("map shape does not match the algebras");
  const int n = src.arity();
  std::vector<Vector> images;
  for (int j = 0; j < src.dim(); ++j) images.push_back(f.matrix().column(j));
  std::vector<Vector> args(static_cast<std::size_t>(n));
  return for_each_tuple(n, src.dim(), [&](const IndexTuple& t) {
    for (int i = 0; i < n; ++i) args[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(t[i])];
    return f(src.basis_bracket(t)) == bracket(dst, args);
  });
}

NAryProduct change_basis(const NAryProduct& prod, const Matrix& basis) {
  const int n = prod.arity(), p = prod.dim();
  if (basis.rows() != p || basis.cols() != p) throw DimensionMismatch("basis matrix must be p x p");
  const Matrix inv = inverse(basis);
  std::vector<Vector> cols;
  for (int j = 0; j < p; ++j) cols.push_back(basis.column(j));
  std::vector<Relation> rels;
  std::vector<Vector> args(static_cast<std::size_t>(n));
  for (const IndexTuple& t : canonical_tuples(n, p, prod.symmetry())) {
    for (int i = 0; i < n; ++i) args[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(t[i])];
    Vector v = inv.apply(bracket(prod, args));
    if (!is_zero(v)) rels.push_back({t, std::move(v)});
  }
  return NAryProduct::from_relations(n, p, prod.symmetry(), rels);
}

}  // namespace nary
