#include "nary/structure.hpp"

#include "nary/errors.hpp"
#include "nary/sampling.hpp"

#include <algorithm>

namespace nary {

std::vector<int> SeriesReport::dims() const {
  std::vector<int> out;
  for (const Subspace& s : terms) out.push_back(s.dim());
  return out;
}

namespace {

SeriesReport run_series(const NAryProduct& prod, SeriesKind kind) {
  const int n = prod.arity(), p = prod.dim();
  const Subspace whole = Subspace::full(p);
  SeriesReport rep{kind, {whole}, false, std::nullopt};
  while (true) {
    const Subspace& last = rep.terms.back();
    if (last.dim() == 0) {
      rep.vanishing_index = static_cast<int>(rep.terms.size());
      return rep;
    }
    std::vector<Subspace> parts(static_cast<std::size_t>(n), whole);
    parts[0] = last;
    if (kind == SeriesKind::derived && n >= 2) parts[1] = last;
    Subspace next = product_subspace(prod, parts);
    if (next == last) {
      rep.stabilized = true;
      return rep;
    }
    rep.terms.push_back(std::move(next));
  }
}

std::vector<IndexTuple> equation_tuples(const NAryProduct& prod) {
  return canonical_tuples(prod.arity(), prod.dim(), prod.symmetry());
}

}  // namespace

SeriesReport derived_series(const NAryProduct& prod) { return run_series(prod, SeriesKind::derived); }
SeriesReport lower_central_series(const NAryProduct& prod) { return run_series(prod, SeriesKind::lower_central); }
bool is_nilpotent(const NAryProduct& prod) { return lower_central_series(prod).vanishing_index.has_value(); }
bool is_solvable(const NAryProduct& prod) { return derived_series(prod).vanishing_index.has_value(); }

Subspace square(const NAryProduct& prod) {
  std::vector<Subspace> parts(static_cast<std::size_t>(prod.arity()), Subspace::full(prod.dim()));
  return product_subspace(prod, parts);
}

int generators_quotient_dim(const NAryProduct& prod) { return prod.dim() - square(prod).dim(); }

bool check_kasymov(const NAryProduct& prod) {
  if (prod.symmetry() != Symmetry::skew) throw NotSkew("check_kasymov requires a skew product");
  return for_each_increasing(prod.arity() - 1, prod.dim(), [&](const IndexTuple& t) {
    return is_nilpotent_matrix(basis_adjoint(prod, t).matrix());
  });
}

// ---------------------------------------------------------------- characteristic sequence

std::string CharacteristicSequence::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

bool independent_mod(const Subspace& sq, std::span<const Vector> vectors) {
  std::vector<Vector> rows = sq.basis();
  rows.insert(rows.end(), vectors.begin(), vectors.end());
  return Subspace(sq.ambient_dim(), rows).dim() == sq.dim() + static_cast<int>(vectors.size());
}

CharacteristicSequence tuple_sequence(const NAryProduct& prod, std::span<const Vector> vectors) {
  try {
    return {nilpotent_jordan_blocks(adjoint(prod, vectors).matrix())};
  } catch (const NotNilpotent&) {
    throw NotNilpotent("adjoint operator is not nilpotent");
  }
}

}  // namespace

CharacteristicSequence characteristic_tuple(const NAryProduct& prod, std::span<const Vector> vectors) {
  if (static_cast<int>(vectors.size()) != prod.arity() - 1) throw ArityMismatch("characteristic_tuple needs n-1 vectors");
  for (const Vector& v : vectors)
    if (static_cast<int>(v.size()) != prod.dim()) throw DimensionMismatch("vector has wrong length");
  if (!independent_mod(square(prod), vectors)) throw DependentVectors("vectors are not independent modulo V^2");
  return tuple_sequence(prod, vectors);
}

CharacteristicSequence filiform_sequence(int arity, int dim) {
  CharacteristicSequence s{{dim - arity + 1}};
  for (int i = 0; i < arity - 1; ++i) s.parts.push_back(1);
  return s;
}

CharacteristicResult characteristic_sequence(const NAryProduct& prod, const CharacteristicOptions& options) {
  if (!is_nilpotent(prod)) throw NotNilpotent("characteristic sequence of a non-nilpotent product");
  const int n = prod.arity(), p = prod.dim();
  const Subspace sq = square(prod);

  std::vector<int> complement;
  for (int j = 0, k = 0; j < p; ++j) {
    if (k < sq.dim() && sq.pivots()[static_cast<std::size_t>(k)] == j) {
      ++k;
      continue;
    }
    complement.push_back(j);
  }

  CharacteristicResult res;
  auto consider = [&](std::span<const Vector> vectors) {
    CharacteristicSequence s = tuple_sequence(prod, vectors);
    if (res.candidates == 0 || s > res.sequence) res.sequence = std::move(s);
    ++res.candidates;
  };

  for_each_increasing(n - 1, static_cast<int>(complement.size()), [&](const IndexTuple& sel) {
    std::vector<Vector> vectors;
    for (int i : sel) vectors.push_back(unit_vector(p, complement[static_cast<std::size_t>(i)]));
    consider(vectors);
    return true;
  });

  for (const auto& extra : options.extra_candidates) {
    if (static_cast<int>(extra.size()) != n - 1) throw ArityMismatch("candidate tuple needs n-1 vectors");
    if (!independent_mod(sq, extra)) throw DependentVectors("candidate tuple is not independent modulo V^2");
    consider(extra);
  }

  if (static_cast<int>(complement.size()) >= n - 1) {
    RationalSampler rng(options.seed);
    for (int r = 0; r < options.random_candidates; ++r) {
      std::vector<Vector> vectors;
      for (int i = 0; i < n - 1; ++i) {
        Vector v = zero_vector(p);
        for (int j : complement) v[static_cast<std::size_t>(j)] = rng.integer(-3, 3);
        for (const Vector& b : sq.basis()) add_scaled(v, rng.integer(-3, 3), b);
        vectors.push_back(std::move(v));
      }
      if (independent_mod(sq, vectors)) consider(vectors);
    }
  }

  if (res.candidates == 0) res.sequence.parts.assign(static_cast<std::size_t>(p), 1);
  res.certified = prod.is_abelian() || res.sequence == filiform_sequence(n, p);
  return res;
}

bool is_filiform(const NAryProduct& prod, const CharacteristicOptions& options) {
  if (!is_nilpotent(prod)) return false;
  if (prod.dim() < prod.arity()) return false;
  return characteristic_sequence(prod, options).sequence == filiform_sequence(prod.arity(), prod.dim());
}

// ---------------------------------------------------------------- derivations

std::vector<Matrix> derivation_algebra(const NAryProduct& prod) {
  const int n = prod.arity(), p = prod.dim();
  const int unknowns = p * p;
  auto var = [p](int row, int col) { return static_cast<std::size_t>(row * p + col); };

  std::vector<Vector> rows;
  for (const IndexTuple& t : equation_tuples(prod)) {
    const Vector image = prod.basis_bracket(t);
    // replaced[i][s] = mu(t with slot i replaced by s)
    std::vector<std::vector<Vector>> replaced(static_cast<std::size_t>(n));
    IndexTuple w = t;
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < p; ++s) {
        w[static_cast<std::size_t>(i)] = s;
        replaced[static_cast<std::size_t>(i)].push_back(prod.basis_bracket(w));
      }
      w[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
    }
    for (int l = 0; l < p; ++l) {
      Vector row = zero_vector(unknowns);
      // (D mu(e_t))_l = sum_k C_t^k d(l, k)
      for (int k = 0; k < p; ++k)
        if (!image[static_cast<std::size_t>(k)].is_zero()) row[var(l, k)] += image[static_cast<std::size_t>(k)];
      // sum_i mu(.., D e_{t_i}, ..)_l = sum_i sum_s d(s, t_i) mu(t[i <- s])_l
      for (int i = 0; i < n; ++i)
        for (int s = 0; s < p; ++s) {
          const Rational& c = replaced[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
          if (!c.is_zero()) row[var(s, t[static_cast<std::size_t>(i)])] -= c;
        }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  std::vector<Matrix> out;
  const Subspace ker = rows.empty() ? Subspace::full(unknowns) : nullspace(Matrix::from_rows(rows, unknowns));
  for (const Vector& v : ker.basis()) out.push_back(Matrix::unflatten(v, p, p));
  return out;
}

bool is_derivation(const NAryProduct& prod, const Matrix& d) {
  const int n = prod.arity(), p = prod.dim();
  if (d.rows() != p || d.cols() != p) throw DimensionMismatch("derivation must be p x p");
  std::vector<Vector> cols;
  for (int j = 0; j < p; ++j) cols.push_back(d.column(j));
  return for_each_tuple(n, p, [&](const IndexTuple& t) {
    Vector lhs = d.apply(prod.basis_bracket(t));
    std::vector<Vector> args;
    for (int i : t) args.push_back(unit_vector(p, i));
    for (int i = 0; i < n; ++i) {
      std::vector<Vector> a = args;
      a[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      lhs = lhs - bracket(prod, a);
    }
    return is_zero(lhs);
  });
}

bool derivations_closed_under_commutator(const NAryProduct& prod) {
  const std::vector<Matrix> der = derivation_algebra(prod);
  const int p = prod.dim();
  std::vector<Vector> flat;
  for (const Matrix& d : der) flat.push_back(d.flatten());
  const Subspace span(p * p, flat);
  for (std::size_t i = 0; i < der.size(); ++i)
    for (std::size_t j = i + 1; j < der.size(); ++j)
      if (!span.contains((der[i] * der[j] - der[j] * der[i]).flatten())) return false;
  return true;
}

NonsingularDerivationSearch find_nonsingular_derivation(const NAryProduct& prod, long grid_budget) {
  const int p = prod.dim();
  const std::vector<Matrix> der = derivation_algebra(prod);
  const int k = static_cast<int>(der.size());
  NonsingularDerivationSearch res;
  if (k == 0) {
    res.exact = true;
    return res;
  }

  // A vector killed by every derivation, or a proper subspace containing
  // every image, makes every combination singular.
  std::vector<Vector> stacked;
  std::vector<Vector> images;
  for (const Matrix& d : der) {
    for (int r = 0; r < p; ++r) stacked.push_back(d.row(r));
    for (int c = 0; c < p; ++c) images.push_back(d.column(c));
  }
  if (nullspace(Matrix::from_rows(stacked, p)).dim() > 0 || Subspace(p, images).dim() < p) {
    res.exact = true;
    return res;
  }

  auto combine = [&](std::span<const long> t) {
    Matrix m(p, p);
    for (int i = 0; i < k; ++i)
      if (t[static_cast<std::size_t>(i)] != 0) m = m + Rational(t[static_cast<std::size_t>(i)]) * der[static_cast<std::size_t>(i)];
    return m;
  };
  auto try_point = [&](std::span<const long> t) {
    Matrix m = combine(t);
    if (determinant(m).is_zero()) return false;
    res.found = res.exact = true;
    res.witness = std::move(m);
    return true;
  };

  // Nonzero det has degree p, so a random point in [-2^20, 2^20]^k is a
  // root with probability at most p / (2^21 + 1).
  RationalSampler rng(0x6e617279);
  std::vector<long> t(static_cast<std::size_t>(k));
  for (int trial = 0; trial < 8; ++trial) {
    for (long& x : t) x = rng.integer(-(1L << 20), 1L << 20);
    if (try_point(t)) return res;
  }

  // Exhaustive grid {0..p}^k.
  double points = 1;
  for (int i = 0; i < k && points <= static_cast<double>(grid_budget); ++i) points *= p + 1;
  if (points > static_cast<double>(grid_budget)) return res;
  std::fill(t.begin(), t.end(), 0);
  while (true) {
    if (try_point(t)) return res;
    int i = k - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == p) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  res.exact = true;
  return res;
}

bool has_nonsingular_derivation(const NAryProduct& prod) { return find_nonsingular_derivation(prod).found; }

WeightSystem diagonal_derivation_weights(const NAryProduct& prod, const std::optional<Matrix>& basis,
                                         std::vector<std::string> labels) {
  const int p = prod.dim();
  const NAryProduct q = basis ? change_basis(prod, *basis) : prod;
  if (labels.empty())
    for (int i = 1; i <= p; ++i) labels.push_back("X" + std::to_string(i));
  if (static_cast<int>(labels.size()) != p) throw DimensionMismatch("one label per basis vector");

  std::vector<Vector> rows;
  for (const auto& [key, value] : q.constants())
    for (const auto& [l, c] : value) {
      Vector row = zero_vector(p);
      for (int i : key) row[static_cast<std::size_t>(i)] += 1;
      row[static_cast<std::size_t>(l)] -= 1;
      rows.push_back(std::move(row));
    }
  WeightSystem ws;
  ws.basis_labels = std::move(labels);
  ws.constraint_matrix = Matrix::from_rows(rows, p);
  const Subspace sol = nullspace(ws.constraint_matrix);
  ws.solution_dim = sol.dim();
  ws.solutions = sol.basis();
  return ws;
}

}  // namespace nary
