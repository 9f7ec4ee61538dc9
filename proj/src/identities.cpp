#include "nary/identities.hpp"

#include "nary/errors.hpp"
#include "nary/group_algebra.hpp"

#include <string>

namespace nary {

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::commutative: return "commutative";
    case Identity::filippov: return "filippov";
    case Identity::n_leibniz: return "n-leibniz";
    case Identity::sh_jacobi: return "sh-jacobi";
    case Identity::partial_assoc: return "partial-assoc";
    case Identity::total_assoc: return "total-assoc";
    case Identity::sigma_partial_assoc: return "sigma-partial";
    case Identity::sigma_total_assoc: return "sigma-total";
    case Identity::lie_admissible_3: return "3lie-admissible";
  }
  return "";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity id : {Identity::commutative, Identity::filippov, Identity::n_leibniz, Identity::sh_jacobi,
                      Identity::partial_assoc, Identity::total_assoc, Identity::sigma_partial_assoc,
                      Identity::sigma_total_assoc, Identity::lie_admissible_3})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool needs_sigma(Identity id) {
  return id == Identity::sigma_partial_assoc || id == Identity::sigma_total_assoc;
}

namespace {

void require_skew(const NAryProduct& prod, std::string_view what) {
  if (prod.symmetry() != Symmetry::skew) throw NotSkew(std::string(what) + " requires a skew product");
}

void require_sigma(const NAryProduct& prod, const std::optional<Permutation>& sigma) {
  if (!sigma) throw BadParams("this identity needs a permutation sigma");
  if (sigma->degree() != prod.arity())
    throw InvalidPermutation("sigma must permute " + std::to_string(prod.arity()) + " points");
}

// mu(t_0, ..., mu(Phi_tau(t_q, ..., t_{q+n-1})), ..., t_{2n-2}) where
// Phi_tau puts argument tau^{-1}(k) into inner slot k.
void accumulate_twisted(const NAryProduct& prod, std::span<const int> tuple, int q, const Permutation& tau,
                        const Rational& scale, Vector& out) {
  if (tau.is_identity()) {
    prod.accumulate_nested(tuple, q, scale, out);
    return;
  }
  const Permutation inv = tau.inverse();
  IndexTuple t(tuple.begin(), tuple.end());
  for (int k = 0; k < prod.arity(); ++k) t[static_cast<std::size_t>(q + k)] = tuple[static_cast<std::size_t>(q + inv(k))];
  prod.accumulate_nested(t, q, scale, out);
}

Vector commutative_defect(const NAryProduct& prod, std::span<const int> t) {
  Vector out = zero_vector(prod.dim());
  IndexTuple args(t.size());
  for (const Permutation& s : all_permutations(prod.arity())) {
    for (int i = 0; i < prod.arity(); ++i) args[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(s(i))];
    prod.accumulate_basis(args, s.sign(), out);
  }
  return out;
}

Vector filippov_defect(const NAryProduct& prod, std::span<const int> t) {
  const int n = prod.arity();
  Vector out = zero_vector(prod.dim());
  prod.accumulate_nested(t, 0, 1, out);
  // u_1..u_{i-1}, (u_i, v_1..v_{n-1}), u_{i+1}..u_n with the inner product in slot i-1
  IndexTuple w;
  for (int i = 0; i < n; ++i) {
    w.assign(t.begin(), t.begin() + i);
    w.push_back(t[static_cast<std::size_t>(i)]);
    w.insert(w.end(), t.begin() + n, t.end());
    w.insert(w.end(), t.begin() + i + 1, t.begin() + n);
    prod.accumulate_nested(w, i, -1, out);
  }
  return out;
}

Vector leibniz_defect(const NAryProduct& prod, std::span<const int> t) {
  const int n = prod.arity();
  Vector out = zero_vector(prod.dim());
  IndexTuple w(t.begin() + n, t.end());
  w.insert(w.end(), t.begin(), t.begin() + n);
  prod.accumulate_nested(w, n - 1, 1, out);
  for (int i = 0; i < n; ++i) {
    w.assign(t.begin(), t.begin() + i);
    w.insert(w.end(), t.begin() + n, t.end());
    w.push_back(t[static_cast<std::size_t>(i)]);
    w.insert(w.end(), t.begin() + i + 1, t.begin() + n);
    prod.accumulate_nested(w, i, -1, out);
  }
  return out;
}

Vector sh_defect(const NAryProduct& prod, std::span<const int> t) {
  const int n = prod.arity();
  Vector out = zero_vector(prod.dim());
  IndexTuple w(t.size());
  for (const Permutation& s : shuffles(n, n - 1)) {
    for (std::size_t k = 0; k < t.size(); ++k) w[k] = t[static_cast<std::size_t>(s(static_cast<int>(k)))];
    prod.accumulate_nested(w, 0, s.sign(), out);
  }
  return out;
}

Vector sigma_partial_defect(const NAryProduct& prod, std::span<const int> t, const Permutation& sigma) {
  const int n = prod.arity();
  const int eps = sigma.sign() == 1 ? 0 : 1;
  Vector out = zero_vector(prod.dim());
  for (int q = 0; q < n; ++q) {
    const int exponent = q * (n - 1) + n * q * eps;
    accumulate_twisted(prod, t, q, sigma.pow(static_cast<long>(n) * q), exponent % 2 == 0 ? 1 : -1, out);
  }
  return out;
}

Vector sigma_total_defect(const NAryProduct& prod, std::span<const int> t, const Permutation& sigma, int q) {
  const int n = prod.arity();
  if (q < 0 || q >= n) throw BadParams("nesting position out of range");
  Vector out = zero_vector(prod.dim());
  prod.accumulate_nested(t, 0, 1, out);
  accumulate_twisted(prod, t, q, sigma.pow(static_cast<long>(n) * q), -1, out);
  return out;
}

Vector lie_admissible_defect(const NAryProduct& prod, std::span<const int> t) {
  Vector out = zero_vector(prod.dim());
  IndexTuple w(t.size());
  for (const Permutation& s : all_permutations(5)) {
    for (int k = 0; k < 5; ++k) w[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(s(k))];
    for (int q = 0; q < 3; ++q) prod.accumulate_nested(w, q, s.sign(), out);
  }
  return out;
}

// Lexicographically first tuple (in the enumeration order of `each`) with
// a nonzero defect.
template <class Enumerate, class Defect>
CheckResult first_failure(Identity id, Enumerate&& each, Defect&& defect) {
  CheckResult res;
  res.vacuous = true;
  each([&](const IndexTuple& t) {
    res.vacuous = false;
    Vector d = defect(t);
    if (is_zero(d)) return true;
    res.witness = Witness{id, std::nullopt, t, std::nullopt, std::move(d)};
    return false;
  });
  return res;
}

auto increasing(int k, int p) {
  return [k, p](auto&& fn) { for_each_increasing(k, p, fn); };
}

auto all_tuples(int k, int p) {
  return [k, p](auto&& fn) { for_each_tuple(k, p, fn); };
}

// u increasing, v increasing; concatenated u ++ v in lexicographic order.
auto split_increasing(int n, int p) {
  return [n, p](auto&& fn) {
    for_each_increasing(n, p, [&](const IndexTuple& u) {
      return for_each_increasing(n - 1, p, [&](const IndexTuple& v) {
        IndexTuple t = u;
        t.insert(t.end(), v.begin(), v.end());
        return fn(t);
      });
    });
  };
}

CheckResult check_total_like(const NAryProduct& prod, Identity id, const Permutation& sigma) {
  const int n = prod.arity();
  CheckResult res;
  res.vacuous = true;
  for_each_tuple(2 * n - 1, prod.dim(), [&](const IndexTuple& t) {
    res.vacuous = false;
    for (int q = 1; q < n; ++q) {
      Vector d = sigma_total_defect(prod, t, sigma, q);
      if (!is_zero(d)) {
        res.witness = Witness{id, std::nullopt, t, q, std::move(d)};
        return false;
      }
    }
    return true;
  });
  return res;
}

}  // namespace

CheckResult check_commutative(const NAryProduct& prod) {
  return first_failure(Identity::commutative, increasing(prod.arity(), prod.dim()),
                       [&](const IndexTuple& t) { return commutative_defect(prod, t); });
}

CheckResult check_filippov(const NAryProduct& prod) {
  require_skew(prod, "check_filippov");
  return first_failure(Identity::filippov, split_increasing(prod.arity(), prod.dim()),
                       [&](const IndexTuple& t) { return filippov_defect(prod, t); });
}

CheckResult check_n_leibniz(const NAryProduct& prod) {
  const int n = prod.arity(), p = prod.dim();
  auto defect = [&](const IndexTuple& t) { return leibniz_defect(prod, t); };
  // Both sides alternate in u and in v when mu is skew.
  if (prod.symmetry() == Symmetry::skew) return first_failure(Identity::n_leibniz, split_increasing(n, p), defect);
  return first_failure(Identity::n_leibniz, all_tuples(2 * n - 1, p), defect);
}

CheckResult check_sh_jacobi(const NAryProduct& prod) {
  require_skew(prod, "check_sh_jacobi");
  return first_failure(Identity::sh_jacobi, increasing(2 * prod.arity() - 1, prod.dim()),
                       [&](const IndexTuple& t) { return sh_defect(prod, t); });
}

CheckResult check_partial_assoc(const NAryProduct& prod) {
  const Permutation id = Permutation::identity(prod.arity());
  return first_failure(Identity::partial_assoc, all_tuples(2 * prod.arity() - 1, prod.dim()),
                       [&](const IndexTuple& t) { return sigma_partial_defect(prod, t, id); });
}

CheckResult check_total_assoc(const NAryProduct& prod) {
  return check_total_like(prod, Identity::total_assoc, Permutation::identity(prod.arity()));
}

CheckResult check_sigma_partial_assoc(const NAryProduct& prod, const Permutation& sigma) {
  require_sigma(prod, sigma);
  CheckResult res = first_failure(Identity::sigma_partial_assoc, all_tuples(2 * prod.arity() - 1, prod.dim()),
                                  [&](const IndexTuple& t) { return sigma_partial_defect(prod, t, sigma); });
  if (res.witness) res.witness->sigma = sigma;
  return res;
}

CheckResult check_sigma_total_assoc(const NAryProduct& prod, const Permutation& sigma) {
  require_sigma(prod, sigma);
  CheckResult res = check_total_like(prod, Identity::sigma_total_assoc, sigma);
  if (res.witness) res.witness->sigma = sigma;
  return res;
}

NAryProduct antisymmetrize(const NAryProduct& prod) {
  const int n = prod.arity(), p = prod.dim();
  std::vector<Relation> rels;
  for_each_increasing(n, p, [&](const IndexTuple& t) {
    Vector v = commutative_defect(prod, t);
    if (!is_zero(v)) rels.push_back({t, std::move(v)});
    return true;
  });
  return make_skew_product(n, p, rels);
}

CheckResult check_3lie_admissible(const NAryProduct& prod) {
  if (prod.arity() != 3) throw ArityMismatch("3-Lie admissibility is defined for ternary products");
  const NAryProduct bracket_product = antisymmetrize(prod);
  CheckResult res;
  res.vacuous = true;
  for_each_increasing(5, prod.dim(), [&](const IndexTuple& t) {
    res.vacuous = false;
    Vector direct = lie_admissible_defect(prod, t);
    Vector via_bracket = sh_defect(bracket_product, t);
    if (direct != via_bracket)
      throw InternalInconsistency("3-Lie admissibility routes disagree on (" + format_tuple(t) + ")");
    if (!res.witness && !is_zero(direct)) res.witness = Witness{Identity::lie_admissible_3, std::nullopt, t, std::nullopt, std::move(direct)};
    return true;
  });
  return res;
}

Vector identity_defect(const NAryProduct& prod, Identity id, std::span<const int> tuple, std::optional<int> position,
                       const std::optional<Permutation>& sigma) {
  const int n = prod.arity();
  const std::size_t expected = id == Identity::commutative ? static_cast<std::size_t>(n) : static_cast<std::size_t>(2 * n - 1);
  if (tuple.size() != expected) throw ArityMismatch("tuple length does not fit the identity");
  switch (id) {
    case Identity::commutative: return commutative_defect(prod, tuple);
    case Identity::filippov: return filippov_defect(prod, tuple);
    case Identity::n_leibniz: return leibniz_defect(prod, tuple);
    case Identity::sh_jacobi: return sh_defect(prod, tuple);
    case Identity::partial_assoc: return sigma_partial_defect(prod, tuple, Permutation::identity(n));
    case Identity::total_assoc:
      return sigma_total_defect(prod, tuple, Permutation::identity(n), position.value_or(1));
    case Identity::sigma_partial_assoc:
      require_sigma(prod, sigma);
      return sigma_partial_defect(prod, tuple, *sigma);
    case Identity::sigma_total_assoc:
      require_sigma(prod, sigma);
      return sigma_total_defect(prod, tuple, *sigma, position.value_or(1));
    case Identity::lie_admissible_3:
      if (n != 3) throw ArityMismatch("3-Lie admissibility is defined for ternary products");
      return lie_admissible_defect(prod, tuple);
  }
  return {};
}

Vector reevaluate(const NAryProduct& prod, const Witness& w) {
  return identity_defect(prod, w.identity, w.tuple, w.position, w.sigma);
}

CheckResult run_identity(const NAryProduct& prod, Identity id, const std::optional<Permutation>& sigma) {
  switch (id) {
    case Identity::commutative: return check_commutative(prod);
    case Identity::filippov: return check_filippov(prod);
    case Identity::n_leibniz: return check_n_leibniz(prod);
    case Identity::sh_jacobi: return check_sh_jacobi(prod);
    case Identity::partial_assoc: return check_partial_assoc(prod);
    case Identity::total_assoc: return check_total_assoc(prod);
    case Identity::sigma_partial_assoc:
      require_sigma(prod, sigma);
      return check_sigma_partial_assoc(prod, *sigma);
    case Identity::sigma_total_assoc:
      require_sigma(prod, sigma);
      return check_sigma_total_assoc(prod, *sigma);
    case Identity::lie_admissible_3: return check_3lie_admissible(prod);
  }
  return {};
}

}  // namespace nary
