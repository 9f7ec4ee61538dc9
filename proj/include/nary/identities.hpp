#pragma once

#include "nary/permutation.hpp"
#include "nary/product.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace nary {

enum class Identity {
  commutative,
  filippov,
  n_leibniz,
  sh_jacobi,
  partial_assoc,
  total_assoc,
  sigma_partial_assoc,
  sigma_total_assoc,
  lie_admissible_3,
};

/// CLI names: commutative, filippov, n-leibniz, sh-jacobi, partial-assoc,
/// total-assoc, sigma-partial, sigma-total, 3lie-admissible.
std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
bool needs_sigma(Identity id);

/// A basis tuple on which an identity fails, with the nonzero defect.
///
/// Tuple layouts (0-based indices):
///  - commutative: the n arguments;
///  - filippov, n-leibniz: u_1..u_n followed by v_1..v_{n-1};
///  - everything else: the 2n-1 arguments of the nested products.
/// `position` is the nesting slot q for the (sigma-)total associativity
/// checks, where each q gives a separate equation.
struct Witness {
  Identity identity;
  std::optional<Permutation> sigma;
  IndexTuple tuple;
  std::optional<int> position;
  Vector defect;
};

struct CheckResult {
  std::optional<Witness> witness;
  /// No basis tuple exists for the identity (e.g. dim < 2n-1 for sh-Jacobi).
  bool vacuous = false;

  bool passed() const { return !witness.has_value(); }
};

/// sum_s sign(s) mu(v_{s(1)}, ..., v_{s(n)}) on increasing basis tuples.
CheckResult check_commutative(const NAryProduct& prod);
/// [[u_1..u_n], v_1..v_{n-1}] = sum_i [u_1, .., [u_i, v_1..v_{n-1}], .., u_n].
/// Throws NotSkew.
CheckResult check_filippov(const NAryProduct& prod);
/// mu(v_1..v_{n-1}, mu(u)) = sum_i mu(u_1, .., mu(v_1..v_{n-1}, u_i), .., u_n).
CheckResult check_n_leibniz(const NAryProduct& prod);
/// Shuffle-summed Jacobi identity over Sh(n, n-1). Throws NotSkew.
CheckResult check_sh_jacobi(const NAryProduct& prod);
CheckResult check_partial_assoc(const NAryProduct& prod);
CheckResult check_total_assoc(const NAryProduct& prod);
CheckResult check_sigma_partial_assoc(const NAryProduct& prod, const Permutation& sigma);
CheckResult check_sigma_total_assoc(const NAryProduct& prod, const Permutation& sigma);

/// Skew product [v_1..v_n] = sum_s sign(s) mu(v_{s(1)}, ..., v_{s(n)}).
NAryProduct antisymmetrize(const NAryProduct& prod);

/// Ternary products only. Evaluates the S_5-antisymmetrized sum of the
/// three bracketings and cross-checks it tuple by tuple against the
/// sh-Jacobi defect of antisymmetrize(prod); throws InternalInconsistency
/// on any disagreement.
CheckResult check_3lie_admissible(const NAryProduct& prod);

/// Defect of `id` at one basis tuple. `position` selects the equation for
/// the (sigma-)total checks; `sigma` is required by the sigma checks.
Vector identity_defect(const NAryProduct& prod, Identity id, std::span<const int> tuple,
                       std::optional<int> position = std::nullopt,
                       const std::optional<Permutation>& sigma = std::nullopt);

/// Recomputes the defect recorded in a witness.
Vector reevaluate(const NAryProduct& prod, const Witness& w);

/// Dispatch by identity name.
CheckResult run_identity(const NAryProduct& prod, Identity id, const std::optional<Permutation>& sigma = std::nullopt);

}  // namespace nary
