#include "nary/catalog.hpp"
#include "nary/errors.hpp"
#include "nary/exterior.hpp"
#include "nary/identities.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace nary;

namespace {

ExteriorForm w(int p, std::vector<int> idx, const Rational& c = 1) { return ExteriorForm::monomial(p, idx, c); }

ExteriorForm random_form(RationalSampler& rng, int p, int k) {
  ExteriorForm f(p, k);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(static_cast<int>(rng.integer(0, p - 1)));
    f.add_term(idx, rng.rational(3, 2));
  }
  return f;
}

/// Checks coefficient(d(d w_l), T) == kappa * (sh defect at T)_l on every
/// increasing (2n-1)-tuple; returns false on the first mismatch.
bool mc_matches_sh(const NAryProduct& prod, ExtensionSign rule, const Rational& kappa) {
  const oracle::Dense d = oracle::Dense::from_product(prod);
  const int n = prod.arity(), p = prod.dim();
  for (int l = 0; l < p; ++l) {
    const ExteriorForm dd = d_extend(prod, d_one(prod, l), rule);
    for (const auto& t : oracle::all_tuples(2 * n - 1, p)) {
      if (!oracle::strictly_increasing(t)) continue;
      if (dd.coefficient(t) != kappa * oracle::sh_defect(d, t)[static_cast<std::size_t>(l)]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("wedge basics") {
  const ExteriorForm w1 = ExteriorForm::basis_one_form(3, 0), w2 = ExteriorForm::basis_one_form(3, 1);
  CHECK(wedge(w1, w2) == w(3, {0, 1}));
  CHECK(wedge(w2, w1) == w(3, {0, 1}, -1));
  CHECK(wedge(w1, w1).is_zero());
  CHECK(wedge(w1, w2).str() == "w1^w2");
  CHECK(w(3, {1, 0}, 2).str() == "-2 w1^w2");
  CHECK_THROWS_AS(wedge(w1, ExteriorForm::basis_one_form(4, 0)), DimensionMismatch);
  CHECK_THROWS_AS(w(3, {0, 3}), IndexOutOfRange);
}

TEST_CASE("wedge is graded commutative and associative") {
  RationalSampler rng(3);
  for (int k = 0; k < 10; ++k) {
    const int da = 1 + k % 3, db = 1 + (k / 3) % 3;
    const ExteriorForm a = random_form(rng, 6, da), b = random_form(rng, 6, db), c = random_form(rng, 6, 2);
    const Rational s = (da * db) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == s * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("d on one-forms") {
  for (int l = 0; l < 4; ++l) CHECK(d_one(abelian(3, 4), l).is_zero());
  const NAryProduct f4 = filiform_model(3, 4);
  CHECK(d_one(f4, 3) == w(4, {0, 1, 2}));
  for (int l = 0; l < 3; ++l) CHECK(d_one(f4, l).is_zero());
  // [v2,v3,v4] = -v1 in A_4
  CHECK(d_one(simple_algebra(3), 0) == w(4, {1, 2, 3}, -1));
  CHECK(d_one(simple_algebra(3), 3) == w(4, {0, 1, 2}));
  CHECK_THROWS_AS(d_one(f4, 4), IndexOutOfRange);
  RationalSampler rng(1);
  CHECK_THROWS_AS(d_one(gen::random_general(rng, 3, 3, 2), 0), NotSkew);
}

TEST_CASE("d is linear in the structure constants") {
  RationalSampler rng(5);
  const auto ra = gen::random_skew_relations(rng, 3, 5, 3), rb = gen::random_skew_relations(rng, 3, 5, 3);
  const Rational s = rng.nonzero_rational();
  std::vector<Relation> combo = ra;
  for (const Relation& r : rb) combo.push_back({r.indices, scaled(s, r.value)});
  const NAryProduct a = make_skew_product(3, 5, ra), b = make_skew_product(3, 5, rb), c = make_skew_product(3, 5, combo);
  for (int l = 0; l < 5; ++l) CHECK(d_one(c, l) == d_one(a, l) + s * d_one(b, l));
}

TEST_CASE("d on n-forms") {
  CHECK(d_extend(abelian(3, 5), w(5, {0, 1, 2})).is_zero());
  const NAryProduct f4 = filiform_model(3, 4);
  CHECK(d_extend(f4, d_one(f4, 3)).is_zero());
  const NAryProduct f6 = filiform_model(3, 6);
  for (int l = 0; l < 6; ++l) CHECK(d_extend(f6, d_one(f6, l)).is_zero());
  CHECK_THROWS_AS(d_extend(f4, w(4, {0, 1})), DimensionMismatch);
}

TEST_CASE("d(d w_l) coefficients are the sh-Jacobi components") {
  RationalSampler rng(7);
  for (int k = 0; k < 6; ++k) {
    const NAryProduct prod = gen::random_skew(rng, 3, 5 + k % 2, 3);
    CHECK(mc_matches_sh(prod, ExtensionSign::graded, 1));
    CHECK(mc_matches_sh(prod, ExtensionSign::all_plus, 1));
  }
  for (int k = 0; k < 4; ++k) {
    const NAryProduct bin = gen::random_skew(rng, 2, 4, 3);
    CHECK(mc_matches_sh(bin, ExtensionSign::graded, 1));
    const NAryProduct quad = gen::random_skew(rng, 4, 7, 3);
    CHECK(mc_matches_sh(quad, ExtensionSign::graded, 1));
  }
}

TEST_CASE("the all-plus rule breaks for even arity") {
  // so(3) plus a central line, in random bases: every d(d w) vanishes with
  // graded signs, while all-plus signs leave nonzero coefficients
  RationalSampler rng(4);
  int all_plus_failures = 0;
  for (int k = 0; k < 6; ++k) {
    const NAryProduct lie = gen::disguised(rng, gen::padded(simple_algebra(2), 4));
    REQUIRE(check_sh_jacobi(lie).passed());
    CHECK(maurer_cartan_check(lie, ExtensionSign::graded).passed());
    CHECK(mc_matches_sh(lie, ExtensionSign::graded, 1));
    all_plus_failures += maurer_cartan_check(lie, ExtensionSign::all_plus).passed() ? 0 : 1;
  }
  CHECK(all_plus_failures > 0);
  for (int k = 0; k < 4; ++k) {
    const NAryProduct odd = gen::random_skew(rng, 3, 5, 4);
    CHECK(d_extend(odd, d_one(odd, 0), ExtensionSign::all_plus) == d_extend(odd, d_one(odd, 0), ExtensionSign::graded));
  }
}

TEST_CASE("Maurer-Cartan check") {
  const MaurerCartanResult a4 = maurer_cartan_check(simple_algebra(3));
  CHECK(a4.passed());
  CHECK(a4.vacuous);
  CHECK(maurer_cartan_check(filiform5(1, 2)).passed());
  std::vector<Relation> rels;
  const NAryProduct base = filiform5(1, 2);
  for (const auto& [key, value] : base.constants()) {
    Vector v = zero_vector(5);
    for (const auto& [j, c] : value) v[static_cast<std::size_t>(j)] = c;
    rels.push_back({key, v});
  }
  rels.push_back({{0, 3, 4}, {1, 0, 0, 0, 0}});
  const NAryProduct broken = make_skew_product(3, 5, rels);
  const MaurerCartanResult mc = maurer_cartan_check(broken);
  const CheckResult sh = check_sh_jacobi(broken);
  REQUIRE(!mc.passed());
  REQUIRE(!sh.passed());
  CHECK(mc.witness->tuple == sh.witness->tuple);
  CHECK(mc.witness->defect.coefficient(mc.witness->tuple) == sh.witness->defect[static_cast<std::size_t>(mc.witness->l)]);
  RationalSampler rng(2);
  CHECK_THROWS_AS(maurer_cartan_check(gen::random_general(rng, 3, 5, 1)), NotSkew);
}

TEST_CASE("Maurer-Cartan agrees with sh-Jacobi on random products") {
  for (const NAryProduct& prod : gen::ternary_mix(77, 20, 5, 7)) {
    const MaurerCartanResult mc = maurer_cartan_check(prod);
    const CheckResult sh = check_sh_jacobi(prod);
    CHECK(mc.passed() == sh.passed());
    if (!mc.passed() && !sh.passed()) CHECK(mc.witness->tuple == sh.witness->tuple);
    if (check_filippov(prod).passed()) CHECK(mc.passed());
  }
}
