#include "nary/catalog.hpp"
#include "nary/errors.hpp"
#include "nary/product.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace nary;

namespace {

Vector e(int p, int i) { return unit_vector(p, i); }

Vector random_vector(RationalSampler& rng, int p) {
  Vector v(static_cast<std::size_t>(p));
  for (auto& x : v) x = rng.rational(4, 3);
  return v;
}

}  // namespace

TEST_CASE("skew relations are canonicalized with the sorting sign") {
  const std::vector<Relation> rels = {{{1, 0, 2}, {0, 0, 0, 1}}};
  const NAryProduct prod = make_skew_product(3, 4, rels);
  REQUIRE(prod.constants().size() == 1);
  CHECK(prod.constants().begin()->first == IndexTuple{0, 1, 2});
  CHECK(prod.basis_bracket(std::vector<int>{0, 1, 2}) == Vector{0, 0, 0, -1});
  CHECK(prod.basis_bracket(std::vector<int>{2, 0, 1}) == Vector{0, 0, 0, -1});
  CHECK(prod.basis_bracket(std::vector<int>{0, 0, 1}) == Vector{0, 0, 0, 0});
}

TEST_CASE("duplicate keys are summed") {
  const std::vector<Relation> rels = {{{0, 1, 2}, {1, 0, 0}}, {{1, 0, 2}, {1, 0, 0}}, {{0, 1, 2}, {0, 2, 0}}};
  const NAryProduct prod = make_skew_product(3, 3, rels);
  CHECK(prod.basis_bracket(std::vector<int>{0, 1, 2}) == Vector{0, 2, 0});
  const std::vector<Relation> cancel = {{{0, 1, 2}, {1, 0, 0}}, {{1, 0, 2}, {1, 0, 0}}};
  CHECK(make_skew_product(3, 3, cancel).is_abelian());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(make_skew_product(3, 3, std::vector<Relation>{{{0, 0, 1}, {1, 0, 0}}}), RepeatedIndexNonzero);
  CHECK_NOTHROW(make_skew_product(3, 3, std::vector<Relation>{{{0, 0, 1}, {0, 0, 0}}}));
  CHECK_THROWS_AS(make_skew_product(3, 3, std::vector<Relation>{{{0, 1, 3}, {1, 0, 0}}}), IndexOutOfRange);
  CHECK_THROWS_AS(make_skew_product(3, 3, std::vector<Relation>{{{0, 1}, {1, 0, 0}}}), ArityMismatch);
  CHECK_THROWS_AS(make_skew_product(3, 3, std::vector<Relation>{{{0, 1, 2}, {1, 0}}}), DimensionMismatch);
  CHECK_THROWS_AS(NAryProduct(2, 3, Symmetry::cyclic), ArityMismatch);
}

TEST_CASE("skew storage agrees with the brute-force expansion") {
  RationalSampler rng(1);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 3, p = n + 1 + k % 2;
    const auto rels = gen::random_skew_relations(rng, n, p, 3);
    CHECK(oracle::same(oracle::Dense::from_product(make_skew_product(n, p, rels)), oracle::Dense::from_skew_relations(n, p, rels)));
  }
}

TEST_CASE("symmetric and cyclic storage") {
  const NAryProduct s = make_product(3, 3, Symmetry::symmetric, std::vector<Relation>{{{2, 0, 1}, {1, 0, 0}}});
  for (const auto& t : oracle::permutations(3)) CHECK(s.basis_bracket(t) == Vector{1, 0, 0});
  const NAryProduct c = make_product(3, 3, Symmetry::cyclic, std::vector<Relation>{{{1, 2, 0}, {0, 1, 0}}});
  CHECK(c.basis_bracket(std::vector<int>{0, 1, 2}) == Vector{0, 1, 0});
  CHECK(c.basis_bracket(std::vector<int>{2, 0, 1}) == Vector{0, 1, 0});
  CHECK(c.basis_bracket(std::vector<int>{1, 0, 2}) == Vector{0, 0, 0});
}

TEST_CASE("bracket on vectors") {
  const NAryProduct a4 = simple_algebra(3);
  // the A_4 basis brackets
  CHECK(bracket(a4, std::vector<Vector>{e(4, 0), e(4, 1), e(4, 2)}) == e(4, 3));
  CHECK(bracket(a4, std::vector<Vector>{e(4, 1), e(4, 2), e(4, 3)}) == scaled(-1, e(4, 0)));
  CHECK(bracket(a4, std::vector<Vector>{e(4, 0), e(4, 1), e(4, 3)}) == scaled(-1, e(4, 2)));
  CHECK_THROWS_AS(bracket(a4, std::vector<Vector>{e(4, 0), e(4, 1)}), ArityMismatch);
  CHECK_THROWS_AS(bracket(a4, std::vector<Vector>{e(4, 0), e(4, 1), e(3, 0)}), DimensionMismatch);
}

TEST_CASE("bracket is multilinear and alternating") {
  RationalSampler rng(2);
  for (int k = 0; k < 6; ++k) {
    const NAryProduct prod = gen::random_skew(rng, 3, 5, 4);
    const oracle::Dense dense = oracle::Dense::from_product(prod);
    std::vector<Vector> args = {random_vector(rng, 5), random_vector(rng, 5), random_vector(rng, 5)};
    const Vector base = bracket(prod, args);
    CHECK(base == dense.eval(args));
    // swap two slots
    std::swap(args[0], args[2]);
    CHECK(bracket(prod, args) == scaled(-1, base));
    std::swap(args[0], args[2]);
    // additivity and homogeneity in slot 1
    const Vector extra = random_vector(rng, 5);
    const Rational s = rng.nonzero_rational();
    std::vector<Vector> sum = args;
    sum[1] = args[1] + scaled(s, extra);
    std::vector<Vector> only = args;
    only[1] = extra;
    CHECK(bracket(prod, sum) == base + scaled(s, bracket(prod, only)));
    // repeated argument
    args[1] = args[0];
    CHECK(is_zero(bracket(prod, args)));
  }
}

TEST_CASE("adjoint") {
  const NAryProduct f4 = filiform_model(3, 4);
  const Matrix ad = adjoint(f4, std::vector<Vector>{e(4, 0), e(4, 1)}).matrix();
  Matrix expected(4, 4);
  expected(3, 2) = 1;
  CHECK(ad == expected);
  CHECK(basis_adjoint(f4, std::vector<int>{0, 1}).matrix() == expected);
  CHECK(adjoint(simple_algebra(3), std::vector<Vector>{e(4, 2), e(4, 2)}).matrix().is_zero());
  // [X1,X2,X3] = X2: ad(X1,X3) X2 = [X1,X3,X2] = -X2
  const Matrix c = adjoint(counterexample_algebra(3), std::vector<Vector>{e(3, 0), e(3, 2)}).matrix();
  CHECK(c(1, 1) == Rational(-1));
  CHECK_THROWS_AS(adjoint(f4, std::vector<Vector>{e(4, 0)}), ArityMismatch);
}

TEST_CASE("product subspace") {
  const Subspace v4 = Subspace::full(4);
  const std::vector<Subspace> all4(3, v4);
  CHECK(product_subspace(abelian(3, 4), all4).dim() == 0);
  CHECK(product_subspace(simple_algebra(3), all4) == v4);
  CHECK(product_subspace(filiform_model(3, 4), all4) == Subspace(4, {e(4, 3)}));
  CHECK_THROWS_AS(product_subspace(simple_algebra(3), std::vector<Subspace>(3, Subspace::full(5))), DimensionMismatch);
}

TEST_CASE("product subspace is monotone") {
  RationalSampler rng(8);
  const NAryProduct prod = gen::random_skew(rng, 3, 5, 5);
  const Subspace small(5, {e(5, 0), e(5, 1)});
  const Subspace big(5, {e(5, 0), e(5, 1), e(5, 3)});
  const std::vector<Subspace> a = {small, Subspace::full(5), small};
  const std::vector<Subspace> b = {big, Subspace::full(5), big};
  CHECK(product_subspace(prod, a).is_subspace_of(product_subspace(prod, b)));
}

TEST_CASE("subalgebras") {
  const NAryProduct a4 = simple_algebra(3);
  CHECK(is_subalgebra(a4, Subspace::zero(4)));
  CHECK(is_subalgebra(a4, Subspace::full(4)));
  // two vectors cannot fill three alternating slots
  CHECK(is_subalgebra(a4, Subspace(4, {e(4, 0), e(4, 1)})));
  CHECK(!is_subalgebra(a4, Subspace(4, {e(4, 0), e(4, 1), e(4, 2)})));
}

TEST_CASE("ideals") {
  CHECK(is_ideal(simple_algebra(3), Subspace::full(4)));
  CHECK(is_ideal(filiform_model(3, 4), Subspace(4, {e(4, 3)})));
  const NAryProduct a4 = simple_algebra(3);
  for (int mask = 1; mask < 15; ++mask) {
    std::vector<Vector> span;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) span.push_back(e(4, i));
    CHECK(!is_ideal(a4, Subspace(4, span)));
  }
  RationalSampler rng(4);
  for (int k = 0; k < 10; ++k) {
    Matrix f(1, 4);
    for (int j = 0; j < 4; ++j) f(0, j) = rng.rational();
    if (f.is_zero()) continue;
    CHECK(!is_ideal(a4, nullspace(f)));
  }
}

TEST_CASE("morphisms") {
  const NAryProduct a4 = simple_algebra(3);
  CHECK(is_morphism(a4, a4, LinearMap(Matrix::identity(4))));
  CHECK(is_morphism(a4, filiform_model(3, 5), LinearMap(Matrix(5, 4))));
  Matrix s = Matrix::identity(4);
  s(3, 3) = 2;
  CHECK(!is_morphism(filiform_model(3, 4), filiform_model(3, 4), LinearMap(s)));
  CHECK_THROWS_AS(is_morphism(a4, simple_algebra(2), LinearMap(Matrix(3, 4))), ArityMismatch);
}

TEST_CASE("kernel of a morphism is an ideal") {
  // projection of filiform(3,5) onto filiform(3,4): kill X5
  Matrix f(4, 5);
  for (int i = 0; i < 4; ++i) f(i, i) = 1;
  const LinearMap phi(f);
  REQUIRE(is_morphism(filiform_model(3, 5), filiform_model(3, 4), phi));
  CHECK(is_ideal(filiform_model(3, 5), nullspace(f)));
  // quotient of the padded counterexample by its central direction
  const NAryProduct padded = gen::padded(counterexample_algebra(3), 4);
  Matrix g(3, 4);
  for (int i = 0; i < 3; ++i) g(i, i) = 1;
  REQUIRE(is_morphism(padded, counterexample_algebra(3), LinearMap(g)));
  CHECK(is_ideal(padded, nullspace(g)));
}

TEST_CASE("change of basis") {
  RationalSampler rng(9);
  const NAryProduct prod = gen::random_skew(rng, 3, 4, 3);
  const Matrix basis = gen::random_invertible(rng, 4);
  const NAryProduct moved = change_basis(prod, basis);
  // basis (the new -> old map) is a morphism from moved to prod
  CHECK(is_morphism(moved, prod, LinearMap(basis)));
  CHECK(change_basis(moved, inverse(basis)) == prod);
  CHECK_THROWS_AS(change_basis(prod, Matrix::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4)),
                  std::domain_error);
}
