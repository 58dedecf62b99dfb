#include <doctest.h>

#include "sclif/linalg.hpp"
#include "sclif/minpoly.hpp"
#include "sclif/polynomial.hpp"

using namespace sclif;

namespace {

Scalar Q(long n, long d = 1) { return Scalar::rational(n, d); }
Scalar Zi(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }

Polynomial poly(std::initializer_list<long> c, Field f = Field::Real) {
  std::vector<Scalar> v;
  for (long x : c) v.push_back(Scalar(x, f));
  return Polynomial(v, f);
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and Q(i)") {
  CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
  CHECK(Q(3, 4) * Q(2, 3) == Q(1, 2));
  CHECK(Q(3, 4) / Q(3, 8) == Q(2));
  CHECK(Q(-2, 4) == Q(1, -2));
  CHECK(Zi(1, 1) * Zi(1, -1) == Zi(2, 0));
  CHECK(Scalar::imag_unit() * Scalar::imag_unit() == Scalar(-1L, Field::Complex));
  CHECK(Zi(3, 4).inverse() == Scalar(mpq_class(3, 25), mpq_class(-4, 25)));
  CHECK_THROWS_AS(Q(1) + Zi(1, 0), Error);
  CHECK_THROWS_AS(Q(1) / Q(0), Error);
  CHECK(Scalar::parse("3/2", Field::Real) == Q(3, 2));
  CHECK(Scalar::parse("1+2*i", Field::Complex) == Zi(1, 2));
  CHECK(Scalar::parse("-i", Field::Complex) == Zi(0, -1));
  CHECK(Zi(1, -2).str() == "1-2*i");
  CHECK(Q(-7, 3).str() == "-7/3");
}

TEST_CASE("field mismatch carries its code") {
  try {
    (void)(Q(1) * Zi(0, 1));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
}

TEST_CASE("rref, rank, nullspace and solve") {
  Matrix m = Matrix::from_rows({{Q(1), Q(2), Q(3)}, {Q(2), Q(4), Q(6)}, {Q(1), Q(0), Q(1)}}, Field::Real);
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  auto mv = m * ns[0];
  for (const auto& s : mv) CHECK(s.is_zero());

  Matrix a = Matrix::from_rows({{Q(2), Q(1)}, {Q(1), Q(3)}}, Field::Real);
  auto r = solve(a, {Q(3), Q(5)});
  REQUIRE(std::holds_alternative<Solution>(r));
  CHECK(std::get<Solution>(r).x == std::vector<Scalar>{Q(4, 5), Q(7, 5)});
  CHECK(std::holds_alternative<NoSolution>(solve(Matrix::from_rows({{Q(1)}, {Q(1)}}, Field::Real), {Q(1), Q(2)})));
  CHECK(std::holds_alternative<SolutionSpace>(solve(m, {Q(1), Q(2), Q(0)})));

  Matrix id = Matrix::identity(3);
  CHECK(id * m == m);
  CHECK((m - m).is_zero());
}

TEST_CASE("inertia of symmetric forms") {
  CHECK(inertia(Matrix::from_rows({{Q(1), Q(0)}, {Q(0), Q(-1)}}, Field::Real)) == std::make_pair(std::size_t{1}, std::size_t{1}));
  // Hyperbolic plane has a zero diagonal.
  CHECK(inertia(Matrix::from_rows({{Q(0), Q(1)}, {Q(1), Q(0)}}, Field::Real)) == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(inertia(Matrix::from_rows({{Q(2), Q(1)}, {Q(1), Q(2)}}, Field::Real)) == std::make_pair(std::size_t{2}, std::size_t{0}));
  CHECK(inertia(Matrix::from_rows({{Q(-1), Q(0), Q(0)}, {Q(0), Q(-4), Q(0)}, {Q(0), Q(0), Q(0)}}, Field::Real)) ==
        std::make_pair(std::size_t{0}, std::size_t{2}));
}

TEST_CASE("echelon basis coordinates") {
  EchelonBasis eb(Field::Real);
  CHECK(eb.add({{0, Q(1)}, {2, Q(1)}}));
  CHECK(eb.add({{1, Q(1)}}));
  CHECK_FALSE(eb.add({{0, Q(2)}, {1, Q(3)}, {2, Q(2)}}));
  auto c = eb.coordinates({{0, Q(2)}, {1, Q(3)}, {2, Q(2)}});
  REQUIRE(c);
  CHECK(*c == SparseVec{{0, Q(2)}, {1, Q(3)}});
  CHECK_FALSE(eb.contains({{2, Q(1)}}));
}

TEST_CASE("polynomial arithmetic and gcd") {
  Polynomial a = poly({-1, 0, 1});  // t^2 - 1
  Polynomial b = poly({1, 1});      // t + 1
  auto dm = divmod(a, b);
  CHECK(dm.quotient == poly({-1, 1}));
  CHECK(dm.remainder.is_zero());
  CHECK(gcd(a, poly({1, 2, 1})) == b);
  auto bz = ext_gcd(poly({-2, 1}), poly({-3, 1}));
  CHECK(bz.s * poly({-2, 1}) + bz.t * poly({-3, 1}) == bz.g);
  CHECK(bz.g.degree() == 0);
  CHECK(squarefree_part(poly({1, 2, 1})) == b);
  CHECK(poly({1, 0, 3}).derivative() == poly({0, 6}));
  CHECK(a.evaluate(Q(3)) == Q(8));
}

TEST_CASE("roots and quadratic factors are exact") {
  auto r = roots_in_field(poly({-6, 1, 1}));  // (t-2)(t+3)
  CHECK(r.size() == 2);
  for (const auto& x : r) CHECK(poly({-6, 1, 1}).evaluate(x).is_zero());
  CHECK(roots_in_field(poly({1, 0, 1})).empty());
  auto rc = roots_in_field(poly({1, 0, 1}, Field::Complex));
  CHECK(rc.size() == 2);
  CHECK(roots_in_field(Polynomial({Q(-1, 4), Q(0), Q(1)}, Field::Real)).size() == 2);
  CHECK(root_multiplicity(poly({1, -2, 1}), Q(1)) == 2);

  // (t^2+1)(t-1)
  auto qf = quadratic_factor(poly({-1, 1, -1, 1}));
  REQUIRE(qf);
  CHECK(*qf == poly({1, 0, 1}));
  // (t^2+1)^2 (t^2+2)
  Polynomial p = poly({1, 0, 1}) * poly({1, 0, 1}) * poly({2, 0, 1});
  auto q2 = quadratic_factor(p);
  REQUIRE(q2);
  CHECK(divmod(p, *q2).remainder.is_zero());
  CHECK_FALSE(quadratic_factor(poly({1, 0, 1})));
}

TEST_CASE("minimal polynomial of Clifford elements") {
  SuperAlgebra A = clifford_real(2, 0, 0);
  Element e12 = A.basis(3);
  CHECK(minimal_polynomial(A, e12) == poly({1, 0, 1}));
  CHECK(minimal_polynomial(A, A.basis(1)) == poly({-1, 0, 1}));
  Element idem = Scalar::rational(1, 2) * (A.unit() + A.basis(1));
  CHECK(minimal_polynomial(A, idem) == poly({0, -1, 1}));
  CHECK(minimal_polynomial(A, A.unit()) == poly({-1, 1}));
  SuperAlgebra N = clifford_real(0, 0, 2);
  CHECK(minimal_polynomial(N, N.basis(1)) == poly({0, 0, 1}));
  Polynomial m = minimal_polynomial(A, A.basis(1) + A.basis(3));
  CHECK(evaluate_at(A, m, A.basis(1) + A.basis(3), A.unit()).is_zero());
}
