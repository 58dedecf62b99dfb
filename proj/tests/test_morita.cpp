#include <doctest.h>

#include "sclif/classify.hpp"
#include "sclif/morita.hpp"

using namespace sclif;

namespace {

Element half_plus(const SuperAlgebra& A, std::size_t b) { return Scalar::rational(1, 2, A.field()) * (A.unit() + A.basis(b)); }
Element half_minus(const SuperAlgebra& A, std::size_t b) { return Scalar::rational(1, 2, A.field()) * (A.unit() - A.basis(b)); }

bool sums_to_unit(const SuperAlgebra& A, const IdempotentDecomposition& d) {
  Element s = A.zero();
  for (const auto& e : d.idempotents) s += e;
  return s == A.unit();
}

}  // namespace

TEST_CASE("jacobson radical") {
  CHECK(jacobson_radical(clifford_real(2, 1, 0)).empty());
  CHECK(jacobson_radical(clifford_real(1, 0, 2)).size() == 6);
  CHECK(jacobson_radical(clifford_real(0, 0, 3)).size() == 7);
  CHECK(jacobson_radical(quaternions()).empty());
  // General tier path through the trace form.
  SuperAlgebra G = skew_tensor(quaternions(), clifford_real(0, 0, 1));
  REQUIRE_FALSE(G.is_monomial());
  auto J = jacobson_radical(G);
  CHECK(J.size() == 4);
  for (const auto& x : J) CHECK(G.parity_of(x) == std::optional<int>(1));
  CHECK(jacobson_radical(clifford_complex(2, 1)).size() == 4);
}

TEST_CASE("s_equivalent witnesses and certificates") {
  SuperAlgebra A = clifford_real(1, 1, 0);
  Element f = half_plus(A, 3), g = half_minus(A, 3);
  auto v = s_equivalent(A, f, g, Functor::Sigma);
  REQUIRE(std::holds_alternative<Equivalent>(v));
  auto w = std::get<Equivalent>(v);
  CHECK(w.parity == 1);
  CHECK(verify_witnesses(A, f, g, w));
  CHECK(std::holds_alternative<Equivalent>(s_equivalent(A, f, g, Functor::Pi)));

  SuperAlgebra B = clifford_real(2, 0, 0);
  CHECK(std::holds_alternative<Equivalent>(s_equivalent(B, B.unit(), B.unit(), Functor::Sigma)));
  // (e1e2)^2 = -1, so this is not an idempotent.
  CHECK_THROWS_AS(s_equivalent(B, half_plus(B, 3), B.unit(), Functor::Sigma), Error);
}

TEST_CASE("s_equivalent reports a certificate when corners differ") {
  // Corners of dims 4 and 1.
  SuperAlgebra A = clifford_real(1, 1, 0);
  Element f = half_plus(A, 3);
  auto v = s_equivalent(A, A.unit(), f, Functor::Sigma);
  REQUIRE(std::holds_alternative<NotEquivalent>(v));
  CHECK_FALSE(std::get<NotEquivalent>(v).certificate.empty());
}

TEST_CASE("primitive decompositions of small algebras") {
  struct Case {
    SuperAlgebra A;
    std::size_t idempotents, classes;
  };
  std::vector<Case> cases = {
      {clifford_real(1, 0, 0), 1, 1},  {clifford_real(1, 1, 0), 2, 1}, {clifford_real(2, 0, 0), 1, 1},
      {clifford_real(0, 4, 0), 2, 1},  {clifford_real(2, 2, 0), 4, 1}, {clifford_real(1, 1, 1), 2, 1},
      {clifford_complex(2, 0), 2, 1},  {clifford_complex(3, 0), 2, 1}, {skew_tensor(quaternions(), quaternions()), 4, 1},
  };
  for (const auto& c : cases) {
    IdempotentDecomposition d = primitive_decomposition(c.A, kDefaultSeed, kDefaultTrials);
    CHECK_MESSAGE(d.idempotents.size() == c.idempotents, c.A.label());
    CHECK_MESSAGE(d.classes.size() == c.classes, c.A.label());
    CHECK(d.confirmed());
    CHECK(sums_to_unit(c.A, d));
    for (const auto& e : d.idempotents) CHECK(is_idempotent(c.A, e));
  }
}

TEST_CASE("gr-divisional and gr-local checks") {
  CHECK(gr_divisional_check(clifford_real(3, 0, 0)));
  CHECK(gr_divisional_check(quaternions()));
  CHECK(gr_divisional_check(clifford_complex(1, 0)));
  CHECK_FALSE(gr_divisional_check(clifford_real(1, 1, 0)));
  CHECK_FALSE(gr_divisional_check(clifford_real(1, 0, 1)));
  CHECK(gr_local_check(clifford_real(1, 0, 1)));
  CHECK(gr_local_check(clifford_real(0, 0, 2)));
  CHECK_FALSE(gr_local_check(clifford_real(1, 1, 0)));
}

TEST_CASE("basic reduction for both functors") {
  BasicReduction s = basic_reduction(clifford_real(0, 1, 0), Functor::Sigma);
  BasicReduction p = basic_reduction(clifford_real(0, 1, 0), Functor::Pi);
  CHECK(s.basic.dim() == 2);
  CHECK(p.basic.dim() == 2);
  CHECK(identify(s.basic).cls == BasicClass{RealClass::from_index(7)});
  CHECK(identify(p.basic).cls == BasicClass{RealClass::from_index(1)});
  BasicReduction c = basic_reduction(clifford_real(2, 2, 1));
  CHECK(c.basic.dim() == 2);
  CHECK(c.confirmed);
}

TEST_CASE("random homogeneous elements") {
  SuperAlgebra A = clifford_real(2, 1, 0);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Element x = random_homogeneous(A, t % 2, rng);
    CHECK_FALSE(x.is_zero());
    CHECK(A.parity_of(x) == std::optional<int>(t % 2));
  }
}
