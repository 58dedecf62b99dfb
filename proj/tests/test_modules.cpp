#include <doctest.h>

#include "sclif/modules.hpp"
#include "sclif/morita.hpp"

using namespace sclif;

TEST_CASE("regular and projective modules satisfy the axioms") {
  for (auto A : {clifford_real(2, 1, 0), clifford_real(1, 0, 1), quaternions(), clifford_complex(2, 0)}) {
    GradedModule R = regular_module(A);
    CHECK(R.dim() == A.dim());
    CHECK(R.graded_dims() == A.graded_dims());
    CHECK(check_module_axioms(R));
  }
  SuperAlgebra A = clifford_real(1, 1, 0);
  Element f = Scalar::rational(1, 2) * (A.unit() + A.basis(3));
  GradedModule P = module_from_idempotent(A, f);
  CHECK(P.dim() == 2);
  CHECK(P.graded_dims() == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(check_module_axioms(P));
}

TEST_CASE("parity change and suspension") {
  SuperAlgebra A = clifford_real(2, 0, 0);
  GradedModule M = regular_module(A);
  GradedModule pM = parity_change(M), sM = suspension(M);
  CHECK(check_module_axioms(pM));
  CHECK(check_module_axioms(sM));
  CHECK(pM.parities() == sM.parities());
  CHECK_FALSE(pM == sM);
  CHECK(parity_change(pM) == M);
  CHECK(suspension(sM) == M);
  CHECK(apply_functor(Functor::Pi, M) == pM);
  CHECK(apply_functor(Functor::Sigma, M) == sM);
  // Odd generators act with a sign under π.
  CHECK(pM.action(1) == scaled(M.action(1), Scalar(-1L)));
  CHECK(sM.action(1) == M.action(1));
  CHECK(pM.action(3) == M.action(3));
}

TEST_CASE("direct sums") {
  SuperAlgebra A = clifford_real(1, 0, 0);
  GradedModule M = regular_module(A);
  GradedModule S = direct_sum(M, suspension(M));
  CHECK(S.dim() == 4);
  CHECK(check_module_axioms(S));
  CHECK_THROWS_AS(direct_sum(M, regular_module(clifford_real(0, 1, 0))), Error);
}

TEST_CASE("hom spaces") {
  SuperAlgebra D = clifford_real(1, 0, 0);
  GradedModule M = regular_module(D);
  // End(D+ as a left module) = right multiplications, one even and one odd.
  CHECK(hom_basis(M, M, 0).size() == 1);
  CHECK(hom_basis(M, M, 1).size() == 1);
  CHECK(hom_basis(suspension(M), M, 0).size() == 1);
  for (const auto& F : hom_basis(M, M, 1))
    for (std::size_t b = 0; b < D.dim(); ++b) {
      Scalar sign = D.parity(b) ? Scalar(-1L) : Scalar(1L);
      CHECK(F * M.action(b) == scaled(M.action(b) * F, sign));
    }

  SuperAlgebra A = clifford_real(1, 1, 0);
  Element fp = Scalar::rational(1, 2) * (A.unit() + A.basis(3));
  Element fm = Scalar::rational(1, 2) * (A.unit() - A.basis(3));
  GradedModule P = module_from_idempotent(A, fp), N = module_from_idempotent(A, fm);
  auto dims = hom_space_dims(A, fp, fm);
  CHECK(hom_basis(P, N, 0).size() == dims.first);
  CHECK(hom_basis(suspension(P), N, 0).size() == dims.second);
}

TEST_CASE("hat modules") {
  SuperAlgebra A = clifford_real(2, 1, 0);
  SuperAlgebra Ah = hat(A);
  GradedModule M = regular_module(A);
  GradedModule Mh = hat_module(M, Ah);
  CHECK(check_module_axioms(Mh));
  CHECK(Mh.graded_dims() == M.graded_dims());
  CHECK(hat_module(Mh, A) == M);
  CHECK(hom_basis(parity_change(M), M, 0).size() == hom_basis(suspension(Mh), Mh, 0).size());
}

TEST_CASE("twisted endomorphism algebras") {
  SuperAlgebra D = clifford_real(0, 1, 0);
  SuperAlgebra T = twisted_end(regular_module(D), Functor::Sigma);
  CHECK(T.dim() == 2);
  CHECK(T.graded_dims() == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(gr_divisional_check(T));
  SuperAlgebra H = quaternions();
  SuperAlgebra TH = twisted_end(regular_module(H), Functor::Sigma);
  CHECK(TH.dim() == 4);
  CHECK(TH.graded_dims().second == 0);
  CHECK(find_isomorphism(TH, H));
}
