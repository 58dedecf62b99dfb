#include "sclif/minpoly.hpp"

namespace sclif {

Polynomial minimal_polynomial(const SuperAlgebra& A, const Element& x, const Element& unit) {
  A.check_owns(x);
  A.check_owns(unit);
  const Field F = A.field();
  if (unit.is_zero()) return Polynomial::constant(Scalar::one(F));
  EchelonBasis eb(F);
  Element p = unit;
  eb.add(p.terms());
  for (std::size_t k = 1; k <= A.dim() + 1; ++k) {
    p = A.mul(p, x);
    auto c = eb.coordinates(p.terms());
    if (c) {
      std::vector<Scalar> coeffs(k + 1, Scalar::zero(F));
      for (const auto& [m, s] : *c) coeffs[m] = -s;
      coeffs[k] = Scalar::one(F);
      return Polynomial(std::move(coeffs), F);
    }
    eb.add(p.terms());
  }
  throw Error(Errc::InvalidArgument, "Krylov iteration did not terminate");
}

Polynomial minimal_polynomial(const SuperAlgebra& A, const Element& x) { return minimal_polynomial(A, x, A.unit()); }

Element evaluate_at(const SuperAlgebra& A, const Polynomial& P, const Element& x, const Element& unit) {
  Element acc = A.zero();
  for (int i = P.degree(); i >= 0; --i) {
    acc = A.mul(acc, x);
    acc += P.coeff(i) * unit;
  }
  return acc;
}

}  // namespace sclif
