#pragma once

#include "sclif/algebra.hpp"
#include "sclif/polynomial.hpp"

namespace sclif {

// Least-degree monic polynomial m with m(x) = 0, where constants act as
// multiples of `unit` (the algebra unit, or the unit of a corner containing x).
Polynomial minimal_polynomial(const SuperAlgebra& A, const Element& x, const Element& unit);
Polynomial minimal_polynomial(const SuperAlgebra& A, const Element& x);

// P(x) with the constant term taken as a multiple of `unit`.
Element evaluate_at(const SuperAlgebra& A, const Polynomial& P, const Element& x, const Element& unit);

}  // namespace sclif
