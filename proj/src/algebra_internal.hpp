#pragma once

#include <string>
#include <vector>

#include "sclif/algebra.hpp"

namespace sclif::detail {

// General-tier description of the span of `basis` inside A (not yet
// registered; pass to SuperAlgebra::general).
AlgebraData span_data(const SuperAlgebra& A, const std::vector<Element>& basis, const Element& unit,
                      std::string label);

}  // namespace sclif::detail
