#pragma once

#include "tropical/numeric.hpp"

#include <vector>

namespace tropical {

/// Generators of a polyhedral cone {y : a.y >= 0 for a in inequalities, e.y = 0 for e in equations}.
/// Rays are primitive and extreme modulo the lineality space; both lists are determined
/// only up to that quotient.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVector>& inequalities,
                               const std::vector<IntVector>& equations);

}  // namespace tropical
