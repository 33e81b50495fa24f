#pragma once

#include <string>
#include <vector>

#include "ado/lie_algebra.hpp"

namespace ado {

/// Name patterns accepted by example_algebra.
std::vector<std::string> example_names();

/// abelian{n}, heisenberg3, heisenberg5, filiform4, free{r}_{c}, solvable2.
/// Throws UnknownExample.
LieAlgebra example_algebra(const std::string& name);

}  // namespace ado
