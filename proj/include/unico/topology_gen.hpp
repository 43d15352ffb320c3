#pragma once

#include <vector>

#include "unico/space.hpp"

namespace unico {

// All labelled topologies on exactly k points (k <= 4), in a deterministic
// order: families of middle subsets enumerated by ascending mask, kept when
// closed under pairwise union and intersection. No isomorphism reduction.
std::vector<FiniteSpace> all_topologies(int k);

}  // namespace unico
