#pragma once

#include <utility>
#include <vector>

#include "unico/instance.hpp"

namespace unico {

// Built-in fixtures:
//   F2   two-element chain
//   SIE  three-element chain (frame of the Sierpinski space)
//   B4   four-element Boolean frame (two-point discrete space)
//   PI5  pseudo-interval: points {a,b,c}, opens ∅,{b},{a,b},{b,c},X
//   PC7  pseudocircle: points {a,b,c,d}, opens ∅,{a},{b},{a,b},{a,b,c},{a,b,d},X
//   S2_6 suspension of the pseudocircle on six points
const std::vector<Instance>& catalog();

const Instance* catalog_find(const std::string& name);

// The diamond order 0 < a,b,c < 1: the canonical non-distributive lattice,
// kept as a negative fixture (Frame::build rejects it).
std::pair<int, std::vector<std::pair<int, int>>> m3_order();

}  // namespace unico
