#pragma once

#include <string>

#include "unico/catalog.hpp"
#include "unico/frame.hpp"

namespace testutil {

inline unico::Frame frame_of(const std::string& name) {
  const unico::Instance* inst = unico::catalog_find(name);
  REQUIRE(inst != nullptr);
  return inst->realize_frame();
}

inline const unico::FiniteSpace& space_of(const std::string& name) {
  const unico::Instance* inst = unico::catalog_find(name);
  REQUIRE(inst != nullptr);
  REQUIRE(inst->is_space());
  return *inst->space;
}

inline int elem(const unico::Frame& f, const std::string& label) {
  for (int i = 0; i < f.size(); ++i)
    if (f.label(i) == label) return i;
  REQUIRE_MESSAGE(false, ("no element labelled " + label).c_str());
  return -1;
}

}  // namespace testutil
