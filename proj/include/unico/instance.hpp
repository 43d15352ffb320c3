#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "unico/frame.hpp"
#include "unico/space.hpp"

namespace unico {

// One analyzable input: either a frame or a finite space.
struct Instance {
  std::string name;
  std::optional<Frame> frame;
  std::optional<FiniteSpace> space;

  bool is_space() const { return space.has_value(); }
  // the frame itself, or the frame of opens for a space
  Frame realize_frame() const;
};

// Parses {"kind":"frame","n":...,"leq":[[i,j],...]} or
// {"kind":"space","points":[...],"opens":[[...],...]}; optional "name" and
// (for frames) optional "labels". Opens may list point labels or indices.
Instance instance_from_json(const nlohmann::json& j, const std::string& fallback_name);

Instance load_instance(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const Instance& inst);

}  // namespace unico
