#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unico/instance.hpp"
#include "unico/properties.hpp"
#include "unico/space.hpp"

namespace unico {

struct AnalysisOptions {
  std::vector<PropertyId> properties;  // empty = all fourteen
  int max_enum = SublocaleLattice::kDefaultCap;
};

// Outcome of analyzing one instance: precondition flags, property verdicts
// with witnesses, theorem-consistency violations, and (for spaces) the
// classical cross-check. Every false witness is replayed through the
// definitional operations; a replay failure is reported as an inconsistency.
struct AnalysisOutcome {
  std::string name;
  bool is_space = false;
  int frame_size = 0;
  std::vector<std::string> labels;
  EquivalenceReport eq;
  std::optional<bool> classical_connected_flag;
  std::optional<bool> classical_unicoherent_flag;
  std::optional<CrossCheck> cross;

  bool consistent() const;
  bool cap_reached() const;
  // 0 consistent, 1 theorem inconsistency, 3 enumeration cap reached
  int exit_code() const;
};

AnalysisOutcome run_analysis(const Instance& inst, const AnalysisOptions& opts);

ordered_json analysis_to_json(const AnalysisOutcome& a);
std::string analysis_to_text(const AnalysisOutcome& a);

ordered_json property_result_json(const PropertyResult& r);

}  // namespace unico
