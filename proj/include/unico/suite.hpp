#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unico/instance.hpp"
#include "unico/report.hpp"

namespace unico {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  long long cases = 0;  // instantiations actually checked
  std::string note;     // failure detail or skip reason
};

struct SuiteOptions {
  int enum_cap = SublocaleLattice::kDefaultCap;
  // Enumerate all 2^n open families for the family-quantified laws instead
  // of pairs and triples. Meant for the catalog fixtures.
  bool exhaustive_families = false;
  int char3_lattice_cap = 128;  // separated-split criterion needs |S(L)| small
  std::uint64_t seed = 0x5eed5eedULL;
};

// Property-law suite: instantiates the boundary/closure/component/
// connectivity laws over all sublocales and pairs of the frame, each law
// gated by the hypotheses it carries. Gated-out and capped checks are
// reported as skipped, never silently dropped.
std::vector<CheckResult> run_lemma_suite(const Frame& frame, const SuiteOptions& opts);
std::vector<CheckResult> run_lemma_suite(const Instance& inst, const SuiteOptions& opts);

struct TheoremOptions {
  int max_enum = SublocaleLattice::kDefaultCap;
  bool lemmas = true;
  bool exhaustive_lemmas = false;
};

struct InstanceRun {
  AnalysisOutcome analysis;
  std::vector<CheckResult> lemmas;

  bool consistent() const;
};

struct TheoremReport {
  std::string source;
  std::vector<InstanceRun> runs;

  bool consistent() const;
  bool cap_reached() const;
  int exit_code() const;
  std::string first_offender() const;  // empty when consistent
};

TheoremReport run_theorem_suite(const std::vector<Instance>& instances, std::string source,
                                const TheoremOptions& opts);

ordered_json theorem_report_json(const TheoremReport& rep);
std::string theorem_report_text(const TheoremReport& rep);

}  // namespace unico
