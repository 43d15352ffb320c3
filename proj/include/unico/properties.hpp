#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "unico/connectivity.hpp"
#include "unico/frame.hpp"
#include "unico/sublocale.hpp"

namespace unico {

using ordered_json = nlohmann::ordered_json;

// The named connectedness/unicoherence properties, in canonical order.
enum class PropertyId { IPlus, I, IPrime, II, III, IV, V, VI, VII, VIII, IX, X, N, NPlus };

inline constexpr std::array<PropertyId, 14> kAllProperties = {
    PropertyId::IPlus, PropertyId::I,  PropertyId::IPrime, PropertyId::II, PropertyId::III,
    PropertyId::IV,    PropertyId::V,  PropertyId::VI,     PropertyId::VII, PropertyId::VIII,
    PropertyId::IX,    PropertyId::X,  PropertyId::N,      PropertyId::NPlus};

const char* property_name(PropertyId id);
std::optional<PropertyId> property_from_name(std::string_view name);

enum class Verdict { Holds, Fails, CapExceeded };

struct PropertyResult {
  PropertyId id;
  Verdict verdict;
  ordered_json witness;  // structured counterexample when verdict == Fails
};

struct EquivalenceReport {
  FrameFlags preconditions;
  std::vector<PropertyResult> results;  // canonical order, restricted if filtered
  bool consistent = true;
  std::vector<std::string> violations;

  const PropertyResult* find(PropertyId id) const;
};

enum class SeparatesMode { Locale, Points, Sets };

// Evaluates the fourteen properties on one frame. Caches the enumerated
// sublocale lattice, separation matrices and component sets; all public
// results are deterministic (first witness in quantifier order).
class PropertyEngine {
public:
  explicit PropertyEngine(const Frame& f, int enum_cap = SublocaleLattice::kDefaultCap);

  const Frame& frame() const { return *frame_; }
  const FrameFlags& flags();

  PropertyResult check(PropertyId id);
  // Empty list means all fourteen. Consistency is judged only over
  // properties that were actually decided.
  EquivalenceReport verify_equivalences(std::vector<PropertyId> props = {});

  // Re-derives a failed result's violation from its witness using the
  // definitional operations (no separation caches). Returns true when the
  // witness reproduces the violation.
  bool replay(const PropertyResult& r);

  // S must be complemented. Locale mode: L ∖ S is not connected. Points
  // mode: additionally some separation L∖S ⊆ c(a) ∨ c(b) with both parts
  // non-void puts x in the c(a) part and y in the c(b) part. Sets mode:
  // every x ∈ X, y ∈ Y (both ≠ 1) are separated; a void X or Y is never
  // separated from anything.
  bool separates_locale(const Sublocale& s);
  bool separates_points(const Sublocale& s, int x, int y, bool use_cache = true);
  bool separates_sets(const Sublocale& s, const Sublocale& x_set, const Sublocale& y_set);

  // Variant of property I quantifying X, Y over arbitrary subsets of L
  // instead of sublocales; only for frames with at most 12 elements.
  bool subset_variant_I();

  SublocaleLattice& lattice();              // throws EnumerationCapExceeded
  SublocaleLattice* lattice_if_enumerable();  // nullptr when over the cap
  LatticeConnectivity& lattice_connectivity();

  const ComponentSet& components_of(int u);
  bool closed_connected(int w);  // c(w) connected
  bool open_connected(int a);    // o(a) connected
  const Sublocale& boundary_of_open(int a);
  int enum_cap() const { return cap_; }

private:
  PropertyResult run(PropertyId id);
  const std::vector<Bitset>& sep_rows(int w);  // points separated by c(w)
  Bitset non_top_universe() const;

  PropertyResult prop_I_plus();
  PropertyResult prop_I();
  PropertyResult prop_I_prime();
  PropertyResult prop_II();
  PropertyResult prop_III();
  PropertyResult prop_IV();
  PropertyResult prop_V();
  PropertyResult prop_VI();
  PropertyResult prop_VII();
  PropertyResult prop_VIII();
  PropertyResult prop_IX();
  PropertyResult prop_X();
  PropertyResult prop_N(bool point_form);

  ordered_json elem(int x) const;
  ordered_json elem_set(const Bitset& b) const;

  const Frame* frame_;
  int cap_;
  std::optional<FrameFlags> flags_;
  std::optional<SublocaleLattice> latt_;
  bool latt_tried_ = false;
  std::optional<LatticeConnectivity> lconn_;
  std::map<int, std::vector<Bitset>> sep_;
  std::map<int, ComponentSet> comps_;
  std::vector<signed char> closed_conn_, open_conn_;
  std::map<int, Sublocale> bd_open_;
};

// Equivalence / implication constraints between decided verdicts, under the
// preconditions that actually hold. Returns human-readable violations.
std::vector<std::string> consistency_violations(const FrameFlags& pre,
                                                const std::vector<PropertyResult>& results);

}  // namespace unico
