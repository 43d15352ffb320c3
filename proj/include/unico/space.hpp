#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unico/bitset.hpp"
#include "unico/frame.hpp"

namespace unico {

// A finite topological space: labelled points and the family of open
// point-sets, which must contain ∅ and the full set and be closed under
// pairwise union and intersection.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<Bitset> opens;

  int point_count() const { return int(points.size()); }
  Bitset full() const { return Bitset::full(point_count()); }
  int point_index(const std::string& label) const;
};

FiniteSpace validate_space(std::vector<std::string> points, std::vector<Bitset> opens);

// The frame of open sets, ordered by inclusion. Elements are the opens in
// ascending point-mask order; element_sets maps element id to its open set.
struct SpaceFrame {
  Frame frame;
  std::vector<Bitset> element_sets;

  int element_of(const Bitset& open_set) const;
};

SpaceFrame frame_of_opens(const FiniteSpace& space);

// Connectedness of a subspace: no partition into two nonempty relatively
// open parts. The empty subspace counts as connected.
bool classical_connected(const FiniteSpace& space, const Bitset& subset);

// All closed point-sets (complements of opens), in ascending mask order.
std::vector<Bitset> closed_sets(const FiniteSpace& space);

struct ClassicalUnicoherence {
  bool unicoherent = true;
  // witness cover when not unicoherent: closed connected h, k with
  // h ∪ k = X and h ∩ k empty or disconnected
  std::optional<Bitset> h, k;
};

// Every cover X = H ∪ K by nonempty closed connected subsets must have a
// nonempty connected intersection.
ClassicalUnicoherence classical_unicoherent(const FiniteSpace& space);

struct CrossCheck {
  bool classical_unicoherent = false;
  bool localic_unicoherent = false;  // property III of the frame of opens
  bool unicoherence_agrees = false;
  bool continua_agree = false;  // closed F continuum ⟺ c(X∖F) continuum
  int continua_checked = 0;
  nlohmann::ordered_json first_disagreement;  // null when everything agrees

  bool agrees() const { return unicoherence_agrees && continua_agree; }
};

CrossCheck cross_check(const FiniteSpace& space, int enum_cap);

}  // namespace unico
