#pragma once

#include <vector>

#include "unico/sublocale.hpp"

namespace unico {

enum class ConnMethod { ClosedCover, Clopen };

// Connectedness of a sublocale. ClosedCover: every cover S ⊆ c(u) ∨ c(v)
// with S ∩ c(u) ∩ c(v) void has a void part. Clopen: S has no proper
// non-void clopen. The two criteria agree; both are exposed so the
// agreement can be checked. The void sublocale is connected (the covering
// condition is vacuous).
bool is_connected(const Sublocale& s, ConnMethod method = ConnMethod::ClosedCover);

// P and Q are separated when closure(P) ∩ Q and P ∩ closure(Q) are void.
bool are_separated(const Sublocale& p, const Sublocale& q);

// S and T are normally separated when disjoint opens o(u) ⊇ S, o(v) ⊇ T exist.
bool are_normally_separated(const Sublocale& s, const Sublocale& t);

// Memoized connectedness flags over an enumerated sublocale lattice.
class LatticeConnectivity {
public:
  explicit LatticeConnectivity(SublocaleLattice& latt)
      : latt_(&latt), conn_(latt.size(), -1) {}
  SublocaleLattice& lattice() { return *latt_; }
  bool connected(int idx) {
    if (conn_[idx] < 0) conn_[idx] = is_connected(latt_->at(idx)) ? 1 : 0;
    return conn_[idx] != 0;
  }

private:
  SublocaleLattice* latt_;
  std::vector<signed char> conn_;
};

// C is normally connected when every decomposition C = S ∨ T into normally
// separated parts has a void part.
bool is_normally_connected(const Sublocale& c, LatticeConnectivity& lc);

// Components of T: non-void connected sublocales D ⊆ T absorbing every
// connected S ⊆ T that meets them (intersection strictly above {1}).
struct ComponentSet {
  Sublocale parent;
  std::vector<Sublocale> components;
  // For components of an open sublocale: the element v with component o(v),
  // parallel to `components`. Empty for the general oracle.
  std::vector<int> supports;
};

// Fast path for open sublocales of a locally connected frame: merge the
// connected elements below u into overlap classes; each class join v gives a
// component o(v). When `certify` is non-null the result is checked against
// the defining maximality condition. Falls back to the general oracle (or
// throws NotLocallyConnected) when u is not a join of connected elements.
ComponentSet components_of_open(const Frame& f, int u, LatticeConnectivity* certify);

// Brute-force oracle over the enumerated sublocale lattice.
ComponentSet components_general(const Sublocale& t, LatticeConnectivity& lc);

struct SublocaleFlags {
  bool open = false;
  bool closed = false;
  bool continuum = false;  // non-void closed connected
  bool region = false;     // non-void open connected
  bool simple = false;     // complemented, with S and L∖S both connected
};

SublocaleFlags classify_sublocale(const Sublocale& s, LatticeConnectivity& lc);

}  // namespace unico
