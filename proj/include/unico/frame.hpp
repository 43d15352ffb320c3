#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unico/bitset.hpp"

namespace unico {

struct FrameFlags {
  bool connected = false;
  bool locally_connected = false;
  bool strongly_locally_connected = false;
  bool normal = false;
};

// A finite frame: a finite distributive lattice with all element-level
// operations precomputed as tables. Immutable after construction; every
// operation is a table lookup or a scan over precomputed masks.
//
// Elements are indices 0..n-1. upset(a) is the member set of the closed
// sublocale ↑a; open_members(a) is the member set of the open sublocale
// {x : a→x = x}.
class Frame {
public:
  // Builds a frame from a covering set of order pairs (i ≤ j). The
  // reflexive-transitive closure is applied first. Throws NotAPartialOrder,
  // NotALattice or NotDistributive (with witnesses) on invalid input.
  static Frame build(int n, const std::vector<std::pair<int, int>>& order_pairs,
                     std::vector<std::string> labels = {});

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int a, int b) const { return up_[a].test(b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  // Heyting implication: the largest x with x ∧ a ≤ b.
  int implies(int a, int b) const { return imp_[a * n_ + b]; }
  int pseudocomplement(int a) const { return implies(a, bottom_); }

  // Greatest lower / least upper bound of an arbitrary subset.
  // Empty meet is the top element, empty join the bottom.
  int meet_of(const Bitset& s) const;
  int join_of(const Bitset& s) const;

  // x is connected when x = b ∨ c with b ∧ c = 0 forces b = 0 or c = 0.
  bool element_connected(int x) const { return elem_conn_[x] != 0; }
  Bitset connected_elements_below(int a) const;

  const Bitset& upset(int a) const { return up_[a]; }
  const Bitset& downset(int a) const { return down_[a]; }
  const Bitset& open_members(int a) const { return open_[a]; }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  FrameFlags classify() const;

private:
  Frame() = default;

  int n_ = 0;
  int bottom_ = 0, top_ = 0;
  std::vector<Bitset> up_, down_, open_;
  std::vector<int> meet_, join_, imp_;
  std::vector<std::uint8_t> elem_conn_;
  std::vector<std::string> labels_;
};

}  // namespace unico
