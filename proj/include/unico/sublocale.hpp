#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "unico/bitset.hpp"
#include "unico/frame.hpp"

namespace unico {

// A sublocale, represented by its member set: a subset of frame elements
// that contains the top element, is closed under meets of all subsets, and
// contains x→s for every frame element x and member s.
//
// The void sublocale is {1}; "non-void" means the member set strictly
// contains {1}. The meet of sublocales is plain intersection; the join is
// the set of meets of subsets of the union.
class Sublocale {
public:
  Sublocale(const Frame& f, Bitset members) : frame_(&f), members_(std::move(members)) {}

  const Frame& frame() const { return *frame_; }
  const Bitset& members() const { return members_; }
  bool contains(int x) const { return members_.test(x); }
  bool is_void() const { return members_.count() == 1; }
  bool subset_of(const Sublocale& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Sublocale& a, const Sublocale& b) {
    return a.frame_ == b.frame_ && a.members_ == b.members_;
  }
  friend bool operator!=(const Sublocale& a, const Sublocale& b) { return !(a == b); }

private:
  const Frame* frame_;
  Bitset members_;
};

bool is_sublocale(const Frame& f, const Bitset& subset);

Sublocale void_sublocale(const Frame& f);
Sublocale full_sublocale(const Frame& f);

// Least fixpoint of closing seed ∪ {top} under binary meets and x→(−).
Sublocale generate_sublocale(const Frame& f, Bitset seed);

enum class SublocaleKind { Open, Closed };
Sublocale frame_sublocale(const Frame& f, SublocaleKind kind, int a);
Sublocale open_sublocale(const Frame& f, int a);
Sublocale closed_sublocale(const Frame& f, int a);

Sublocale intersect(const Sublocale& a, const Sublocale& b);
Sublocale join(const Sublocale& a, const Sublocale& b);
Sublocale join_sublocales(const Frame& f, const std::vector<Sublocale>& parts);

// Member set of the join of a family given by member bitsets.
Bitset join_members(const Frame& f, Bitset union_of_members);

Sublocale closure(const Sublocale& s);
// The largest u with o(u) ⊆ s; interior(s) = o(u).
int interior_support(const Sublocale& s);
Sublocale interior(const Sublocale& s);
// closure(s) ∖ interior(s), computed as closure(s) ∩ c(u) for the interior
// support u (exact because the interior is open, hence complemented).
Sublocale boundary(const Sublocale& s);

// Closure of t inside s, which equals closure(t) ∩ s. Throws NotASubset.
Sublocale relative_closure(const Sublocale& t, const Sublocale& s);

bool is_open(const Sublocale& s);
bool is_closed(const Sublocale& s);

// The exhaustively enumerated sublocale lattice of a frame, in canonical
// (ascending member-mask) order. Enumeration is only attempted for frames
// with at most `cap` elements.
class SublocaleLattice {
public:
  static constexpr int kDefaultCap = 20;

  static SublocaleLattice enumerate(const Frame& f, int cap = kDefaultCap);

  const Frame& frame() const { return *frame_; }
  int size() const { return int(all_.size()); }
  const Sublocale& at(int i) const { return all_[i]; }
  int full_index() const { return full_; }
  int void_index() const { return void_; }

  // -1 when the bitset is not a sublocale of this frame
  int index_of(const Bitset& members) const;
  int index_of(const Sublocale& s) const { return index_of(s.members()); }

  int join_index(int i, int j);
  // Meet of all sublocales T with T ∨ S = L.
  int supplement_index(int i);
  bool complemented(int i);

private:
  SublocaleLattice() = default;

  const Frame* frame_ = nullptr;
  std::vector<Sublocale> all_;
  std::unordered_map<std::uint64_t, int> index_;
  std::unordered_map<std::uint64_t, int> join_memo_;
  std::vector<int> supplement_;  // -1 = not yet computed
  int full_ = -1, void_ = -1;
};

// Co-Heyting subtraction in the sublocale lattice: the least C with
// A ⊆ B ∨ C. When B is open or closed its complement is known directly and
// A ∖ B = A ∩ (complement of B); otherwise the enumerated lattice is scanned.
Sublocale difference(const Sublocale& a, const Sublocale& b, SublocaleLattice& latt);
Sublocale supplement(const Sublocale& s, SublocaleLattice& latt);
bool is_complemented(const Sublocale& s, SublocaleLattice& latt);

// Complement of an open or closed sublocale, when it is one.
std::optional<Sublocale> clopen_complement(const Sublocale& s);

}  // namespace unico
