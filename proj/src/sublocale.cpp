#include "unico/sublocale.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "unico/errors.hpp"

namespace unico {

bool is_sublocale(const Frame& f, const Bitset& subset) {
  if (!subset.test(f.top())) return false;
  bool ok = true;
  subset.for_each([&](int x) {
    if (!ok) return;
    subset.for_each([&](int y) {
      if (!ok) return;
      if (!subset.test(f.meet(x, y))) ok = false;
    });
  });
  if (!ok) return false;
  for (int x = 0; x < f.size() && ok; ++x)
    subset.for_each([&](int s) {
      if (!ok) return;
      if (!subset.test(f.implies(x, s))) ok = false;
    });
  return ok;
}

Sublocale void_sublocale(const Frame& f) {
  return Sublocale(f, Bitset::singleton(f.size(), f.top()));
}

Sublocale full_sublocale(const Frame& f) { return Sublocale(f, Bitset::full(f.size())); }

Sublocale generate_sublocale(const Frame& f, Bitset seed) {
  seed.set(f.top());
  bool changed = true;
  while (changed) {
    changed = false;
    Bitset next = seed;
    seed.for_each([&](int x) {
      seed.for_each([&](int y) {
        int m = f.meet(x, y);
        if (!next.test(m)) {
          next.set(m);
          changed = true;
        }
      });
    });
    for (int x = 0; x < f.size(); ++x)
      seed.for_each([&](int s) {
        int i = f.implies(x, s);
        if (!next.test(i)) {
          next.set(i);
          changed = true;
        }
      });
    seed = next;
  }
  return Sublocale(f, seed);
}

Sublocale frame_sublocale(const Frame& f, SublocaleKind kind, int a) {
  return kind == SublocaleKind::Open ? open_sublocale(f, a) : closed_sublocale(f, a);
}

Sublocale open_sublocale(const Frame& f, int a) { return Sublocale(f, f.open_members(a)); }

Sublocale closed_sublocale(const Frame& f, int a) { return Sublocale(f, f.upset(a)); }

Sublocale intersect(const Sublocale& a, const Sublocale& b) {
  assert(&a.frame() == &b.frame());
  return Sublocale(a.frame(), a.members() & b.members());
}

Bitset join_members(const Frame& f, Bitset u) {
  u.set(f.top());
  // close under binary meets; meets of larger subsets follow by iteration
  bool changed = true;
  while (changed) {
    changed = false;
    Bitset next = u;
    u.for_each([&](int x) {
      u.for_each([&](int y) {
        int m = f.meet(x, y);
        if (!next.test(m)) {
          next.set(m);
          changed = true;
        }
      });
    });
    u = next;
  }
  return u;
}

Sublocale join(const Sublocale& a, const Sublocale& b) {
  assert(&a.frame() == &b.frame());
  return Sublocale(a.frame(), join_members(a.frame(), a.members() | b.members()));
}

Sublocale join_sublocales(const Frame& f, const std::vector<Sublocale>& parts) {
  Bitset u(f.size());
  for (const auto& p : parts) u |= p.members();
  return Sublocale(f, join_members(f, u));
}

Sublocale closure(const Sublocale& s) {
  const Frame& f = s.frame();
  return closed_sublocale(f, f.meet_of(s.members()));
}

int interior_support(const Sublocale& s) {
  const Frame& f = s.frame();
  int u = f.bottom();
  for (int a = 0; a < f.size(); ++a)
    if (f.open_members(a).is_subset_of(s.members())) u = f.join(u, a);
  return u;
}

Sublocale interior(const Sublocale& s) { return open_sublocale(s.frame(), interior_support(s)); }

Sublocale boundary(const Sublocale& s) {
  const Frame& f = s.frame();
  int u = interior_support(s);
  Bitset cl = f.upset(f.meet_of(s.members()));
  return Sublocale(f, cl & f.upset(u));
}

Sublocale relative_closure(const Sublocale& t, const Sublocale& s) {
  if (!t.subset_of(s)) throw NotASubset("relative closure requires T ⊆ S");
  return intersect(closure(t), s);
}

bool is_open(const Sublocale& s) {
  return s.members() == s.frame().open_members(interior_support(s));
}

bool is_closed(const Sublocale& s) {
  return s.members() == s.frame().upset(s.frame().meet_of(s.members()));
}

SublocaleLattice SublocaleLattice::enumerate(const Frame& f, int cap) {
  int n = f.size();
  if (n > cap || n > 62)
    throw EnumerationCapExceeded(
        n, cap,
        "sublocale enumeration needs 2^" + std::to_string(n) +
            " candidate subsets; frame exceeds the cap of " + std::to_string(std::min(cap, 62)));

  SublocaleLattice latt;
  latt.frame_ = &f;

  std::uint64_t top_bit = std::uint64_t(1) << f.top();
  std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (!(m & top_bit)) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!((m >> x) & 1)) continue;
      for (int y = x; y < n && ok; ++y) {
        if (!((m >> y) & 1)) continue;
        if (!((m >> f.meet(x, y)) & 1)) ok = false;
      }
    }
    for (int x = 0; x < n && ok; ++x)
      for (int s = 0; s < n && ok; ++s) {
        if (!((m >> s) & 1)) continue;
        if (!((m >> f.implies(x, s)) & 1)) ok = false;
      }
    if (ok) {
      latt.index_.emplace(m, int(latt.all_.size()));
      latt.all_.emplace_back(f, Bitset::from_mask(n, m));
    }
  }
  latt.supplement_.assign(latt.all_.size(), -1);
  latt.full_ = latt.index_of(Bitset::full(n));
  latt.void_ = latt.index_of(Bitset::singleton(n, f.top()));
  assert(latt.full_ >= 0 && latt.void_ >= 0);
  return latt;
}

int SublocaleLattice::index_of(const Bitset& members) const {
  auto it = index_.find(members.mask());
  return it == index_.end() ? -1 : it->second;
}

int SublocaleLattice::join_index(int i, int j) {
  if (i > j) std::swap(i, j);
  std::uint64_t key = (std::uint64_t(i) << 32) | std::uint64_t(j);
  auto it = join_memo_.find(key);
  if (it != join_memo_.end()) return it->second;
  Bitset jm = join_members(*frame_, all_[i].members() | all_[j].members());
  int idx = index_of(jm);
  assert(idx >= 0);
  join_memo_.emplace(key, idx);
  return idx;
}

int SublocaleLattice::supplement_index(int i) {
  if (supplement_[i] >= 0) return supplement_[i];
  Bitset acc = Bitset::full(frame_->size());
  for (int j = 0; j < size(); ++j)
    if (join_index(i, j) == full_) acc &= all_[j].members();
  int idx = index_of(acc);
  assert(idx >= 0);  // arbitrary intersections of sublocales are sublocales
  supplement_[i] = idx;
  return idx;
}

bool SublocaleLattice::complemented(int i) {
  int s = supplement_index(i);
  return (all_[i].members() & all_[s].members()).count() == 1;
}

std::optional<Sublocale> clopen_complement(const Sublocale& s) {
  const Frame& f = s.frame();
  int m = f.meet_of(s.members());
  if (s.members() == f.upset(m)) return open_sublocale(f, m);  // s = c(m)
  int u = interior_support(s);
  if (s.members() == f.open_members(u)) return closed_sublocale(f, u);  // s = o(u)
  return std::nullopt;
}

Sublocale difference(const Sublocale& a, const Sublocale& b, SublocaleLattice& latt) {
  assert(&a.frame() == &b.frame());
  if (auto comp = clopen_complement(b)) return intersect(a, *comp);
  int bi = latt.index_of(b);
  assert(bi >= 0);
  Bitset acc = Bitset::full(a.frame().size());
  for (int c = 0; c < latt.size(); ++c)
    if (a.members().is_subset_of(latt.at(latt.join_index(bi, c)).members()))
      acc &= latt.at(c).members();
  return Sublocale(a.frame(), acc);
}

Sublocale supplement(const Sublocale& s, SublocaleLattice& latt) {
  if (auto comp = clopen_complement(s)) return *comp;
  int i = latt.index_of(s);
  assert(i >= 0);
  return latt.at(latt.supplement_index(i));
}

bool is_complemented(const Sublocale& s, SublocaleLattice& latt) {
  return intersect(s, supplement(s, latt)).is_void();
}

}  // namespace unico
