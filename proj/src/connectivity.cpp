#include "unico/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "unico/errors.hpp"

namespace unico {

namespace {

bool non_void(const Bitset& members) { return members.count() > 1; }

}  // namespace

bool is_connected(const Sublocale& s, ConnMethod method) {
  const Frame& f = s.frame();
  int n = f.size();
  const Bitset& m = s.members();
  if (method == ConnMethod::ClosedCover) {
    for (int u = 0; u < n; ++u) {
      Bitset su = m & f.upset(u);
      if (!non_void(su)) continue;
      for (int v = 0; v < n; ++v) {
        if (!m.is_subset_of(f.upset(f.meet(u, v)))) continue;  // S ⊆ c(u) ∨ c(v)
        if (non_void(m & f.upset(f.join(u, v)))) continue;     // S ∩ c(u) ∩ c(v) = ∅
        if (non_void(m & f.upset(v))) return false;
      }
    }
    return true;
  }
  // Clopen: some T = o(u) ∩ S = c(v) ∩ S with ∅ != T != S
  for (int u = 0; u < n; ++u) {
    Bitset t = m & f.open_members(u);
    if (!non_void(t) || t == m) continue;
    for (int v = 0; v < n; ++v)
      if (t == (m & f.upset(v))) return false;
  }
  return true;
}

bool are_separated(const Sublocale& p, const Sublocale& q) {
  assert(&p.frame() == &q.frame());
  const Frame& f = p.frame();
  Bitset cp = f.upset(f.meet_of(p.members()));
  Bitset cq = f.upset(f.meet_of(q.members()));
  return !non_void(cp & q.members()) && !non_void(p.members() & cq);
}

bool are_normally_separated(const Sublocale& s, const Sublocale& t) {
  assert(&s.frame() == &t.frame());
  const Frame& f = s.frame();
  for (int u = 0; u < f.size(); ++u) {
    if (!s.members().is_subset_of(f.open_members(u))) continue;
    for (int v = 0; v < f.size(); ++v)
      if (f.meet(u, v) == f.bottom() && t.members().is_subset_of(f.open_members(v)))
        return true;
  }
  return false;
}

bool is_normally_connected(const Sublocale& c, LatticeConnectivity& lc) {
  SublocaleLattice& latt = lc.lattice();
  int ci = latt.index_of(c);
  assert(ci >= 0);
  for (int i = 0; i < latt.size(); ++i) {
    if (!latt.at(i).subset_of(c)) continue;
    for (int j = 0; j < latt.size(); ++j) {
      if (!latt.at(j).subset_of(c)) continue;
      if (latt.join_index(i, j) != ci) continue;
      if (latt.at(i).is_void() || latt.at(j).is_void()) continue;
      if (are_normally_separated(latt.at(i), latt.at(j))) return false;
    }
  }
  return true;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void certify_components(const ComponentSet& cs, LatticeConnectivity& lc) {
  SublocaleLattice& latt = lc.lattice();
  for (const auto& d : cs.components) {
    if (d.is_void() || !is_connected(d) || !d.subset_of(cs.parent))
      throw std::logic_error("component fast path produced a non-component");
    for (int i = 0; i < latt.size(); ++i) {
      const Sublocale& s = latt.at(i);
      if (!lc.connected(i) || !s.subset_of(cs.parent)) continue;
      if (non_void(s.members() & d.members()) && !s.subset_of(d))
        throw std::logic_error("component fast path violates maximality");
    }
  }
}

}  // namespace

ComponentSet components_of_open(const Frame& f, int u, LatticeConnectivity* certify) {
  std::vector<int> elems = f.connected_elements_below(u).indices();
  std::erase(elems, f.bottom());

  std::vector<int> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (f.meet(elems[i], elems[j]) != f.bottom()) {
        int ri = uf_find(parent, int(i)), rj = uf_find(parent, int(j));
        if (ri != rj) parent[ri] = rj;
      }

  std::vector<int> supports;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (uf_find(parent, int(i)) != int(i)) continue;
    int v = f.bottom();
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (uf_find(parent, int(j)) == int(i)) v = f.join(v, elems[j]);
    supports.push_back(v);
  }

  int total = f.bottom();
  for (int v : supports) total = f.join(total, v);
  if (total != u) {
    // u is not a join of connected elements at this point
    if (certify) return components_general(open_sublocale(f, u), *certify);
    throw NotLocallyConnected("element " + std::to_string(u) +
                              " is not a join of connected elements");
  }

  ComponentSet cs{open_sublocale(f, u), {}, {}};
  std::sort(supports.begin(), supports.end(), [&](int a, int b) {
    const Bitset &ma = f.open_members(a), &mb = f.open_members(b);
    if (ma.lowest() != mb.lowest()) return ma.lowest() < mb.lowest();
    return ma.mask_less(mb);
  });
  for (int v : supports) {
    cs.components.push_back(open_sublocale(f, v));
    cs.supports.push_back(v);
  }

  if (certify) certify_components(cs, *certify);
  return cs;
}

ComponentSet components_general(const Sublocale& t, LatticeConnectivity& lc) {
  SublocaleLattice& latt = lc.lattice();
  ComponentSet cs{t, {}, {}};
  for (int d = 0; d < latt.size(); ++d) {
    const Sublocale& cand = latt.at(d);
    if (cand.is_void() || !cand.subset_of(t) || !lc.connected(d)) continue;
    bool maximal = true;
    for (int i = 0; i < latt.size() && maximal; ++i) {
      const Sublocale& s = latt.at(i);
      if (!lc.connected(i) || !s.subset_of(t)) continue;
      if (non_void(s.members() & cand.members()) && !s.subset_of(cand)) maximal = false;
    }
    if (maximal) cs.components.push_back(cand);
  }
  std::sort(cs.components.begin(), cs.components.end(),
            [](const Sublocale& a, const Sublocale& b) {
              if (a.members().lowest() != b.members().lowest())
                return a.members().lowest() < b.members().lowest();
              return a.members().mask_less(b.members());
            });
  return cs;
}

SublocaleFlags classify_sublocale(const Sublocale& s, LatticeConnectivity& lc) {
  SublocaleFlags fl;
  fl.open = is_open(s);
  fl.closed = is_closed(s);
  bool conn = is_connected(s);
  fl.continuum = fl.closed && !s.is_void() && conn;
  fl.region = fl.open && !s.is_void() && conn;
  if (is_complemented(s, lc.lattice()))
    fl.simple = conn && is_connected(supplement(s, lc.lattice()));
  return fl;
}

}  // namespace unico
