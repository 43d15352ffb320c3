#include "unico/frame.hpp"

#include <string>

#include "unico/errors.hpp"

namespace unico {

namespace {

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Frame Frame::build(int n, const std::vector<std::pair<int, int>>& order_pairs,
                   std::vector<std::string> labels) {
  if (n <= 0) throw NotALattice(0, 0, "a frame needs at least one element");

  Frame f;
  f.n_ = n;
  f.up_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i) f.up_[i].set(i);
  for (auto [i, j] : order_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError("leq", "order pair " + pair_text(i, j) + " out of range [0, " +
                                  std::to_string(n) + ")");
    f.up_[i].set(j);
  }

  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (f.up_[i].test(k)) f.up_[i] |= f.up_[k];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (f.up_[i].test(j) && f.up_[j].test(i))
        throw NotAPartialOrder(i, j, "antisymmetry violated: " + std::to_string(i) +
                                         " <= " + std::to_string(j) + " <= " +
                                         std::to_string(i));

  f.down_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (f.up_[i].test(j)) f.down_[j].set(i);

  // binary meets and joins: the unique greatest lower / least upper bound
  f.meet_.assign(std::size_t(n) * n, -1);
  f.join_.assign(std::size_t(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Bitset lower = f.down_[a] & f.down_[b];
      int glb = -1;
      lower.for_each([&](int x) {
        if (lower.is_subset_of(f.down_[x])) glb = x;
      });
      if (glb < 0)
        throw NotALattice(a, b, "elements " + pair_text(a, b) + " have no meet");
      Bitset upper = f.up_[a] & f.up_[b];
      int lub = -1;
      upper.for_each([&](int x) {
        if (upper.is_subset_of(f.up_[x])) lub = x;
      });
      if (lub < 0)
        throw NotALattice(a, b, "elements " + pair_text(a, b) + " have no join");
      f.meet_[a * n + b] = f.meet_[b * n + a] = glb;
      f.join_[a * n + b] = f.join_[b * n + a] = lub;
    }
  }

  f.bottom_ = f.meet_of(Bitset::full(n));
  f.top_ = f.join_of(Bitset::full(n));

  // Binary distributivity; for a finite lattice this is equivalent to the
  // infinite distributive law since every join is finite.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y; z < n; ++z) {
        int lhs = f.meet(x, f.join(y, z));
        int rhs = f.join(f.meet(x, y), f.meet(x, z));
        if (lhs != rhs)
          throw NotDistributive(x, y, z, "distributivity fails at triple (" +
                                             std::to_string(x) + ", " + std::to_string(y) +
                                             ", " + std::to_string(z) + ")");
      }

  f.imp_.assign(std::size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = f.bottom_;
      for (int x = 0; x < n; ++x)
        if (f.leq(f.meet(x, a), b)) r = f.join(r, x);
      f.imp_[a * n + b] = r;
    }

  f.elem_conn_.assign(n, 1);
  for (int x = 0; x < n; ++x) {
    bool conn = true;
    f.down_[x].for_each([&](int b) {
      if (!conn || b == f.bottom_) return;
      f.down_[x].for_each([&](int c) {
        if (!conn || c == f.bottom_) return;
        if (f.join(b, c) == x && f.meet(b, c) == f.bottom_ && b != x && c != x) conn = false;
      });
    });
    // a decomposition may also use x itself with a disjoint nonzero part,
    // but x ∧ c = 0 with c ≤ x forces c = 0, so the scan above is complete
    f.elem_conn_[x] = conn ? 1 : 0;
  }

  f.open_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (f.implies(a, x) == x) f.open_[a].set(x);

  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (int(labels.size()) != n)
    throw ParseError("labels", "expected " + std::to_string(n) + " labels, got " +
                                   std::to_string(labels.size()));
  f.labels_ = std::move(labels);
  return f;
}

int Frame::meet_of(const Bitset& s) const {
  int r = top_;
  s.for_each([&](int x) { r = meet(r, x); });
  return r;
}

int Frame::join_of(const Bitset& s) const {
  int r = bottom_;
  s.for_each([&](int x) { r = join(r, x); });
  return r;
}

Bitset Frame::connected_elements_below(int a) const {
  Bitset r(n_);
  down_[a].for_each([&](int c) {
    if (elem_conn_[c]) r.set(c);
  });
  return r;
}

FrameFlags Frame::classify() const {
  FrameFlags fl;
  fl.connected = element_connected(top_);

  fl.locally_connected = true;
  for (int a = 0; a < n_ && fl.locally_connected; ++a)
    if (join_of(connected_elements_below(a)) != a) fl.locally_connected = false;

  fl.strongly_locally_connected = true;
  for (int u = 0; u < n_ && fl.strongly_locally_connected; ++u) {
    bool ok = true;
    open_[u].for_each([&](int x) {
      if (!ok) return;
      bool found = false;
      down_[u].for_each([&](int v) {
        if (found || !elem_conn_[v]) return;
        if (implies(v, x) == x) found = true;
      });
      if (!found) ok = false;
    });
    if (!ok) fl.strongly_locally_connected = false;
  }

  fl.normal = true;
  for (int a = 0; a < n_ && fl.normal; ++a)
    for (int b = 0; b < n_ && fl.normal; ++b) {
      if (join(a, b) != top_) continue;
      bool found = false;
      for (int u = 0; u < n_ && !found; ++u) {
        if (join(a, u) != top_) continue;
        for (int v = 0; v < n_ && !found; ++v)
          if (meet(u, v) == bottom_ && join(b, v) == top_) found = true;
      }
      if (!found) fl.normal = false;
    }

  return fl;
}

}  // namespace unico
