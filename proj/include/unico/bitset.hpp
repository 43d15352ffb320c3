#pragma once

#include <cstdint>
#include <cassert>
#include <vector>

namespace unico {

// Set of element indices drawn from a fixed universe [0, n).
// Word 0 holds indices 0..63, so ascending mask() order puts index 0 in the
// least significant bit; that order is the canonical one used in reports.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bitset full(int universe) {
    Bitset b(universe);
    for (std::size_t k = 0; k < b.w_.size(); ++k) b.w_[k] = ~std::uint64_t(0);
    b.trim();
    return b;
  }
  static Bitset singleton(int universe, int i) {
    Bitset b(universe);
    b.set(i);
    return b;
  }
  // universe must be <= 64
  static Bitset from_mask(int universe, std::uint64_t mask) {
    Bitset b(universe);
    if (!b.w_.empty()) b.w_[0] = mask;
    b.trim();
    return b;
  }

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  int lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }
  std::uint64_t mask() const {
    assert(n_ <= 64);
    return w_.empty() ? 0 : w_[0];
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  Bitset complement() const {
    Bitset r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // ascending order of the underlying mask value
  bool mask_less(const Bitset& o) const {
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(int(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    if (n_ == 0 && !w_.empty()) w_.back() = 0;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace unico
