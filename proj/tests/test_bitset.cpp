#include <doctest.h>

#include "unico/bitset.hpp"

using unico::Bitset;

TEST_CASE("bitset basics") {
  Bitset b(70);
  CHECK(b.empty());
  b.set(0);
  b.set(69);
  CHECK(b.count() == 2);
  CHECK(b.test(69));
  CHECK(b.lowest() == 0);
  b.reset(0);
  CHECK(b.lowest() == 69);

  Bitset full = Bitset::full(70);
  CHECK(full.count() == 70);
  CHECK(b.is_subset_of(full));
  CHECK(full.complement().empty());
}

TEST_CASE("bitset set algebra") {
  Bitset a = Bitset::from_mask(8, 0b1011);
  Bitset b = Bitset::from_mask(8, 0b0110);
  CHECK((a & b) == Bitset::from_mask(8, 0b0010));
  CHECK((a | b) == Bitset::from_mask(8, 0b1111));
  CHECK((a - b) == Bitset::from_mask(8, 0b1001));
  CHECK(a.intersects(b));
  CHECK(Bitset::from_mask(8, 0b0010).is_subset_of(b));
  CHECK(a.mask() == 0b1011);
  CHECK(b.mask_less(a));
  CHECK_FALSE(a.mask_less(b));
  CHECK(Bitset::from_mask(8, 0b0101).mask_less(a));
  CHECK(a.indices() == std::vector<int>{0, 1, 3});
}
