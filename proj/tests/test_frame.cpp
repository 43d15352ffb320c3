#include <doctest.h>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "unico/catalog.hpp"
#include "unico/errors.hpp"
#include "unico/frame.hpp"

using namespace unico;
using testutil::elem;
using testutil::frame_of;

namespace {

using PointSet = std::set<int>;

PointSet inter(const PointSet& a, const PointSet& b) {
  PointSet r;
  for (int x : a)
    if (b.count(x)) r.insert(x);
  return r;
}

PointSet uni(const PointSet& a, const PointSet& b) {
  PointSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

// the pseudocircle's opens as raw point sets (a=0, b=1, c=2, d=3)
const std::vector<PointSet> kPC = {{},           {0},          {1},       {0, 1},
                                   {0, 1, 2},    {0, 1, 3},    {0, 1, 2, 3}};

int pc_index(const PointSet& s) {
  for (std::size_t i = 0; i < kPC.size(); ++i)
    if (kPC[i] == s) return int(i);
  return -1;
}

Frame build_pc7() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j && inter(kPC[i], kPC[j]) == kPC[i]) pairs.emplace_back(i, j);
  return Frame::build(7, pairs);
}

}  // namespace

TEST_CASE("two-element chain is the smallest frame") {
  Frame f2 = Frame::build(2, {{0, 1}});
  CHECK(f2.bottom() == 0);
  CHECK(f2.top() == 1);
  CHECK(f2.meet(0, 1) == 0);
  CHECK(f2.join(0, 1) == 1);
}

TEST_CASE("the diamond is rejected with a witness triple") {
  auto [n, pairs] = m3_order();
  try {
    Frame::build(n, pairs);
    FAIL("diamond accepted");
  } catch (const NotDistributive& e) {
    // replay the witness against the diamond's own meet/join structure:
    // x ∧ (y ∨ z) must differ from (x ∧ y) ∨ (x ∧ z)
    auto meet = [](int a, int b) { return a == b ? a : (a == 4 ? b : (b == 4 ? a : 0)); };
    auto join = [](int a, int b) { return a == b ? a : (a == 0 ? b : (b == 0 ? a : 4)); };
    CHECK(meet(e.x, join(e.y, e.z)) != join(meet(e.x, e.y), meet(e.x, e.z)));
  }
}

TEST_CASE("antisymmetry and lattice violations are reported") {
  CHECK_THROWS_AS(Frame::build(2, {{0, 1}, {1, 0}}), NotAPartialOrder);
  // two incomparable elements with no bounds
  CHECK_THROWS_AS(Frame::build(2, {}), NotALattice);
  CHECK_THROWS_AS(Frame::build(0, {}), NotALattice);
}

TEST_CASE("pseudocircle opens form a valid frame") {
  // oracle: the set lattice itself satisfies distributivity, checked by
  // brute force over all triples of opens
  for (const auto& x : kPC)
    for (const auto& y : kPC)
      for (const auto& z : kPC)
        CHECK(inter(x, uni(y, z)) == uni(inter(x, y), inter(x, z)));

  Frame pc = build_pc7();
  CHECK(pc.size() == 7);
  CHECK(pc.bottom() == pc_index({}));
  CHECK(pc.top() == pc_index({0, 1, 2, 3}));

  // meets and joins agree with set intersection and union everywhere
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      CHECK(pc.meet(i, j) == pc_index(inter(kPC[i], kPC[j])));
      CHECK(pc.join(i, j) == pc_index(uni(kPC[i], kPC[j])));
    }
}

TEST_CASE("bounds of subsets, with empty-bound conventions") {
  Frame b4 = frame_of("B4");
  CHECK(b4.meet_of(Bitset(4)) == b4.top());
  CHECK(b4.join_of(Bitset(4)) == b4.bottom());
  int p = elem(b4, "p"), q = elem(b4, "q");
  Bitset pq(4);
  pq.set(p);
  pq.set(q);
  CHECK(b4.join_of(pq) == b4.top());
  CHECK(b4.meet_of(pq) == b4.bottom());

  // in the pseudocircle frame, meets are set intersections
  Frame pc = build_pc7();
  Bitset two(7);
  two.set(pc_index({0, 1, 2}));
  two.set(pc_index({0, 1, 3}));
  CHECK(pc.meet_of(two) == pc_index(inter({0, 1, 2}, {0, 1, 3})));
  CHECK(pc.meet_of(two) == pc_index({0, 1}));
}

TEST_CASE("implication satisfies the adjunction and its frozen values") {
  for (const auto& inst : catalog()) {
    Frame f = inst.realize_frame();
    for (int a = 0; a < f.size(); ++a) {
      CHECK(f.implies(a, a) == f.top());
      CHECK(f.implies(f.top(), a) == a);
      CHECK(f.pseudocomplement(a) == f.implies(a, f.bottom()));
      for (int b = 0; b < f.size(); ++b)
        for (int x = 0; x < f.size(); ++x)
          CHECK(f.leq(x, f.implies(a, b)) == f.leq(f.meet(x, a), b));
    }
  }

  // oracle for {a,b,c} → {a}: join of all opens w with w ∩ {a,b,c} ⊆ {a}
  Frame pc = build_pc7();
  PointSet expect;
  for (const auto& w : kPC)
    if (inter(w, {0, 1, 2}) == inter(inter(w, {0, 1, 2}), {0})) expect = uni(expect, w);
  CHECK(pc.implies(pc_index({0, 1, 2}), pc_index({0})) == pc_index(expect));
  CHECK(pc_index(expect) == pc_index({0}));
}

TEST_CASE("pseudocomplements") {
  Frame b4 = frame_of("B4");
  CHECK(b4.pseudocomplement(b4.bottom()) == b4.top());
  CHECK(b4.pseudocomplement(b4.top()) == b4.bottom());
  CHECK(b4.pseudocomplement(elem(b4, "p")) == elem(b4, "q"));

  // oracle for ({a})*: join of opens disjoint from {a}
  Frame pc = build_pc7();
  PointSet expect;
  for (const auto& w : kPC)
    if (inter(w, {0}).empty()) expect = uni(expect, w);
  CHECK(pc.pseudocomplement(pc_index({0})) == pc_index(expect));
  CHECK(pc_index(expect) == pc_index({1}));
}

TEST_CASE("connected elements") {
  Frame b4 = frame_of("B4");
  CHECK(b4.element_connected(b4.bottom()));
  CHECK_FALSE(b4.element_connected(b4.top()));  // 1 = p ∨ q with p ∧ q = 0

  Frame pc = build_pc7();
  CHECK(pc.element_connected(pc.top()));
  CHECK_FALSE(pc.element_connected(pc_index({0, 1})));  // {a} ⊔ {b}
}

TEST_CASE("frame classification flags") {
  CHECK_FALSE(frame_of("B4").classify().connected);

  FrameFlags pc = frame_of("PC7").classify();
  CHECK(pc.connected);
  CHECK(pc.locally_connected);

  FrameFlags sie = frame_of("SIE").classify();
  CHECK(sie.connected);
  CHECK(sie.normal);
  CHECK(sie.strongly_locally_connected);

  for (const auto& inst : catalog()) {
    FrameFlags fl = inst.realize_frame().classify();
    if (fl.strongly_locally_connected) CHECK(fl.locally_connected);
    CHECK(fl.locally_connected);  // observed on every finite frame
  }
}
