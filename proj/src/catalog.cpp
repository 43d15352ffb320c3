#include "unico/catalog.hpp"

namespace unico {

namespace {

Bitset pset(int n, std::initializer_list<int> idx) {
  Bitset b(n);
  for (int i : idx) b.set(i);
  return b;
}

Instance make_f2() {
  Instance inst;
  inst.name = "F2";
  inst.frame = Frame::build(2, {{0, 1}}, {"0", "1"});
  return inst;
}

Instance make_sie() {
  Instance inst;
  inst.name = "SIE";
  inst.frame = Frame::build(3, {{0, 1}, {1, 2}}, {"0", "a", "1"});
  return inst;
}

Instance make_b4() {
  Instance inst;
  inst.name = "B4";
  inst.frame = Frame::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "p", "q", "1"});
  return inst;
}

Instance make_pi5() {
  Instance inst;
  inst.name = "PI5";
  int n = 3;  // points a, b, c
  inst.space = validate_space({"a", "b", "c"},
                              {pset(n, {}), pset(n, {1}), pset(n, {0, 1}), pset(n, {1, 2}),
                               pset(n, {0, 1, 2})});
  return inst;
}

Instance make_pc7() {
  Instance inst;
  inst.name = "PC7";
  int n = 4;  // points a, b, c, d
  inst.space = validate_space(
      {"a", "b", "c", "d"},
      {pset(n, {}), pset(n, {0}), pset(n, {1}), pset(n, {0, 1}), pset(n, {0, 1, 2}),
       pset(n, {0, 1, 3}), pset(n, {0, 1, 2, 3})});
  return inst;
}

Instance make_s2_6() {
  Instance inst;
  inst.name = "S2_6";
  int n = 6;  // points a, b, c, d plus the two suspension points e, f
  inst.space = validate_space(
      {"a", "b", "c", "d", "e", "f"},
      {pset(n, {}), pset(n, {0}), pset(n, {1}), pset(n, {0, 1}), pset(n, {0, 1, 2}),
       pset(n, {0, 1, 3}), pset(n, {0, 1, 2, 3}), pset(n, {0, 1, 2, 3, 4}),
       pset(n, {0, 1, 2, 3, 5}), pset(n, {0, 1, 2, 3, 4, 5})});
  return inst;
}

}  // namespace

const std::vector<Instance>& catalog() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> v;
    v.push_back(make_f2());
    v.push_back(make_sie());
    v.push_back(make_b4());
    v.push_back(make_pi5());
    v.push_back(make_pc7());
    v.push_back(make_s2_6());
    return v;
  }();
  return instances;
}

const Instance* catalog_find(const std::string& name) {
  for (const auto& inst : catalog())
    if (inst.name == name) return &inst;
  return nullptr;
}

std::pair<int, std::vector<std::pair<int, int>>> m3_order() {
  return {5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}};
}

}  // namespace unico
