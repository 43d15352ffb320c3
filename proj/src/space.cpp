#include "unico/space.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "unico/connectivity.hpp"
#include "unico/errors.hpp"
#include "unico/properties.hpp"

namespace unico {

int FiniteSpace::point_index(const std::string& label) const {
  for (int i = 0; i < point_count(); ++i)
    if (points[i] == label) return i;
  return -1;
}

namespace {

std::string set_text(const FiniteSpace& s, const Bitset& b) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](int i) {
    if (!first) out += ",";
    out += s.points[i];
    first = false;
  });
  return out + "}";
}

}  // namespace

FiniteSpace validate_space(std::vector<std::string> points, std::vector<Bitset> opens) {
  FiniteSpace s{std::move(points), std::move(opens)};
  int n = s.point_count();
  for (auto& o : s.opens)
    if (o.universe() != n)
      throw ParseError("opens", "open set over the wrong point universe");

  std::sort(s.opens.begin(), s.opens.end(),
            [](const Bitset& a, const Bitset& b) { return a.mask_less(b); });
  s.opens.erase(std::unique(s.opens.begin(), s.opens.end()), s.opens.end());

  auto find = [&](const Bitset& b) {
    return std::find(s.opens.begin(), s.opens.end(), b) != s.opens.end();
  };
  if (!find(Bitset(n)) || !find(s.full()))
    throw MissingEmptyOrFull("opens must include the empty set and the full point set");
  for (std::size_t i = 0; i < s.opens.size(); ++i)
    for (std::size_t j = i + 1; j < s.opens.size(); ++j) {
      if (!find(s.opens[i] | s.opens[j]))
        throw NotClosedUnderUnion(int(i), int(j),
                                  "union of " + set_text(s, s.opens[i]) + " and " +
                                      set_text(s, s.opens[j]) + " is not open");
      if (!find(s.opens[i] & s.opens[j]))
        throw NotClosedUnderIntersection(int(i), int(j),
                                         "intersection of " + set_text(s, s.opens[i]) +
                                             " and " + set_text(s, s.opens[j]) +
                                             " is not open");
    }
  return s;
}

SpaceFrame frame_of_opens(const FiniteSpace& space) {
  int m = int(space.opens.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && space.opens[i].is_subset_of(space.opens[j])) pairs.emplace_back(i, j);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& o : space.opens) labels.push_back(set_text(space, o));
  SpaceFrame sf{Frame::build(m, pairs, std::move(labels)), space.opens};
  return sf;
}

int SpaceFrame::element_of(const Bitset& open_set) const {
  for (int i = 0; i < int(element_sets.size()); ++i)
    if (element_sets[i] == open_set) return i;
  return -1;
}

bool classical_connected(const FiniteSpace& space, const Bitset& subset) {
  for (const auto& u : space.opens) {
    Bitset a = u & subset;
    if (a.empty() || a == subset) continue;
    for (const auto& v : space.opens) {
      Bitset b = v & subset;
      if (b.empty()) continue;
      if ((a & b).empty() && (a | b) == subset) return false;
    }
  }
  return true;
}

std::vector<Bitset> closed_sets(const FiniteSpace& space) {
  std::vector<Bitset> out;
  out.reserve(space.opens.size());
  Bitset full = space.full();
  for (const auto& o : space.opens) out.push_back(full - o);
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    return a.mask_less(b);
  });
  return out;
}

ClassicalUnicoherence classical_unicoherent(const FiniteSpace& space) {
  ClassicalUnicoherence r;
  std::vector<Bitset> closeds = closed_sets(space);
  Bitset full = space.full();
  std::vector<char> conn(closeds.size());
  for (std::size_t i = 0; i < closeds.size(); ++i)
    conn[i] = classical_connected(space, closeds[i]) ? 1 : 0;
  for (std::size_t i = 0; i < closeds.size(); ++i) {
    if (closeds[i].empty() || !conn[i]) continue;
    for (std::size_t j = 0; j < closeds.size(); ++j) {
      if (closeds[j].empty() || !conn[j]) continue;
      if ((closeds[i] | closeds[j]) != full) continue;
      Bitset inter = closeds[i] & closeds[j];
      if (inter.empty() || !classical_connected(space, inter)) {
        r.unicoherent = false;
        r.h = closeds[i];
        r.k = closeds[j];
        return r;
      }
    }
  }
  return r;
}

CrossCheck cross_check(const FiniteSpace& space, int enum_cap) {
  CrossCheck cc;
  SpaceFrame sf = frame_of_opens(space);
  const Frame& f = sf.frame;

  auto points_json = [&](const Bitset& b) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    b.for_each([&](int i) { arr.push_back(space.points[i]); });
    return arr;
  };

  ClassicalUnicoherence cu = classical_unicoherent(space);
  cc.classical_unicoherent = cu.unicoherent;

  PropertyEngine engine(f, enum_cap);
  PropertyResult third = engine.check(PropertyId::III);
  cc.localic_unicoherent = third.verdict == Verdict::Holds;
  cc.unicoherence_agrees = cc.classical_unicoherent == cc.localic_unicoherent;
  if (!cc.unicoherence_agrees) {
    cc.first_disagreement = nlohmann::ordered_json{
        {"check", "unicoherence"},
        {"classical", cc.classical_unicoherent},
        {"localic", cc.localic_unicoherent}};
    if (cu.h) cc.first_disagreement["classical_witness"] =
        nlohmann::ordered_json{{"H", points_json(*cu.h)}, {"K", points_json(*cu.k)}};
    if (third.verdict == Verdict::Fails) cc.first_disagreement["localic_witness"] = third.witness;
  }

  // closed subspace F is a continuum ⟺ c(X ∖ F) is a continuum in the frame
  cc.continua_agree = true;
  Bitset full = space.full();
  for (const Bitset& closed : closed_sets(space)) {
    ++cc.continua_checked;
    bool classical = !closed.empty() && classical_connected(space, closed);
    int e = sf.element_of(full - closed);
    assert(e >= 0);
    Sublocale c = closed_sublocale(f, e);
    bool localic = !c.is_void() && is_connected(c);
    if (classical != localic) {
      cc.continua_agree = false;
      if (cc.first_disagreement.is_null())
        cc.first_disagreement = nlohmann::ordered_json{{"check", "continuum"},
                                                       {"F", points_json(closed)},
                                                       {"classical", classical},
                                                       {"localic", localic}};
      break;
    }
  }
  return cc;
}

}  // namespace unico
