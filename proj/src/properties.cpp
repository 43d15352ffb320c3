#include "unico/properties.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "unico/errors.hpp"

namespace unico {

const char* property_name(PropertyId id) {
  switch (id) {
    case PropertyId::IPlus: return "I+";
    case PropertyId::I: return "I";
    case PropertyId::IPrime: return "I'";
    case PropertyId::II: return "II";
    case PropertyId::III: return "III";
    case PropertyId::IV: return "IV";
    case PropertyId::V: return "V";
    case PropertyId::VI: return "VI";
    case PropertyId::VII: return "VII";
    case PropertyId::VIII: return "VIII";
    case PropertyId::IX: return "IX";
    case PropertyId::X: return "X";
    case PropertyId::N: return "N";
    case PropertyId::NPlus: return "N+";
  }
  return "?";
}

std::optional<PropertyId> property_from_name(std::string_view name) {
  for (PropertyId id : kAllProperties)
    if (name == property_name(id)) return id;
  return std::nullopt;
}

const PropertyResult* EquivalenceReport::find(PropertyId id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

PropertyEngine::PropertyEngine(const Frame& f, int enum_cap) : frame_(&f), cap_(enum_cap) {
  closed_conn_.assign(f.size(), -1);
  open_conn_.assign(f.size(), -1);
}

const FrameFlags& PropertyEngine::flags() {
  if (!flags_) flags_ = frame_->classify();
  return *flags_;
}

SublocaleLattice* PropertyEngine::lattice_if_enumerable() {
  if (!latt_tried_) {
    latt_tried_ = true;
    if (frame_->size() <= cap_ && frame_->size() <= 62) {
      latt_.emplace(SublocaleLattice::enumerate(*frame_, cap_));
      lconn_.emplace(*latt_);
    }
  }
  return latt_ ? &*latt_ : nullptr;
}

SublocaleLattice& PropertyEngine::lattice() {
  if (auto* p = lattice_if_enumerable()) return *p;
  throw EnumerationCapExceeded(frame_->size(), cap_,
                               "frame has " + std::to_string(frame_->size()) +
                                   " elements, above the enumeration cap of " +
                                   std::to_string(cap_));
}

LatticeConnectivity& PropertyEngine::lattice_connectivity() {
  lattice();
  return *lconn_;
}

bool PropertyEngine::closed_connected(int w) {
  if (closed_conn_[w] < 0)
    closed_conn_[w] = is_connected(closed_sublocale(*frame_, w)) ? 1 : 0;
  return closed_conn_[w] != 0;
}

bool PropertyEngine::open_connected(int a) {
  if (open_conn_[a] < 0) open_conn_[a] = is_connected(open_sublocale(*frame_, a)) ? 1 : 0;
  return open_conn_[a] != 0;
}

const Sublocale& PropertyEngine::boundary_of_open(int a) {
  auto it = bd_open_.find(a);
  if (it == bd_open_.end())
    it = bd_open_.emplace(a, boundary(open_sublocale(*frame_, a))).first;
  return it->second;
}

const ComponentSet& PropertyEngine::components_of(int u) {
  auto it = comps_.find(u);
  if (it == comps_.end()) {
    LatticeConnectivity* certify = nullptr;
    if (lattice_if_enumerable()) certify = &*lconn_;
    it = comps_.emplace(u, components_of_open(*frame_, u, certify)).first;
  }
  return it->second;
}

Bitset PropertyEngine::non_top_universe() const {
  Bitset b = Bitset::full(frame_->size());
  b.reset(frame_->top());
  return b;
}

namespace {

bool non_void(const Bitset& members) { return members.count() > 1; }

// The three conditions of a separation of R by the pair c(a), c(b), with
// both parts required non-void.
bool valid_separation(const Frame& f, const Bitset& r, int a, int b) {
  if (!r.is_subset_of(f.upset(f.meet(a, b)))) return false;
  if (non_void(r & f.upset(f.join(a, b)))) return false;
  return non_void(r & f.upset(a)) && non_void(r & f.upset(b));
}

}  // namespace

const std::vector<Bitset>& PropertyEngine::sep_rows(int w) {
  auto it = sep_.find(w);
  if (it != sep_.end()) return it->second;
  const Frame& f = *frame_;
  int n = f.size();
  std::vector<Bitset> rows(n, Bitset(n));
  const Bitset& r = f.open_members(w);  // L ∖ c(w)
  for (int a = 0; a < n; ++a) {
    Bitset ra = r & f.upset(a);
    if (!non_void(ra)) continue;
    for (int b = 0; b < n; ++b) {
      if (!valid_separation(f, r, a, b)) continue;
      Bitset rb = r & f.upset(b);
      rb.reset(f.top());
      ra.for_each([&](int x) {
        if (x != f.top()) rows[x] |= rb;
      });
    }
  }
  return sep_.emplace(w, std::move(rows)).first->second;
}

namespace {

// Member set of L ∖ S for complemented S; needs the lattice only when S is
// neither open nor closed.
Bitset complement_members(PropertyEngine& eng, const Sublocale& s) {
  if (auto c = clopen_complement(s)) return c->members();
  SublocaleLattice& latt = eng.lattice();
  if (!is_complemented(s, latt))
    throw NotComplemented("separation requires a complemented sublocale");
  return supplement(s, latt).members();
}

}  // namespace

bool PropertyEngine::separates_locale(const Sublocale& s) {
  Bitset r = complement_members(*this, s);
  return !is_connected(Sublocale(*frame_, r));
}

bool PropertyEngine::separates_points(const Sublocale& s, int x, int y, bool use_cache) {
  const Frame& f = *frame_;
  if (x == f.top() || y == f.top())
    throw std::invalid_argument("separates_points requires x, y different from the top");
  if (use_cache) {
    int m = f.meet_of(s.members());
    if (s.members() == f.upset(m)) return sep_rows(m)[x].test(y);
  }
  Bitset r = complement_members(*this, s);
  for (int a = 0; a < f.size(); ++a) {
    if (!(r.test(x) && f.upset(a).test(x))) continue;
    for (int b = 0; b < f.size(); ++b) {
      if (!(r.test(y) && f.upset(b).test(y))) continue;
      if (valid_separation(f, r, a, b)) return true;
    }
  }
  return false;
}

bool PropertyEngine::separates_sets(const Sublocale& s, const Sublocale& x_set,
                                    const Sublocale& y_set) {
  const Frame& f = *frame_;
  Bitset xs = x_set.members(), ys = y_set.members();
  xs.reset(f.top());
  ys.reset(f.top());
  if (xs.empty() || ys.empty()) return false;
  bool all = true;
  xs.for_each([&](int x) {
    if (!all) return;
    ys.for_each([&](int y) {
      if (!all) return;
      if (!separates_points(s, x, y)) all = false;
    });
  });
  return all;
}

ordered_json PropertyEngine::elem(int x) const {
  return ordered_json{{"id", x}, {"label", frame_->label(x)}};
}

ordered_json PropertyEngine::elem_set(const Bitset& b) const {
  ordered_json ids = ordered_json::array(), labels = ordered_json::array();
  b.for_each([&](int i) {
    ids.push_back(i);
    labels.push_back(frame_->label(i));
  });
  return ordered_json{{"ids", ids}, {"labels", labels}};
}

PropertyResult PropertyEngine::check(PropertyId id) {
  try {
    return run(id);
  } catch (const EnumerationCapExceeded&) {
    return PropertyResult{id, Verdict::CapExceeded, nullptr};
  }
}

PropertyResult PropertyEngine::run(PropertyId id) {
  switch (id) {
    case PropertyId::IPlus: return prop_I_plus();
    case PropertyId::I: return prop_I();
    case PropertyId::IPrime: return prop_I_prime();
    case PropertyId::II: return prop_II();
    case PropertyId::III: return prop_III();
    case PropertyId::IV: return prop_IV();
    case PropertyId::V: return prop_V();
    case PropertyId::VI: return prop_VI();
    case PropertyId::VII: return prop_VII();
    case PropertyId::VIII: return prop_VIII();
    case PropertyId::IX: return prop_IX();
    case PropertyId::X: return prop_X();
    case PropertyId::N: return prop_N(false);
    case PropertyId::NPlus: return prop_N(true);
  }
  throw std::logic_error("unknown property");
}

// Disjoint closed pair c(u), c(v) whose parts separate no pair of points may
// not separate any pair of points jointly.
PropertyResult PropertyEngine::prop_I_plus() {
  const Frame& f = *frame_;
  int n = f.size(), top = f.top();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (f.join(u, v) != top) continue;  // c(u) ∩ c(v) = ∅
      const auto& su = sep_rows(u);
      const auto& sv = sep_rows(v);
      const auto& suv = sep_rows(f.meet(u, v));
      for (int x = 0; x < n; ++x) {
        if (x == top) continue;
        for (int y = 0; y < n; ++y) {
          if (y == top) continue;
          if (su[x].test(y) || sv[x].test(y)) continue;
          if (suv[x].test(y))
            return {PropertyId::IPlus, Verdict::Fails,
                    ordered_json{{"u", elem(u)}, {"v", elem(v)}, {"x", elem(x)}, {"y", elem(y)}}};
        }
      }
    }
  return {PropertyId::IPlus, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_I() {
  const Frame& f = *frame_;
  SublocaleLattice& latt = lattice();
  int n = f.size(), top = f.top();
  Bitset nt = non_top_universe();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (f.join(u, v) != top) continue;
      const auto& su = sep_rows(u);
      const auto& sv = sep_rows(v);
      const auto& suv = sep_rows(f.meet(u, v));
      // good[x]: the y for which the hypothesis holds and the conclusion fails
      std::vector<Bitset> good(n);
      for (int x = 0; x < n; ++x) good[x] = (suv[x] - (su[x] | sv[x])) & nt;
      for (int xi = 0; xi < latt.size(); ++xi) {
        const Sublocale& xs = latt.at(xi);
        if (xs.is_void()) continue;
        Bitset allowed = nt;
        Bitset xm = xs.members() & nt;
        bool alive = true;
        xm.for_each([&](int x) {
          if (!alive) return;
          allowed &= good[x];
          if (allowed.empty()) alive = false;
        });
        if (!alive || allowed.empty()) continue;
        for (int yi = 0; yi < latt.size(); ++yi) {
          const Sublocale& ys = latt.at(yi);
          if (ys.is_void()) continue;
          if ((ys.members() & nt).is_subset_of(allowed))
            return {PropertyId::I, Verdict::Fails,
                    ordered_json{{"u", elem(u)},
                                 {"v", elem(v)},
                                 {"X", elem_set(xs.members())},
                                 {"Y", elem_set(ys.members())}}};
        }
      }
    }
  return {PropertyId::I, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_I_prime() {
  const Frame& f = *frame_;
  int n = f.size(), top = f.top();
  auto separates_whole = [&](int w) { return !open_connected(w); };  // L ∖ c(w) = o(w)
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (f.join(u, v) != top) continue;
      if (separates_whole(u) || separates_whole(v)) continue;
      if (separates_whole(f.meet(u, v)))
        return {PropertyId::IPrime, Verdict::Fails,
                ordered_json{{"u", elem(u)}, {"v", elem(v)}}};
    }
  return {PropertyId::IPrime, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_II() {
  const Frame& f = *frame_;
  for (int u = 0; u < f.size(); ++u) {
    if (u == f.top() || !closed_connected(u)) continue;  // c(u) must be a continuum
    const ComponentSet& cs = components_of(u);
    for (std::size_t k = 0; k < cs.components.size(); ++k) {
      const Sublocale& bd = boundary_of_open(cs.supports[k]);
      if (!(non_void(bd.members()) && is_connected(bd)))
        return {PropertyId::II, Verdict::Fails,
                ordered_json{{"u", elem(u)},
                             {"component", elem(cs.supports[k])},
                             {"boundary", elem_set(bd.members())}}};
    }
  }
  return {PropertyId::II, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_III() {
  const Frame& f = *frame_;
  for (int u = 0; u < f.size(); ++u) {
    if (u == f.top() || !closed_connected(u)) continue;
    for (int v = 0; v < f.size(); ++v) {
      if (v == f.top() || !closed_connected(v)) continue;
      if (f.meet(u, v) != f.bottom()) continue;  // c(u) ∨ c(v) = L
      int w = f.join(u, v);                      // c(u) ∩ c(v) = c(u ∨ v)
      if (w == f.top() || !closed_connected(w))
        return {PropertyId::III, Verdict::Fails, ordered_json{{"u", elem(u)}, {"v", elem(v)}}};
    }
  }
  return {PropertyId::III, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_IV() {
  const Frame& f = *frame_;
  for (int u = 0; u < f.size(); ++u) {
    if (u == f.top()) continue;  // c(u) non-void
    const ComponentSet& cs = components_of(u);
    for (std::size_t i = 0; i < cs.components.size(); ++i)
      for (std::size_t j = i + 1; j < cs.components.size(); ++j) {
        const Sublocale& b1 = boundary_of_open(cs.supports[i]);
        const Sublocale& b2 = boundary_of_open(cs.supports[j]);
        if (b1 != b2) continue;
        if (!(non_void(b1.members()) && is_connected(b1)))
          return {PropertyId::IV, Verdict::Fails,
                  ordered_json{{"u", elem(u)},
                               {"component1", elem(cs.supports[i])},
                               {"component2", elem(cs.supports[j])}}};
      }
  }
  return {PropertyId::IV, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_V() {
  SublocaleLattice& latt = lattice();
  LatticeConnectivity& lc = *lconn_;
  std::vector<Bitset> bd(latt.size());
  std::vector<signed char> eligible(latt.size());
  for (int i = 0; i < latt.size(); ++i) {
    eligible[i] = latt.complemented(i) && lc.connected(i);
    if (eligible[i]) bd[i] = boundary(latt.at(i)).members();
  }
  for (int i = 0; i < latt.size(); ++i) {
    if (!eligible[i]) continue;
    for (int j = 0; j < latt.size(); ++j) {
      if (!eligible[j]) continue;
      if (non_void(latt.at(i).members() & latt.at(j).members())) continue;  // disjoint
      if (!bd[i].is_subset_of(bd[j])) continue;
      if (!is_connected(Sublocale(*frame_, bd[i])))
        return {PropertyId::V, Verdict::Fails,
                ordered_json{{"C", elem_set(latt.at(i).members())},
                             {"D", elem_set(latt.at(j).members())}}};
    }
  }
  return {PropertyId::V, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_VI() {
  SublocaleLattice& latt = lattice();
  LatticeConnectivity& lc = *lconn_;
  for (int i = 0; i < latt.size(); ++i) {
    if (!latt.complemented(i)) continue;
    if (!lc.connected(i) || !lc.connected(latt.supplement_index(i))) continue;  // simple
    if (!is_connected(boundary(latt.at(i))))
      return {PropertyId::VI, Verdict::Fails,
              ordered_json{{"C", elem_set(latt.at(i).members())}}};
  }
  return {PropertyId::VI, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_VII() {
  const Frame& f = *frame_;
  for (int a = 0; a < f.size(); ++a) {
    if (a == f.bottom() || !open_connected(a)) continue;  // region o(a)
    if (!closed_connected(a)) continue;                   // simple: L ∖ o(a) = c(a) connected
    if (!is_connected(boundary_of_open(a)))
      return {PropertyId::VII, Verdict::Fails, ordered_json{{"region", elem(a)}}};
  }
  return {PropertyId::VII, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_VIII() {
  const Frame& f = *frame_;
  for (int a = 0; a < f.size(); ++a) {
    if (a == f.bottom() || !open_connected(a)) continue;
    for (int b = 0; b < f.size(); ++b) {
      if (b == f.bottom() || !open_connected(b)) continue;
      if (f.meet(a, b) != f.bottom()) continue;  // disjoint regions
      if (boundary_of_open(a) != boundary_of_open(b)) continue;
      if (!is_connected(boundary_of_open(a)))
        return {PropertyId::VIII, Verdict::Fails,
                ordered_json{{"A", elem(a)}, {"B", elem(b)}}};
    }
  }
  return {PropertyId::VIII, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_IX() {
  const Frame& f = *frame_;
  for (int a = 0; a < f.size(); ++a) {
    if (a == f.bottom() || !open_connected(a)) continue;
    for (int b = 0; b < f.size(); ++b) {
      if (b == f.bottom() || !open_connected(b)) continue;
      if (non_void(boundary_of_open(a).members() & boundary_of_open(b).members())) continue;
      if (!open_connected(f.meet(a, b)))  // A ∩ B = o(a ∧ b)
        return {PropertyId::IX, Verdict::Fails, ordered_json{{"A", elem(a)}, {"B", elem(b)}}};
    }
  }
  return {PropertyId::IX, Verdict::Holds, nullptr};
}

PropertyResult PropertyEngine::prop_X() {
  const Frame& f = *frame_;
  for (int a = 0; a < f.size(); ++a) {
    if (a == f.bottom() || !open_connected(a)) continue;
    for (int b = 0; b < f.size(); ++b) {
      if (b == f.bottom() || !open_connected(b)) continue;
      if (f.join(a, b) != f.top()) continue;  // o(a) ∨ o(b) = L
      int m = f.meet(a, b);                   // o(a) ∩ o(b) = o(a ∧ b)
      if (m == f.bottom() || !open_connected(m))
        return {PropertyId::X, Verdict::Fails, ordered_json{{"u", elem(a)}, {"v", elem(b)}}};
    }
  }
  return {PropertyId::X, Verdict::Holds, nullptr};
}

// N / N+: any two disjoint closed sets are separated, at the level of
// sublocales X ⊆ c(u), Y ⊆ c(v) (N) or of points (N+), by some continuum
// inside L ∖ (c(u) ∨ c(v)) = o(u ∧ v).
PropertyResult PropertyEngine::prop_N(bool point_form) {
  const Frame& f = *frame_;
  int n = f.size(), top = f.top();
  PropertyId id = point_form ? PropertyId::NPlus : PropertyId::N;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (f.join(u, v) != top) continue;  // c(u) ∩ c(v) = ∅
      const Bitset& inside = f.open_members(f.meet(u, v));
      std::vector<int> continua;
      for (int w = 0; w < n; ++w)
        if (w != top && closed_connected(w) && f.upset(w).is_subset_of(inside))
          continua.push_back(w);
      if (point_form) {
        Bitset xs = f.upset(u), ys = f.upset(v);
        xs.reset(top);
        ys.reset(top);
        bool bad = false;
        ordered_json witness;
        xs.for_each([&](int x) {
          if (bad) return;
          ys.for_each([&](int y) {
            if (bad) return;
            for (int w : continua)
              if (sep_rows(w)[x].test(y)) return;
            bad = true;
            witness = ordered_json{{"u", elem(u)}, {"v", elem(v)}, {"x", elem(x)}, {"y", elem(y)}};
          });
        });
        if (bad) return {id, Verdict::Fails, witness};
      } else {
        SublocaleLattice& latt = lattice();
        for (int xi = 0; xi < latt.size(); ++xi) {
          const Sublocale& xset = latt.at(xi);
          if (xset.is_void() || !xset.members().is_subset_of(f.upset(u))) continue;
          Bitset xm = xset.members();
          xm.reset(top);
          for (int yi = 0; yi < latt.size(); ++yi) {
            const Sublocale& yset = latt.at(yi);
            if (yset.is_void() || !yset.members().is_subset_of(f.upset(v))) continue;
            Bitset ym = yset.members();
            ym.reset(top);
            bool found = false;
            for (int w : continua) {
              const auto& rows = sep_rows(w);
              xm.for_each([&](int x) {
                if (found) return;
                if ((rows[x] & ym).any()) found = true;
              });
              if (found) break;
            }
            if (!found)
              return {id, Verdict::Fails,
                      ordered_json{{"u", elem(u)},
                                   {"v", elem(v)},
                                   {"X", elem_set(xset.members())},
                                   {"Y", elem_set(yset.members())}}};
          }
        }
      }
    }
  return {id, Verdict::Holds, nullptr};
}

bool PropertyEngine::subset_variant_I() {
  const Frame& f = *frame_;
  int n = f.size(), top = f.top();
  if (n > 12)
    throw EnumerationCapExceeded(n, 12, "the subset-quantified variant is capped at 12 elements");
  Bitset nt = non_top_universe();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (f.join(u, v) != top) continue;
      const auto& su = sep_rows(u);
      const auto& sv = sep_rows(v);
      const auto& suv = sep_rows(f.meet(u, v));
      std::vector<Bitset> good(n);
      for (int x = 0; x < n; ++x) good[x] = (suv[x] - (su[x] | sv[x])) & nt;
      std::uint64_t nt_mask = nt.mask();
      for (std::uint64_t xm = nt_mask; xm; xm = (xm - 1) & nt_mask) {
        Bitset allowed = nt;
        Bitset xb = Bitset::from_mask(n, xm);
        bool alive = true;
        xb.for_each([&](int x) {
          if (!alive) return;
          allowed &= good[x];
          if (allowed.empty()) alive = false;
        });
        // any nonempty Y ⊆ allowed witnesses a violation
        if (alive && allowed.any()) return false;
      }
    }
  return true;
}

std::vector<std::string> consistency_violations(const FrameFlags& pre,
                                                const std::vector<PropertyResult>& results) {
  std::vector<std::string> out;
  if (!(pre.connected && pre.locally_connected)) return out;

  auto decided = [&](PropertyId id) -> std::optional<bool> {
    for (const auto& r : results)
      if (r.id == id && r.verdict != Verdict::CapExceeded) return r.verdict == Verdict::Holds;
    return std::nullopt;
  };

  static constexpr std::array<PropertyId, 10> main_ten = {
      PropertyId::I,    PropertyId::II, PropertyId::III, PropertyId::IV,  PropertyId::V,
      PropertyId::VI,   PropertyId::VII, PropertyId::VIII, PropertyId::IX, PropertyId::X};
  std::optional<bool> common;
  for (PropertyId id : main_ten) {
    auto d = decided(id);
    if (!d) continue;
    if (!common) common = d;
    if (*common != *d) {
      std::string msg = "properties I-X disagree:";
      for (PropertyId p : main_ten)
        if (auto dv = decided(p))
          msg += std::string(" ") + property_name(p) + "=" + (*dv ? "T" : "F");
      out.push_back(msg);
      break;
    }
  }

  auto implies = [&](PropertyId a, PropertyId b) {
    auto da = decided(a), db = decided(b);
    if (da && db && *da && !*db)
      out.push_back(std::string(property_name(a)) + " holds but " + property_name(b) +
                    " fails");
  };

  implies(PropertyId::IPlus, PropertyId::I);
  implies(PropertyId::I, PropertyId::IPrime);
  implies(PropertyId::NPlus, PropertyId::N);
  implies(PropertyId::N, PropertyId::III);
  if (pre.strongly_locally_connected) implies(PropertyId::IPrime, PropertyId::IPlus);
  if (pre.normal) {
    implies(PropertyId::II, PropertyId::N);
    implies(PropertyId::N, PropertyId::II);
  }
  if (pre.normal && pre.strongly_locally_connected) {
    implies(PropertyId::II, PropertyId::NPlus);
    implies(PropertyId::NPlus, PropertyId::II);
  }
  return out;
}

EquivalenceReport PropertyEngine::verify_equivalences(std::vector<PropertyId> props) {
  if (props.empty()) props.assign(kAllProperties.begin(), kAllProperties.end());
  EquivalenceReport rep;
  rep.preconditions = flags();
  for (PropertyId id : kAllProperties)
    if (std::find(props.begin(), props.end(), id) != props.end())
      rep.results.push_back(check(id));
  rep.violations = consistency_violations(rep.preconditions, rep.results);
  rep.consistent = rep.violations.empty();
  return rep;
}

namespace {

int wid(const ordered_json& w, const char* key) { return w.at(key).at("id").get<int>(); }

Bitset wset(const ordered_json& w, const char* key, int n) {
  Bitset b(n);
  for (const auto& i : w.at(key).at("ids")) b.set(i.get<int>());
  return b;
}

}  // namespace

bool PropertyEngine::replay(const PropertyResult& r) {
  if (r.verdict != Verdict::Fails) return false;
  const Frame& f = *frame_;
  const ordered_json& w = r.witness;
  int top = f.top();

  auto closed_continuum = [&](int u) {
    return u != top && is_connected(closed_sublocale(f, u));
  };
  auto region = [&](int a) {
    return a != f.bottom() && is_connected(open_sublocale(f, a));
  };
  auto is_component_of = [&](int u, int v) {
    const ComponentSet& cs = components_of(u);
    return std::find(cs.supports.begin(), cs.supports.end(), v) != cs.supports.end();
  };

  switch (r.id) {
    case PropertyId::IPlus: {
      int u = wid(w, "u"), v = wid(w, "v"), x = wid(w, "x"), y = wid(w, "y");
      if (f.join(u, v) != top) return false;
      if (separates_points(closed_sublocale(f, u), x, y, false)) return false;
      if (separates_points(closed_sublocale(f, v), x, y, false)) return false;
      Sublocale both = join(closed_sublocale(f, u), closed_sublocale(f, v));
      return separates_points(both, x, y, false);
    }
    case PropertyId::I: {
      int u = wid(w, "u"), v = wid(w, "v");
      Bitset xs = wset(w, "X", f.size()), ys = wset(w, "Y", f.size());
      if (!is_sublocale(f, xs) || !is_sublocale(f, ys)) return false;
      Sublocale sx(f, xs), sy(f, ys);
      if (sx.is_void() || sy.is_void() || f.join(u, v) != top) return false;
      Bitset xm = xs, ym = ys;
      xm.reset(top);
      ym.reset(top);
      bool hyp = true;
      xm.for_each([&](int x) {
        if (!hyp) return;
        ym.for_each([&](int y) {
          if (!hyp) return;
          if (separates_points(closed_sublocale(f, u), x, y, false) ||
              separates_points(closed_sublocale(f, v), x, y, false))
            hyp = false;
        });
      });
      if (!hyp) return false;
      return separates_sets(join(closed_sublocale(f, u), closed_sublocale(f, v)), sx, sy);
    }
    case PropertyId::IPrime: {
      int u = wid(w, "u"), v = wid(w, "v");
      if (f.join(u, v) != top) return false;
      if (separates_locale(closed_sublocale(f, u))) return false;
      if (separates_locale(closed_sublocale(f, v))) return false;
      return separates_locale(join(closed_sublocale(f, u), closed_sublocale(f, v)));
    }
    case PropertyId::II: {
      int u = wid(w, "u");
      int v = w.at("component").at("id").get<int>();
      if (!closed_continuum(u) || !is_component_of(u, v)) return false;
      Sublocale bd = boundary(open_sublocale(f, v));
      return !(bd.members().count() > 1 && is_connected(bd));
    }
    case PropertyId::III: {
      int u = wid(w, "u"), v = wid(w, "v");
      if (!closed_continuum(u) || !closed_continuum(v)) return false;
      if (f.meet(u, v) != f.bottom()) return false;
      int j = f.join(u, v);
      return !closed_continuum(j);
    }
    case PropertyId::IV: {
      int u = wid(w, "u"), v1 = w.at("component1").at("id").get<int>(),
          v2 = w.at("component2").at("id").get<int>();
      if (u == top || v1 == v2) return false;
      if (!is_component_of(u, v1) || !is_component_of(u, v2)) return false;
      Sublocale b1 = boundary(open_sublocale(f, v1)), b2 = boundary(open_sublocale(f, v2));
      if (b1 != b2) return false;
      return !(b1.members().count() > 1 && is_connected(b1));
    }
    case PropertyId::V: {
      Bitset cs = wset(w, "C", f.size()), ds = wset(w, "D", f.size());
      if (!is_sublocale(f, cs) || !is_sublocale(f, ds)) return false;
      Sublocale c(f, cs), d(f, ds);
      SublocaleLattice& latt = lattice();
      if (!is_complemented(c, latt) || !is_complemented(d, latt)) return false;
      if (!is_connected(c) || !is_connected(d)) return false;
      if (!intersect(c, d).is_void()) return false;
      Sublocale bc = boundary(c), bd_ = boundary(d);
      if (!bc.subset_of(bd_)) return false;
      return !is_connected(bc);
    }
    case PropertyId::VI: {
      Bitset cs = wset(w, "C", f.size());
      if (!is_sublocale(f, cs)) return false;
      Sublocale c(f, cs);
      SublocaleLattice& latt = lattice();
      if (!is_complemented(c, latt)) return false;
      if (!is_connected(c) || !is_connected(supplement(c, latt))) return false;
      return !is_connected(boundary(c));
    }
    case PropertyId::VII: {
      int a = w.at("region").at("id").get<int>();
      if (!region(a) || !is_connected(closed_sublocale(f, a))) return false;
      return !is_connected(boundary(open_sublocale(f, a)));
    }
    case PropertyId::VIII: {
      int a = wid(w, "A"), b = wid(w, "B");
      if (!region(a) || !region(b) || f.meet(a, b) != f.bottom()) return false;
      Sublocale ba = boundary(open_sublocale(f, a)), bb = boundary(open_sublocale(f, b));
      if (ba != bb) return false;
      return !is_connected(ba);
    }
    case PropertyId::IX: {
      int a = wid(w, "A"), b = wid(w, "B");
      if (!region(a) || !region(b)) return false;
      Sublocale ba = boundary(open_sublocale(f, a)), bb = boundary(open_sublocale(f, b));
      if ((ba.members() & bb.members()).count() > 1) return false;
      return !is_connected(open_sublocale(f, f.meet(a, b)));
    }
    case PropertyId::X: {
      int u = wid(w, "u"), v = wid(w, "v");
      if (!region(u) || !region(v) || f.join(u, v) != top) return false;
      int m = f.meet(u, v);
      return !region(m);
    }
    case PropertyId::N:
    case PropertyId::NPlus: {
      int u = wid(w, "u"), v = wid(w, "v");
      if (f.join(u, v) != top) return false;
      Bitset xm(f.size()), ym(f.size());
      if (r.id == PropertyId::NPlus) {
        xm.set(wid(w, "x"));
        ym.set(wid(w, "y"));
      } else {
        xm = wset(w, "X", f.size());
        ym = wset(w, "Y", f.size());
        if (!is_sublocale(f, xm) || !is_sublocale(f, ym)) return false;
        if (xm.count() <= 1 || ym.count() <= 1) return false;
        if (!xm.is_subset_of(f.upset(u)) || !ym.is_subset_of(f.upset(v))) return false;
      }
      xm.reset(top);
      ym.reset(top);
      if (r.id == PropertyId::NPlus &&
          (!f.upset(u).test(xm.lowest()) || !f.upset(v).test(ym.lowest())))
        return false;
      const Bitset& inside = f.open_members(f.meet(u, v));
      for (int cw = 0; cw < f.size(); ++cw) {
        if (cw == top || !is_connected(closed_sublocale(f, cw))) continue;
        if (!f.upset(cw).is_subset_of(inside)) continue;
        bool sep = false;
        xm.for_each([&](int x) {
          if (sep) return;
          ym.for_each([&](int y) {
            if (sep) return;
            if (separates_points(closed_sublocale(f, cw), x, y, false)) sep = true;
          });
        });
        if (sep) return false;  // a separating continuum exists after all
      }
      return true;
    }
  }
  return false;
}

}  // namespace unico
