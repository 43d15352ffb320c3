#include "unico/topology_gen.hpp"

#include <stdexcept>
#include <string>

namespace unico {

std::vector<FiniteSpace> all_topologies(int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("exhaustive topology generation supports 1..4 points");

  std::vector<std::string> points;
  for (int i = 0; i < k; ++i) points.push_back(std::string(1, char('a' + i)));

  int full = (1 << k) - 1;
  // candidate opens besides ∅ and the full set
  std::vector<int> middle;
  for (int m = 1; m < full; ++m) middle.push_back(m);

  std::vector<FiniteSpace> out;
  std::uint64_t families = std::uint64_t(1) << middle.size();
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    std::vector<int> opens{0, full};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((fam >> i) & 1) opens.push_back(middle[i]);

    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j) {
        int u = opens[i] | opens[j], m = opens[i] & opens[j];
        bool has_u = false, has_m = false;
        for (int o : opens) {
          has_u |= o == u;
          has_m |= o == m;
        }
        if (!has_u || !has_m) closed = false;
      }
    if (!closed) continue;

    std::vector<Bitset> sets;
    sets.reserve(opens.size());
    for (int o : opens) sets.push_back(Bitset::from_mask(k, std::uint64_t(o)));
    out.push_back(validate_space(points, std::move(sets)));
  }
  return out;
}

}  // namespace unico
