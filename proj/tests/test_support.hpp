#pragma once

#include <vector>

#include "posetsat/bits.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/search.hpp"

namespace posetsat::testing {

// The catalog population shared by the property suites.
inline std::vector<Poset> catalog_sample() {
  std::vector<Poset> out;
  for (int k = 1; k <= 6; ++k) out.push_back(catalog("chain", k));
  for (int m = 1; m <= 6; ++m) out.push_back(catalog("antichain", m));
  out.push_back(catalog("butterfly"));
  out.push_back(catalog("diamond"));
  out.push_back(catalog("fork"));
  for (int t = 1; t <= 3; ++t) out.push_back(catalog("stacked2", t));
  out.push_back(catalog("boolean", 2));
  out.push_back(catalog("boolean", 3));
  return out;
}

inline std::vector<Poset> random_sample(int count, int max_size) {
  std::vector<Poset> out;
  for (int i = 0; i < count; ++i) {
    int size = 1 + i % max_size;
    double density = 0.1 + 0.8 * (i % 9) / 8.0;
    out.push_back(random_poset(size, density, static_cast<std::uint64_t>(i)));
  }
  return out;
}

// Least m with an induced copy of p anywhere in Q_m (no height restriction).
// Only a test helper: cube-width deliberately is not this quantity.
inline int min_embedding_dimension(const Poset& p, int m_cap) {
  for (int m = 0; m <= m_cap; ++m) {
    std::vector<Mask> host;
    LayerStream stream(m, 0, m);
    while (auto x = stream.next()) host.push_back(*x);
    if (search_in_masks(p, host).found()) return m;
  }
  return -1;
}

}  // namespace posetsat::testing
