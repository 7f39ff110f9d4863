#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetsat/errors.hpp"

namespace posetsat {

// Patterns fed to the embedding search are capped here; hosts (e.g. the
// inclusion order of a large family) may be arbitrarily big.
inline constexpr int kPatternSizeCap = 16;

// A finite strict partial order on 0-indexed elements, stored as the full
// transitive closure.
class Poset {
 public:
  // The discrete order (antichain) on `size` elements.
  explicit Poset(int size);

  int size() const { return size_; }

  // Strict order: p_i < p_j.
  bool less(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
  }

  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  // Raw relation insertion for builders; callers must re-close and validate.
  void add_less(int i, int j);
  void close_transitively();
  // Throws CycleError unless irreflexive and antisymmetric.
  void check_valid() const;

  bool operator==(const Poset& other) const = default;

 private:
  int size_;
  int words_;
  std::vector<std::uint64_t> bits_;  // row i: bits j with i < j
};

struct PosetSpec {
  int size = 0;
  std::vector<std::pair<int, int>> relations;  // (i, j) meaning p_i < p_j
};

// Transitive closure of the given relations; throws IndexError for
// out-of-range indices and CycleError if the closure is not a partial order.
Poset poset_from_spec(const PosetSpec& spec);

// Largest chain cardinality.
int height(const Poset& p);

// Largest antichain cardinality (exact branch-and-bound; size <= 64).
int width(const Poset& p);

std::vector<int> maximal_elements(const Poset& p);

// Named posets. Canonical numbering:
//   chain:k       0 < 1 < ... < k-1
//   antichain:m   no relations
//   butterfly     0,1 < 2,3
//   diamond       0 < {1,2} < 3, with 1,2 incomparable
//   fork          0 < 1 and 0 < 2
//   stacked2:t    t stacked 2-antichains {2i, 2i+1}, level i below level j for i<j
//   boolean:m     2^m elements, element x < y iff x is a strict submask of y
Poset catalog(const std::string& name, std::optional<int> parameter = std::nullopt);

// Deterministic random poset: random linear extension, forward edges kept
// with probability edge_density, then transitively closed. 1 <= size <= 16.
Poset random_poset(int size, double edge_density, std::uint64_t seed);

// One representative per isomorphism class, 1 <= size <= 6, in canonical
// form order. Counts match 1, 2, 5, 16, 63, 318.
std::vector<Poset> enumerate_posets(int size);

// Text DSL round-trip: "k; i<j i<j ...".
std::string poset_to_dsl(const Poset& p);

}  // namespace posetsat
