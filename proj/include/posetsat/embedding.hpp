#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetsat/bits.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/search.hpp"

namespace posetsat {

// An injective assignment of poset elements to subsets of [ground]
// realizing an induced copy: images[i] strictly included in images[j] iff
// p_i < p_j.
struct Embedding {
  int ground = 0;
  std::vector<Mask> images;

  bool operator==(const Embedding&) const = default;
};

bool embedding_valid(const Poset& p, const Embedding& e);

struct HeightWidthResult {
  int cube_height = 0;
  int cube_width = 0;
  Embedding witness;
};

// Exact induced-copy search; returns the pattern->host element map or
// nullopt. Throws BudgetExhaustedError when a node budget is given and hit.
std::optional<std::vector<int>> find_induced_copy(const Poset& pattern, const Poset& host,
                                                  std::optional<std::uint64_t> budget = std::nullopt);

// The constructive embedding into ground [k] with image sizes <= k-1:
// strip a unique maximal element and give it the full remaining ground,
// otherwise use down-sets.
Embedding construct_height_embedding(const Poset& p);

// Least h such that P embeds induced into the sets of size <= h of some
// cube. Exact; p.size() <= 16.
int cube_height(const Poset& p);

// Least ground size admitting such an embedding at h = cube_height(p),
// with the lexicographically-first witness.
HeightWidthResult cube_width(const Poset& p);

struct SeparationCheck {
  bool separates = false;
  // Per ground coordinate, the first (i, j) with images[i] \ images[j] = {a}.
  std::vector<std::optional<std::pair<int, int>>> witness;
  std::vector<int> unwitnessed;
};

SeparationCheck check_separation(const Embedding& e);

// Repeatedly deletes the lowest-indexed coordinate with no singleton
// difference witness and compacts the ground; fixed point separates.
Embedding minimize_ground_set(const Embedding& e);

// 2 * sqrt(w - 2); requires w >= 2.
double separation_lower_bound(int w);

struct LedgerEntry {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct BoundsReport {
  int poset_size = 0;
  int poset_height = 0;
  int poset_width = 0;
  int h_star = 0;
  int w_star = 0;
  Embedding witness;
  std::vector<LedgerEntry> entries;
  LedgerEntry conjecture_41;
};

// Evaluates every inequality relating h*, w*, |P|, w(P) plus the w* <= |P|
// conjecture status.
BoundsReport width_bound_ledger(const Poset& p);

}  // namespace posetsat
