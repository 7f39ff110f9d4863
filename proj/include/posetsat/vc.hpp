#pragma once

#include <optional>

#include "posetsat/bits.hpp"
#include "posetsat/family.hpp"
#include "posetsat/poset.hpp"

namespace posetsat {

struct VcReport {
  // -1 for the empty family (nothing is shattered, not even the empty set).
  int dimension = -1;
  std::optional<Mask> shattered_witness;
  u128 sauer_shelah_sum = 0;
  std::uint64_t family_size = 0;
};

// True iff {A & s : A in fam} has all 2^|s| values.
bool shatters(const SetFamily& fam, Mask s);

// Exact VC-dimension with the colex-first witness, found level by level
// with support filtering and downward-closure (Apriori) pruning.
VcReport vc_dimension(const SetFamily& fam);

// Sum of binom(n, i) for i <= d, exact.
u128 sauer_shelah_bound(int n, int d);

struct Claim31Report {
  int vc = -1;
  int w_star = 0;
  bool holds = false;  // vc < w_star
  std::uint64_t family_size = 0;
  u128 sauer_sum_below_wstar = 0;  // sum_{i < w*} binom(n, i)
  u128 poly_bound = 0;             // 2 n^{w*-1}
  bool n_at_least_2wstar = false;
  // |F| <= sum <= 2 n^{w*-1}; the second link is asserted only when
  // n >= 2 w*.
  bool size_chain_holds = false;
};

// VC-dimension of a saturated family that contains the first h* layers,
// checked against the cube-width of its forbidden poset.
Claim31Report claim31_check(const Poset& p, const SetFamily& fam);

}  // namespace posetsat
