#pragma once

#include <vector>

#include "posetsat/bits.hpp"
#include "posetsat/poset.hpp"

namespace posetsat {

// A duplicate-free family of subsets of [n], always held in the canonical
// (size ascending, colex ascending) order the greedy builder consumes.
class SetFamily {
 public:
  SetFamily(int ground, std::vector<Mask> members);

  // Members already in canonical order; checked in debug builds only.
  static SetFamily from_sorted(int ground, std::vector<Mask> members);

  int ground() const { return ground_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const;

  bool operator==(const SetFamily& other) const = default;

 private:
  SetFamily() = default;
  int ground_ = 0;
  std::vector<Mask> members_;
};

// The abstract inclusion order on fam.members; element i of the result is
// members[i].
Poset family_order(const SetFamily& fam);

// All subsets of [n] of size <= h-1 (the first h layers); empty when h = 0.
SetFamily first_layers_family(int n, int h);

}  // namespace posetsat
