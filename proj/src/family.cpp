#include "posetsat/family.hpp"

#include <algorithm>
#include <cassert>

namespace posetsat {

SetFamily::SetFamily(int ground, std::vector<Mask> members)
    : ground_(ground), members_(std::move(members)) {
  if (ground < 0 || ground > 64) throw RangeError("family ground must be in [0,64]");
  for (Mask m : members_) {
    if (!subset_eq(m, full_mask(ground))) {
      throw RangeError("family member " + format_set(m) + " exceeds ground " +
                       std::to_string(ground));
    }
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw RangeError("duplicate family member " + format_set(*dup));
  }
}

SetFamily SetFamily::from_sorted(int ground, std::vector<Mask> members) {
  SetFamily fam;
  fam.ground_ = ground;
  fam.members_ = std::move(members);
  assert(std::is_sorted(fam.members_.begin(), fam.members_.end(), canonical_less));
  return fam;
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

Poset family_order(const SetFamily& fam) {
  int k = static_cast<int>(fam.size());
  if (k == 0) throw SizeError("family_order: family must be nonempty");
  Poset p(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && strict_subset(fam.members()[i], fam.members()[j])) p.add_less(i, j);
    }
  }
  p.check_valid();
  return p;
}

SetFamily first_layers_family(int n, int h) {
  if (n < 0 || n > 64 || h < 0 || h > n + 1) {
    throw RangeError("first_layers_family requires 0 <= h <= n+1");
  }
  std::vector<Mask> members;
  if (h > 0) {
    LayerStream stream(n, 0, h - 1);
    while (auto m = stream.next()) members.push_back(*m);
  }
  return SetFamily::from_sorted(n, std::move(members));
}

}  // namespace posetsat
