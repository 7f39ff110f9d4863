#include "posetsat/vc.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "posetsat/embedding.hpp"

namespace posetsat {

namespace {

constexpr int kVcDimensionCap = 20;
constexpr std::size_t kLevelCandidateCap = 1u << 22;

int compress_trace(Mask trace, Mask s) {
  // Pack the bits of trace at the positions of s into a dense index.
  int idx = 0, out_bit = 0;
  while (s != 0) {
    int b = std::countr_zero(s);
    s &= s - 1;
    idx |= static_cast<int>(trace >> b & 1) << out_bit;
    ++out_bit;
  }
  return idx;
}

}  // namespace

bool shatters(const SetFamily& fam, Mask s) {
  int t = popcount(s);
  if (t > kVcDimensionCap) throw SizeError("shatters: set size capped at 20");
  if (fam.size() == 0) return false;
  if (t == 0) return true;
  std::vector<bool> seen(std::size_t{1} << t, false);
  std::size_t missing = std::size_t{1} << t;
  for (Mask a : fam.members()) {
    int idx = compress_trace(a & s, s);
    if (!seen[idx]) {
      seen[idx] = true;
      if (--missing == 0) return true;
    }
  }
  return false;
}

VcReport vc_dimension(const SetFamily& fam) {
  VcReport report;
  report.family_size = fam.size();
  if (fam.size() == 0) return report;
  report.dimension = 0;
  report.shattered_witness = Mask{0};

  // Only coordinates present in some member and absent from another can
  // take part in a shattered set.
  Mask all_or = 0, all_and = ~Mask{0};
  for (Mask a : fam.members()) {
    all_or |= a;
    all_and &= a;
  }
  Mask support = all_or & ~all_and;

  std::vector<Mask> level = {0};  // shattered sets of the current size
  for (int d = 1; level.size() > 0; ++d) {
    if (d > kVcDimensionCap) throw SizeError("vc_dimension capped at 20");
    std::vector<Mask> candidates;
    for (Mask prev : level) {
      int top = prev == 0 ? -1 : 63 - std::countl_zero(prev);
      Mask ext = support & ~full_mask(top + 1);
      while (ext != 0) {
        int b = std::countr_zero(ext);
        ext &= ext - 1;
        candidates.push_back(prev | Mask{1} << b);
        if (candidates.size() > kLevelCandidateCap) {
          throw SizeError("vc_dimension candidate space exceeds the practical bound");
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::unordered_set<Mask> prev_set(level.begin(), level.end());
    std::vector<Mask> next;
    for (Mask c : candidates) {
      // Downward closure: all (d-1)-subsets must already be shattered.
      bool closed = true;
      Mask rest = c;
      while (rest != 0 && closed) {
        Mask bit = rest & (~rest + 1);
        rest &= rest - 1;
        if (!prev_set.count(c & ~bit)) closed = false;
      }
      if (closed && shatters(fam, c)) next.push_back(c);
    }
    if (next.empty()) break;
    report.dimension = d;
    report.shattered_witness = next.front();  // candidates are in colex order
    level = std::move(next);
  }
  report.sauer_shelah_sum = sauer_shelah_bound(fam.ground(), report.dimension);
  return report;
}

u128 sauer_shelah_bound(int n, int d) {
  if (n < 0 || n > 64 || d > n) throw RangeError("sauer_shelah_bound requires 0 <= d <= n <= 64");
  u128 sum = 0;
  for (int i = 0; i <= d; ++i) sum += binom(n, i);
  return sum;
}

Claim31Report claim31_check(const Poset& p, const SetFamily& fam) {
  Claim31Report report;
  report.w_star = cube_width(p).cube_width;
  VcReport vc = vc_dimension(fam);
  report.vc = vc.dimension;
  report.holds = vc.dimension < report.w_star;
  report.family_size = fam.size();

  int n = fam.ground();
  int w = report.w_star;
  for (int i = 0; i < w && i <= n; ++i) report.sauer_sum_below_wstar += binom(n, i);
  if (w >= 1) {
    u128 pow = 1;
    for (int i = 0; i < w - 1; ++i) pow *= static_cast<u128>(n);
    report.poly_bound = 2 * pow;
  }
  report.n_at_least_2wstar = n >= 2 * w;
  report.size_chain_holds = report.family_size <= report.sauer_sum_below_wstar &&
                            (!report.n_at_least_2wstar ||
                             report.sauer_sum_below_wstar <= report.poly_bound);
  return report;
}

}  // namespace posetsat
