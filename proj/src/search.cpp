#include "posetsat/search.hpp"

#include <algorithm>
#include <array>

namespace posetsat {

namespace {

struct PatternData {
  int k = 0;
  std::array<std::uint32_t, kPatternSizeCap> lt_row{};  // bit j: i < j
  std::array<std::uint32_t, kPatternSizeCap> gt_row{};  // bit j: j < i
  std::array<int, kPatternSizeCap> depth{};             // longest chain strictly below
  std::array<int, kPatternSizeCap> updepth{};           // longest chain strictly above
  std::array<int, kPatternSizeCap> downdeg{};
  std::array<int, kPatternSizeCap> updeg{};

  bool lt(int i, int j) const { return lt_row[i] >> j & 1; }
};

PatternData analyze_pattern(const Poset& p) {
  if (p.size() > kPatternSizeCap) throw SizeError("pattern size capped at 16");
  PatternData pd;
  pd.k = p.size();
  for (int i = 0; i < pd.k; ++i) {
    for (int j = 0; j < pd.k; ++j) {
      if (p.less(i, j)) {
        pd.lt_row[i] |= 1u << j;
        pd.gt_row[j] |= 1u << i;
      }
    }
  }
  std::vector<int> by_down(pd.k);
  for (int i = 0; i < pd.k; ++i) {
    pd.downdeg[i] = std::popcount(pd.gt_row[i]);
    pd.updeg[i] = std::popcount(pd.lt_row[i]);
    by_down[i] = i;
  }
  std::sort(by_down.begin(), by_down.end(),
            [&](int a, int b) { return pd.downdeg[a] < pd.downdeg[b]; });
  for (int i : by_down) {
    for (int j = 0; j < pd.k; ++j) {
      if (p.less(j, i)) pd.depth[i] = std::max(pd.depth[i], pd.depth[j] + 1);
    }
  }
  for (auto it = by_down.rbegin(); it != by_down.rend(); ++it) {
    for (int j = 0; j < pd.k; ++j) {
      if (p.less(*it, j)) pd.updepth[*it] = std::max(pd.updepth[*it], pd.updepth[j] + 1);
    }
  }
  return pd;
}

// Host adapter over the inclusion order of a mask list.
struct MaskHost {
  std::span<const Mask> masks;
  int max_pop = 0;

  explicit MaskHost(std::span<const Mask> m) : masks(m) {
    for (Mask x : m) max_pop = std::max(max_pop, popcount(x));
  }

  int size() const { return static_cast<int>(masks.size()); }
  bool less(int a, int b) const { return strict_subset(masks[a], masks[b]); }

  // Chains are strictly nested, so a chain of d elements below an image
  // needs at least d ground elements inside it, and symmetrically above.
  bool feasible(int v, const PatternData& pd, int pi) const {
    int pc = popcount(masks[v]);
    return pc >= pd.depth[pi] && pc + pd.updepth[pi] <= max_pop;
  }
};

// Host adapter over an arbitrary Poset, with exact chain-depth and degree
// prefilters (computed once per search).
struct PosetHost {
  const Poset& h;
  std::vector<int> depth, updepth, downdeg, updeg;

  explicit PosetHost(const Poset& host) : h(host) {
    int n = h.size();
    depth.assign(n, 0);
    updepth.assign(n, 0);
    downdeg.assign(n, 0);
    updeg.assign(n, 0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
      order[i] = i;
      for (int j = 0; j < n; ++j) {
        if (h.less(j, i)) ++downdeg[i];
        if (h.less(i, j)) ++updeg[i];
      }
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return downdeg[a] < downdeg[b]; });
    for (int i : order) {
      for (int j = 0; j < n; ++j) {
        if (h.less(j, i)) depth[i] = std::max(depth[i], depth[j] + 1);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (int j = 0; j < n; ++j) {
        if (h.less(*it, j)) updepth[*it] = std::max(updepth[*it], updepth[j] + 1);
      }
    }
  }

  int size() const { return h.size(); }
  bool less(int a, int b) const { return h.less(a, b); }

  bool feasible(int v, const PatternData& pd, int pi) const {
    return depth[v] >= pd.depth[pi] && updepth[v] >= pd.updepth[pi] &&
           downdeg[v] >= pd.downdeg[pi] && updeg[v] >= pd.updeg[pi];
  }
};

// Per-pattern-element candidate sets as flat bitsets over host indices.
class CandidateSets {
 public:
  CandidateSets(int k, int host_size)
      : words_((host_size + 63) / 64), bits_(static_cast<std::size_t>(k) * words_, 0) {}

  std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  const std::uint64_t* row(int i) const {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }
  int words() const { return words_; }

  int count(int i) const {
    int total = 0;
    const std::uint64_t* r = row(i);
    for (int w = 0; w < words_; ++w) total += std::popcount(r[w]);
    return total;
  }

 private:
  int words_;
  std::vector<std::uint64_t> bits_;
};

// Backtracking with forward checking: every assignment narrows the
// candidate sets of the unassigned pattern elements, and the next variable
// is the one with the fewest candidates left (ties by index). Deterministic,
// so reported witnesses are reproducible.
template <class Host>
struct Searcher {
  const PatternData& pd;
  const Host& host;
  std::uint64_t budget;
  bool limited;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> img;
  std::uint32_t assigned = 0;
  std::vector<CandidateSets> stack;  // one snapshot per depth

  Searcher(const PatternData& pattern, const Host& h, std::optional<std::uint64_t> b)
      : pd(pattern),
        host(h),
        budget(b.value_or(0)),
        limited(b.has_value()),
        img(pd.k, -1) {
    stack.reserve(pd.k + 1);
    CandidateSets init(pd.k, host.size());
    for (int i = 0; i < pd.k; ++i) {
      std::uint64_t* r = init.row(i);
      for (int v = 0; v < host.size(); ++v) {
        if (host.feasible(v, pd, i)) r[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
    stack.push_back(std::move(init));
  }

  // Restrict candidate set of element j to host values consistent with
  // element i being placed at v; returns false on wipe-out.
  bool filter(CandidateSets& cs, int j, int i, int v) {
    bool need_down = pd.lt(j, i);  // j < i: image must be below v
    bool need_up = pd.lt(i, j);    // i < j: image must be above v
    std::uint64_t* r = cs.row(j);
    bool nonempty = false;
    for (int w = 0; w < cs.words(); ++w) {
      std::uint64_t bits = r[w];
      std::uint64_t keep = 0;
      while (bits != 0) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        int c = (w << 6) | b;
        if (c == v) continue;
        if (host.less(c, v) != need_down || host.less(v, c) != need_up) continue;
        keep |= std::uint64_t{1} << b;
      }
      r[w] = keep;
      nonempty |= keep != 0;
    }
    return nonempty;
  }

  bool extend() {
    if (assigned == (1u << pd.k) - 1) return true;
    const CandidateSets& cur = stack.back();
    int pick = -1, best = -1;
    for (int i = 0; i < pd.k; ++i) {
      if (assigned >> i & 1) continue;
      int c = cur.count(i);
      if (pick < 0 || c < best) {
        pick = i;
        best = c;
      }
    }
    if (best == 0) return false;

    const std::uint64_t* r = cur.row(pick);
    for (int w = 0; w < cur.words(); ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        int v = (w << 6) | b;
        if (limited && ++nodes > budget) {
          exhausted = true;
          return false;
        }
        img[pick] = v;
        assigned |= 1u << pick;
        stack.push_back(stack.back());
        bool viable = true;
        for (int j = 0; j < pd.k && viable; ++j) {
          if (assigned >> j & 1) continue;
          viable = filter(stack.back(), j, pick, v);
        }
        if (viable && extend()) return true;
        stack.pop_back();
        assigned &= ~(1u << pick);
        img[pick] = -1;
        if (exhausted) return false;
      }
    }
    return false;
  }
};

template <class Host>
SearchResult run_search(const Poset& pattern, const Host& host,
                        std::optional<std::uint64_t> budget, int anchor_host) {
  PatternData pd = analyze_pattern(pattern);
  std::uint64_t spent = 0;
  if (anchor_host < 0) {
    Searcher<Host> s(pd, host, budget);
    if (s.extend()) return {SearchStatus::kFound, s.img};
    if (s.exhausted) return {SearchStatus::kBudgetExhausted, {}};
    return {SearchStatus::kNotFound, {}};
  }
  for (int pos = 0; pos < pattern.size(); ++pos) {
    if (!host.feasible(anchor_host, pd, pos)) continue;
    std::optional<std::uint64_t> remaining =
        budget ? std::optional<std::uint64_t>(*budget - spent) : std::nullopt;
    Searcher<Host> s(pd, host, remaining);
    // Pin the anchor: candidate set of `pos` collapses to {anchor_host}.
    std::uint64_t* r = s.stack.back().row(pos);
    for (int w = 0; w < s.stack.back().words(); ++w) r[w] = 0;
    r[anchor_host >> 6] = std::uint64_t{1} << (anchor_host & 63);
    if (s.extend()) return {SearchStatus::kFound, s.img};
    spent += s.nodes;
    if (s.exhausted) return {SearchStatus::kBudgetExhausted, {}};
  }
  return {SearchStatus::kNotFound, {}};
}

}  // namespace

SearchResult search_in_poset(const Poset& pattern, const Poset& host,
                             std::optional<std::uint64_t> budget) {
  PosetHost h(host);
  return run_search(pattern, h, budget, -1);
}

SearchResult search_in_masks(const Poset& pattern, std::span<const Mask> host,
                             std::optional<std::uint64_t> budget, int anchor_host) {
  MaskHost h(host);
  return run_search(pattern, h, budget, anchor_host);
}

}  // namespace posetsat
