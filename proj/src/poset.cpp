#include "posetsat/poset.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_set>

#include "posetsat/bits.hpp"

namespace posetsat {

Poset::Poset(int size) : size_(size) {
  if (size < 1) throw SizeError("poset size must be >= 1");
  words_ = (size + 63) / 64;
  bits_.assign(static_cast<std::size_t>(size_) * words_, 0);
}

void Poset::add_less(int i, int j) {
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
}

void Poset::close_transitively() {
  // Warshall on bit rows: if i < k then i inherits everything above k.
  for (int k = 0; k < size_; ++k) {
    const std::uint64_t* row_k = &bits_[static_cast<std::size_t>(k) * words_];
    for (int i = 0; i < size_; ++i) {
      if (i == k || !less(i, k)) continue;
      std::uint64_t* row_i = &bits_[static_cast<std::size_t>(i) * words_];
      for (int w = 0; w < words_; ++w) row_i[w] |= row_k[w];
    }
  }
}

void Poset::check_valid() const {
  for (int i = 0; i < size_; ++i) {
    if (less(i, i)) throw CycleError("relation closure contains a cycle through element " +
                                     std::to_string(i));
    for (int j = i + 1; j < size_; ++j) {
      if (less(i, j) && less(j, i)) {
        throw CycleError("relation closure contains a 2-cycle between " + std::to_string(i) +
                         " and " + std::to_string(j));
      }
    }
  }
}

Poset poset_from_spec(const PosetSpec& spec) {
  Poset p(spec.size);
  for (auto [i, j] : spec.relations) {
    if (i < 0 || i >= spec.size || j < 0 || j >= spec.size) {
      throw IndexError("relation (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for size " + std::to_string(spec.size));
    }
    if (i == j) throw CycleError("reflexive relation (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    p.add_less(i, j);
  }
  p.close_transitively();
  p.check_valid();
  return p;
}

int height(const Poset& p) {
  int k = p.size();
  // Elements sorted by down-set size form a linear extension.
  std::vector<int> down(k, 0), order(k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) down[j] += p.less(i, j);
    order[j] = j;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });
  std::vector<int> depth(k, 1);
  int best = 1;
  for (int a : order) {
    for (int b = 0; b < k; ++b) {
      if (p.less(b, a)) depth[a] = std::max(depth[a], depth[b] + 1);
    }
    best = std::max(best, depth[a]);
  }
  return best;
}

namespace {

int max_antichain(const std::vector<Mask>& comp, Mask candidates, int chosen, int best) {
  while (candidates != 0) {
    if (chosen + popcount(candidates) <= best) return best;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Take v: drop everything comparable to it.
    best = std::max(best, max_antichain(comp, candidates & ~comp[v], chosen + 1, best));
  }
  return std::max(best, chosen);
}

}  // namespace

int width(const Poset& p) {
  int k = p.size();
  if (k > 64) throw SizeError("width: poset size capped at 64");
  std::vector<Mask> comp(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && p.comparable(i, j)) comp[i] |= Mask{1} << j;
    }
  }
  return max_antichain(comp, full_mask(k), 0, 1);
}

std::vector<int> maximal_elements(const Poset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < p.size() && maximal; ++j) {
      if (p.less(i, j)) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

namespace {

int require_param(const std::string& name, std::optional<int> parameter) {
  if (!parameter) throw MissingParameterError("catalog '" + name + "' requires a parameter");
  if (*parameter < 1) throw SizeError("catalog '" + name + "' parameter must be >= 1");
  return *parameter;
}

}  // namespace

Poset catalog(const std::string& name, std::optional<int> parameter) {
  if (name == "chain") {
    int k = require_param(name, parameter);
    if (k > kPatternSizeCap) throw SizeError("chain size capped at 16");
    PosetSpec spec{k, {}};
    for (int i = 0; i + 1 < k; ++i) spec.relations.emplace_back(i, i + 1);
    return poset_from_spec(spec);
  }
  if (name == "antichain") {
    int m = require_param(name, parameter);
    if (m > kPatternSizeCap) throw SizeError("antichain size capped at 16");
    return Poset(m);
  }
  if (name == "butterfly") {
    return poset_from_spec({4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}});
  }
  if (name == "diamond") {
    return poset_from_spec({4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
  }
  if (name == "fork") {
    return poset_from_spec({3, {{0, 1}, {0, 2}}});
  }
  if (name == "stacked2") {
    int t = require_param(name, parameter);
    if (2 * t > kPatternSizeCap) throw SizeError("stacked2 parameter capped at 8");
    PosetSpec spec{2 * t, {}};
    for (int lo = 0; lo + 1 < t; ++lo) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) spec.relations.emplace_back(2 * lo + a, 2 * (lo + 1) + b);
      }
    }
    return poset_from_spec(spec);
  }
  if (name == "boolean") {
    int m = require_param(name, parameter);
    if ((1 << m) > kPatternSizeCap) throw SizeError("boolean parameter capped at 4");
    Poset p(1 << m);
    for (int x = 0; x < (1 << m); ++x) {
      for (int y = 0; y < (1 << m); ++y) {
        if (x != y && (x & ~y) == 0) p.add_less(x, y);
      }
    }
    p.check_valid();
    return p;
  }
  throw UnknownNameError("unknown catalog poset '" + name + "'");
}

Poset random_poset(int size, double edge_density, std::uint64_t seed) {
  if (size < 1 || size > kPatternSizeCap) throw SizeError("random_poset size must be in [1,16]");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(size);
  for (int i = 0; i < size; ++i) perm[i] = i;
  for (int i = size - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  Poset p(size);
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_density) p.add_less(perm[a], perm[b]);
    }
  }
  p.close_transitively();
  p.check_valid();
  return p;
}

namespace {

// Posets of size <= 6 fit a 36-bit row-major relation code.
using Code = std::uint64_t;

constexpr int kEnumCap = 6;

Code encode(const bool lt[kEnumCap][kEnumCap], const std::array<int, kEnumCap>& perm, int k) {
  Code code = 0;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      code = code << 1 | static_cast<Code>(lt[perm[a]][perm[b]]);
    }
  }
  return code;
}

// Canonical form: minimum relation code over all permutations that list the
// elements by non-decreasing (down-degree, up-degree) key. Restricting to
// key-sorted permutations is isomorphism-invariant, so equal codes still
// characterize isomorphic posets, and the degree prefilter cuts the k!
// candidates to the product of the key-group factorials.
Code canonical_code(const bool lt[kEnumCap][kEnumCap], int k) {
  std::array<std::pair<int, int>, kEnumCap> key{};
  for (int i = 0; i < k; ++i) {
    int down = 0, up = 0;
    for (int j = 0; j < k; ++j) {
      down += lt[j][i];
      up += lt[i][j];
    }
    key[i] = {down, up};
  }
  std::vector<int> sorted(k);
  for (int i = 0; i < k; ++i) sorted[i] = i;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });
  std::vector<std::vector<int>> groups;
  for (int idx : sorted) {
    if (groups.empty() || key[groups.back().back()] != key[idx]) groups.emplace_back();
    groups.back().push_back(idx);
  }
  Code best = ~Code{0};
  std::array<int, kEnumCap> perm{};
  for (;;) {
    int pos = 0;
    for (const auto& g : groups) {
      for (int idx : g) perm[pos++] = idx;
    }
    best = std::min(best, encode(lt, perm, k));
    // Odometer over per-group permutations.
    int g = static_cast<int>(groups.size()) - 1;
    while (g >= 0 && !std::next_permutation(groups[g].begin(), groups[g].end())) --g;
    if (g < 0) break;
  }
  return best;
}

Poset decode(Code code, int k) {
  Poset p(k);
  for (int a = k - 1; a >= 0; --a) {
    for (int b = k - 1; b >= 0; --b) {
      if (code & 1) p.add_less(a, b);
      code >>= 1;
    }
  }
  p.check_valid();
  return p;
}

struct Enumerator {
  int k;
  bool lt[kEnumCap][kEnumCap] = {};
  std::unordered_set<Code> seen;
  std::vector<Code> codes;

  // Pairs are assigned column by column: (0,j),(1,j),...,(j-1,j). When pair
  // (i,j) is set, all pairs within {0..j-1} and (l,j) for l<i are already
  // decided, so checking the triples {l,i,j} with l<i keeps the partial
  // relation transitively closed at every step.
  bool consistent(int i, int j) const {
    for (int l = 0; l < i; ++l) {
      const int t[3] = {l, i, j};
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          for (int c = 0; c < 3; ++c) {
            if (a == b || b == c || a == c) continue;
            if (lt[t[a]][t[b]] && lt[t[b]][t[c]] && !lt[t[a]][t[c]]) return false;
          }
        }
      }
    }
    return true;
  }

  void assign(int i, int j) {
    int ni = i + 1, nj = j;
    if (ni == j) {
      ni = 0;
      ++nj;
    }
    if (nj == k) {
      Code code = canonical_code(lt, k);
      if (seen.insert(code).second) codes.push_back(code);
      return;
    }
    auto advance = [&](bool fwd, bool bwd) {
      lt[ni][nj] = fwd;
      lt[nj][ni] = bwd;
      if (consistent(ni, nj)) assign(ni, nj);
      lt[ni][nj] = false;
      lt[nj][ni] = false;
    };
    advance(false, false);
    advance(true, false);
    advance(false, true);
  }
};

}  // namespace

std::vector<Poset> enumerate_posets(int size) {
  if (size < 1 || size > kEnumCap) throw SizeError("enumerate_posets size must be in [1,6]");
  Enumerator e;
  e.k = size;
  if (size == 1) {
    e.codes.push_back(0);
  } else {
    e.assign(-1, 1);
  }
  std::sort(e.codes.begin(), e.codes.end());
  std::vector<Poset> out;
  out.reserve(e.codes.size());
  for (Code c : e.codes) out.push_back(decode(c, size));
  return out;
}

std::string poset_to_dsl(const Poset& p) {
  std::string out = std::to_string(p.size()) + ";";
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.less(i, j)) out += " " + std::to_string(i) + "<" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace posetsat
