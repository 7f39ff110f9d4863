#include "posetsat/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace posetsat {

namespace {

std::vector<Mask> layered_masks(int n, int h) {
  std::vector<Mask> out;
  LayerStream stream(n, 0, std::min(h, n));
  while (auto m = stream.next()) out.push_back(*m);
  return out;
}

}  // namespace

bool embedding_valid(const Poset& p, const Embedding& e) {
  if (static_cast<int>(e.images.size()) != p.size()) return false;
  for (Mask m : e.images) {
    if (!subset_eq(m, full_mask(e.ground))) return false;
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      if (e.images[i] == e.images[j]) return false;
      if (p.less(i, j) != strict_subset(e.images[i], e.images[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_induced_copy(const Poset& pattern, const Poset& host,
                                                  std::optional<std::uint64_t> budget) {
  SearchResult r = search_in_poset(pattern, host, budget);
  if (r.status == SearchStatus::kBudgetExhausted) {
    throw BudgetExhaustedError("induced-copy search budget exhausted");
  }
  if (!r.found()) return std::nullopt;
  return r.map;
}

Embedding construct_height_embedding(const Poset& p) {
  int k = p.size();
  if (k == 1) return {1, {0}};

  auto maxima = maximal_elements(p);
  if (maxima.size() == 1) {
    int top = maxima.front();
    // Recurse on P minus its unique maximal element, then hand the top the
    // full ground of the sub-embedding.
    PosetSpec sub{k - 1, {}};
    std::vector<int> old_index;
    old_index.reserve(k - 1);
    for (int i = 0; i < k; ++i) {
      if (i != top) old_index.push_back(i);
    }
    for (int a = 0; a < k - 1; ++a) {
      for (int b = 0; b < k - 1; ++b) {
        if (p.less(old_index[a], old_index[b])) sub.relations.emplace_back(a, b);
      }
    }
    Embedding inner = construct_height_embedding(poset_from_spec(sub));
    Embedding out{k, std::vector<Mask>(k, 0)};
    for (int a = 0; a < k - 1; ++a) out.images[old_index[a]] = inner.images[a];
    out.images[top] = full_mask(k - 1);
    return out;
  }

  // No unique maximal element: down-sets, A_j = {i : p_i <= p_j}.
  Embedding out{k, std::vector<Mask>(k, 0)};
  for (int j = 0; j < k; ++j) {
    Mask m = Mask{1} << j;
    for (int i = 0; i < k; ++i) {
      if (p.less(i, j)) m |= Mask{1} << i;
    }
    out.images[j] = m;
  }
  return out;
}

int cube_height(const Poset& p) {
  int k = p.size();
  if (k > kPatternSizeCap) throw SizeError("cube_height: poset size capped at 16");
  if (k == 1) return 0;
  int maxima = static_cast<int>(maximal_elements(p).size());
  int cap = k * k / 4 + 2;
  for (int h = height(p) - 1; h <= k - 1; ++h) {
    // Any height-h embedding fits in the union of the maximal images, so a
    // ground of h * (#maximal elements) decides candidate h exactly; the
    // |P|^2/4 + 2 cube-width bound kicks in at the first succeeding h.
    int n = std::min(h * maxima, cap);
    std::vector<Mask> host = layered_masks(n, h);
    if (search_in_masks(p, host).found()) return h;
  }
  throw InternalError("cube_height: no embedding within the proven |P|-1 bound");
}

HeightWidthResult cube_width(const Poset& p) {
  int k = p.size();
  if (k > kPatternSizeCap) throw SizeError("cube_width: poset size capped at 16");
  int h = cube_height(p);
  int upper = std::min(h * width(p), k * k / 4 + 2);
  for (int n = h; n <= std::max(h, upper); ++n) {
    std::vector<Mask> host = layered_masks(n, h);
    SearchResult r = search_in_masks(p, host);
    if (r.found()) {
      Embedding witness{n, std::vector<Mask>(k, 0)};
      for (int i = 0; i < k; ++i) witness.images[i] = host[r.map[i]];
      return {h, n, witness};
    }
  }
  throw InternalError("cube_width: no embedding within the proven upper bound");
}

SeparationCheck check_separation(const Embedding& e) {
  SeparationCheck out;
  out.witness.assign(e.ground, std::nullopt);
  int k = static_cast<int>(e.images.size());
  for (int a = 0; a < e.ground; ++a) {
    Mask single = Mask{1} << a;
    for (int i = 0; i < k && !out.witness[a]; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && (e.images[i] & ~e.images[j]) == single) {
          out.witness[a] = std::make_pair(i, j);
          break;
        }
      }
    }
    if (!out.witness[a]) out.unwitnessed.push_back(a);
  }
  out.separates = out.unwitnessed.empty();
  return out;
}

Embedding minimize_ground_set(const Embedding& e) {
  Embedding cur = e;
  for (;;) {
    SeparationCheck check = check_separation(cur);
    if (check.separates) return cur;
    int a = check.unwitnessed.front();
    Mask low = full_mask(a);
    for (Mask& m : cur.images) m = (m & low) | ((m >> 1) & ~low);
    --cur.ground;
  }
}

double separation_lower_bound(int w) {
  if (w < 2) throw RangeError("separation_lower_bound requires w >= 2");
  return 2.0 * std::sqrt(static_cast<double>(w - 2));
}

BoundsReport width_bound_ledger(const Poset& p) {
  BoundsReport report;
  report.poset_size = p.size();
  report.poset_height = height(p);
  report.poset_width = width(p);
  HeightWidthResult hw = cube_width(p);
  report.h_star = hw.cube_height;
  report.w_star = hw.cube_width;
  report.witness = hw.witness;

  double k = report.poset_size;
  double h = report.h_star;
  double w = report.w_star;
  auto add = [&](std::string name, double lhs, double rhs) {
    report.entries.push_back({std::move(name), lhs, rhs, lhs <= rhs});
  };
  add("cube_height_le_size_minus_1", h, k - 1);
  add("cube_width_le_hstar_times_size", w, h * k);
  add("cube_width_le_hstar_times_width", w, h * report.poset_width);
  add("cube_width_le_quarter_size_sq_plus_2", w, std::floor(k * k / 4) + 2);
  double sep = report.w_star >= 2 ? separation_lower_bound(report.w_star) : 0.0;
  report.entries.push_back({"size_ge_two_sqrt_cube_width_minus_2", k, sep, k >= sep});
  report.conjecture_41 = {"conjecture_41_cube_width_le_size", w, k, w <= k};
  return report;
}

}  // namespace posetsat
