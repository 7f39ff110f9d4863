#include "posetsat/saturation.hpp"

#include <algorithm>
#include <random>

#include "posetsat/embedding.hpp"
#include "posetsat/search.hpp"

namespace posetsat {

namespace {

constexpr int kGreedyGroundCap = 24;
constexpr int kFullVerifyCap = 20;
constexpr int kOracleCap = 4;

// Copy of P through the candidate at index `anchor` of `members`.
bool creates_copy_through(const Poset& p, const std::vector<Mask>& members, int anchor) {
  return search_in_masks(p, members, std::nullopt, anchor).found();
}

}  // namespace

std::optional<std::vector<int>> contains_induced_copy(const SetFamily& fam, const Poset& p) {
  if (p.size() > kPatternSizeCap) throw SizeError("pattern size capped at 16");
  SearchResult r = search_in_masks(p, fam.members());
  if (!r.found()) return std::nullopt;
  return r.map;
}

GreedyResult greedy_saturated_family(const Poset& p, int n, bool want_trace) {
  if (n < 1 || n > kGreedyGroundCap) throw SizeError("greedy ground must be in [1,24]");
  SaturationReport report;
  report.poset_id = poset_to_dsl(p);
  report.ground = n;
  report.p_free = true;
  report.saturated = true;

  if (p.size() == 1) {
    // Every nonempty family contains a copy, so the empty family is the
    // (degenerate) saturated one.
    report.degenerate_single = true;
    report.checked_external_sets = Mask{1} << n;
    return {SetFamily::from_sorted(n, {}), report};
  }

  int h = cube_height(p);
  report.below_recommended_n = n < 2 * cube_width(p).cube_width;

  std::vector<Mask> members;
  int full_layers = std::min(h, n + 1);
  if (full_layers > 0) {
    LayerStream seed(n, 0, full_layers - 1);
    while (auto m = seed.next()) members.push_back(*m);
  }
  if (want_trace) {
    for (int s = 0; s < full_layers; ++s) {
      report.trace.push_back({s, static_cast<std::uint64_t>(binom(n, s)), 0});
    }
  }

  for (int s = full_layers; s <= n; ++s) {
    LayerTrace layer{s, 0, 0};
    LayerStream stream(n, s, s);
    while (auto m = stream.next()) {
      members.push_back(*m);
      if (creates_copy_through(p, members, static_cast<int>(members.size()) - 1)) {
        members.pop_back();
        ++layer.rejected;
        ++report.checked_external_sets;
      } else {
        ++layer.accepted;
      }
    }
    if (want_trace) report.trace.push_back(layer);
  }
  return {SetFamily::from_sorted(n, std::move(members)), report};
}

SaturationReport verify_saturated(const Poset& p, const SetFamily& fam, const VerifyMode& mode) {
  int n = fam.ground();
  if (mode.full && n > kFullVerifyCap) {
    throw SizeError("full verification capped at ground 20; use sample mode");
  }
  SaturationReport report;
  report.poset_id = poset_to_dsl(p);
  report.ground = n;
  report.sample_mode = !mode.full;
  report.sample_seed = mode.seed;
  report.p_free = !contains_induced_copy(fam, p).has_value();
  report.saturated = true;

  std::vector<Mask> scratch = fam.members();
  scratch.push_back(0);
  auto creates_copy = [&](Mask s) {
    scratch.back() = s;
    return creates_copy_through(p, scratch, static_cast<int>(scratch.size()) - 1);
  };

  if (mode.full) {
    Mask total = Mask{1} << n;
    for (Mask s = 0; s < total; ++s) {
      if (fam.contains(s)) continue;
      ++report.checked_external_sets;
      if (!creates_copy(s)) {
        report.saturated = false;
        break;
      }
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uint64_t attempts = 0;
    std::uint64_t max_attempts = mode.samples * 64 + 64;
    while (report.checked_external_sets < mode.samples && attempts < max_attempts) {
      ++attempts;
      Mask s = rng() & full_mask(n);
      if (fam.contains(s)) continue;
      ++report.checked_external_sets;
      if (!creates_copy(s)) {
        report.saturated = false;
        break;
      }
    }
  }
  return report;
}

namespace {

struct OracleSearch {
  const Poset& p;
  std::vector<Mask> universe;
  std::size_t target = 0;
  std::vector<Mask> chosen;
  std::optional<std::vector<Mask>> found;

  bool is_saturated() const {
    std::vector<Mask> scratch = chosen;
    scratch.push_back(0);
    for (Mask s : universe) {
      if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) continue;
      scratch.back() = s;
      if (!creates_copy_through(p, scratch, static_cast<int>(scratch.size()) - 1)) return false;
    }
    return true;
  }

  bool extend(std::size_t start) {
    if (chosen.size() == target) {
      if (!is_saturated()) return false;
      found = chosen;
      return true;
    }
    for (std::size_t i = start; i + (target - chosen.size()) <= universe.size(); ++i) {
      chosen.push_back(universe[i]);
      bool p_free =
          !creates_copy_through(p, chosen, static_cast<int>(chosen.size()) - 1);
      if (p_free && extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

OracleResult exact_sat_oracle(const Poset& p, int n) {
  if (n < 1 || n > kOracleCap) throw SizeError("exact_sat_oracle ground capped at 4");
  OracleSearch search{p, {}};
  LayerStream stream(n, 0, n);
  while (auto m = stream.next()) search.universe.push_back(*m);
  for (std::size_t size = 0; size <= search.universe.size(); ++size) {
    search.target = size;
    search.chosen.clear();
    if (search.extend(0)) {
      std::vector<Mask> members = *search.found;
      std::sort(members.begin(), members.end(), canonical_less);
      return {size, SetFamily::from_sorted(n, std::move(members))};
    }
  }
  throw InternalError("exact_sat_oracle: the full cube is always saturated");
}

GroundSeparation separates_ground(const SetFamily& fam) {
  GroundSeparation out;
  const auto& members = fam.members();
  for (int a = 0; a < fam.ground(); ++a) {
    Mask single = Mask{1} << a;
    bool witnessed = false;
    for (std::size_t i = 0; i < members.size() && !witnessed; ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i != j && (members[i] & ~members[j]) == single) {
          witnessed = true;
          break;
        }
      }
    }
    if (!witnessed) out.unwitnessed.push_back(a);
  }
  out.separates = out.unwitnessed.empty();
  return out;
}

}  // namespace posetsat
