#pragma once

#include <optional>
#include <span>
#include <vector>

#include "posetsat/bits.hpp"
#include "posetsat/poset.hpp"

namespace posetsat {

enum class SearchStatus { kFound, kNotFound, kBudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  // map[i] = host index of pattern element i (valid when kFound).
  std::vector<int> map;

  bool found() const { return status == SearchStatus::kFound; }
};

// Exact induced-subposet search of `pattern` inside the poset `host`.
// Deterministic: pattern elements are tried in decreasing comparability
// degree (ties by index), host candidates in index order, so the witness is
// the lexicographically-first one under that fixed order.
SearchResult search_in_poset(const Poset& pattern, const Poset& host,
                             std::optional<std::uint64_t> budget = std::nullopt);

// Same search against the inclusion order of a list of distinct masks in
// canonical order. When anchor_host >= 0 only copies whose image uses
// host element anchor_host are considered (anchor positions tried in
// pattern-index order).
SearchResult search_in_masks(const Poset& pattern, std::span<const Mask> host,
                             std::optional<std::uint64_t> budget = std::nullopt,
                             int anchor_host = -1);

}  // namespace posetsat
