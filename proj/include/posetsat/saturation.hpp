#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetsat/family.hpp"
#include "posetsat/poset.hpp"

namespace posetsat {

struct LayerTrace {
  int layer = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
};

struct SaturationReport {
  std::string poset_id;
  int ground = 0;
  bool p_free = false;
  bool saturated = false;
  std::uint64_t checked_external_sets = 0;
  bool sample_mode = false;
  std::uint64_t sample_seed = 0;
  // |P| = 1: the empty family is saturated; flagged instead of erroring.
  bool degenerate_single = false;
  // n < 2 w*(P): the 2n^{w*-1} simplification does not apply.
  bool below_recommended_n = false;
  std::vector<LayerTrace> trace;
};

// Member indices realizing an induced copy of p in fam, or nullopt.
std::optional<std::vector<int>> contains_induced_copy(const SetFamily& fam, const Poset& p);

struct GreedyResult {
  SetFamily family;
  SaturationReport report;
};

// Layer-by-layer greedy: start from the first h*(p) layers, stream the
// remaining subsets in (size, colex) order and keep each one that leaves
// the family P-free. Deterministic; P-free and saturated by construction.
GreedyResult greedy_saturated_family(const Poset& p, int n, bool want_trace = false);

struct VerifyMode {
  bool full = true;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

// Independent recheck: P-freeness plus, for external sets S (all of them in
// full mode, a seeded sample otherwise), that fam + S contains a copy
// through S.
SaturationReport verify_saturated(const Poset& p, const SetFamily& fam, const VerifyMode& mode);

struct OracleResult {
  std::size_t min_size = 0;
  SetFamily witness;
};

// Exact smallest P-saturated family in Q_n, by iterative deepening on the
// family size with P-freeness pruning. n <= 4.
OracleResult exact_sat_oracle(const Poset& p, int n);

struct GroundSeparation {
  bool separates = false;
  std::vector<int> unwitnessed;
};

// Whether every ground coordinate is a singleton difference of two members.
GroundSeparation separates_ground(const SetFamily& fam);

}  // namespace posetsat
