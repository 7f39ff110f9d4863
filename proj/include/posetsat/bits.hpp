#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "posetsat/errors.hpp"

namespace posetsat {

// A subset of the ground set [n]: ground element i (1-indexed in reports)
// lives at bit i-1. Ground sets are capped at 64 so a subset is one word.
using Mask = std::uint64_t;

using u128 = unsigned __int128;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline bool subset_eq(Mask a, Mask b) { return (a & ~b) == 0; }

inline bool strict_subset(Mask a, Mask b) { return a != b && subset_eq(a, b); }

// Canonical order on subsets: size ascending, then colex ascending.
// Within a layer colex rank equals the numeric value of the mask.
inline bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Gosper's hack: colex successor among masks of equal popcount.
inline Mask next_same_size(Mask v) {
  Mask c = v & (~v + 1);
  Mask r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

// Exact binomial coefficient; n <= 64 keeps every value inside 128 bits.
u128 binom(int n, int k);

std::string u128_to_string(u128 v);

// Streams every subset of [n] with size in [size_lo, size_hi], size
// ascending and colex ascending within each size.
class LayerStream {
 public:
  LayerStream(int n, int size_lo, int size_hi);

  std::optional<Mask> next();

 private:
  int n_;
  int size_hi_;
  int cur_size_;
  Mask cur_;
  bool layer_done_;
};

// Set notation used by all text interfaces: "{1,3}" with 1-indexed
// elements, "{}" for the empty set.
std::string format_set(Mask m);
Mask parse_set(const std::string& text, int ground);

// Hex form used by compact family serialization, e.g. "0x5".
std::string format_hex_mask(Mask m);
Mask parse_hex_mask(const std::string& text, int ground);

}  // namespace posetsat
