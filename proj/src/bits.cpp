#include "posetsat/bits.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace posetsat {

u128 binom(int n, int k) {
  if (n < 0 || n > 64 || k < 0) throw RangeError("binom: n must be in [0,64]");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  }
  return result;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {out.rbegin(), out.rend()};
}

LayerStream::LayerStream(int n, int size_lo, int size_hi)
    : n_(n), size_hi_(size_hi), cur_size_(size_lo), layer_done_(false) {
  if (n < 0 || n > 64) throw RangeError("LayerStream: ground must be in [0,64]");
  if (size_lo < 0 || size_hi > n || size_lo > size_hi) {
    throw RangeError("LayerStream: size range must satisfy 0 <= lo <= hi <= n");
  }
  cur_ = full_mask(cur_size_);
}

std::optional<Mask> LayerStream::next() {
  while (cur_size_ <= size_hi_) {
    if (!layer_done_) {
      Mask out = cur_;
      Mask last = full_mask(cur_size_) << (n_ - cur_size_);
      if (cur_ == last) {
        layer_done_ = true;
      } else {
        cur_ = next_same_size(cur_);
      }
      return out;
    }
    ++cur_size_;
    if (cur_size_ > size_hi_) break;
    cur_ = full_mask(cur_size_);
    layer_done_ = false;
  }
  return std::nullopt;
}

std::string format_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int b = 0; b < 64; ++b) {
    if (m >> b & 1) {
      if (!first) out += ",";
      out += std::to_string(b + 1);
      first = false;
    }
  }
  out += "}";
  return out;
}

Mask parse_set(const std::string& text, int ground) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '{') throw ParseError("set must start with '{': " + text);
  ++i;
  Mask m = 0;
  skip_ws();
  while (i < text.size() && text[i] != '}') {
    std::size_t end = i;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == i) throw ParseError("expected element in set: " + text);
    int elem = std::stoi(text.substr(i, end - i));
    if (elem < 1 || elem > ground) {
      throw RangeError("set element " + std::to_string(elem) + " outside ground [" +
                       std::to_string(ground) + "]");
    }
    m |= Mask{1} << (elem - 1);
    i = end;
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  if (i >= text.size() || text[i] != '}') throw ParseError("unterminated set: " + text);
  return m;
}

std::string format_hex_mask(Mask m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(m));
  return buf;
}

Mask parse_hex_mask(const std::string& text, int ground) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw ParseError("hex mask must start with 0x: " + text);
  }
  Mask m = 0;
  for (std::size_t i = 2; i < text.size(); ++i) {
    char c = text[i];
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw ParseError("bad hex digit in mask: " + text);
    if (m >> 60 != 0) throw RangeError("hex mask wider than 64 bits: " + text);
    m = m << 4 | static_cast<Mask>(digit);
  }
  if (!subset_eq(m, full_mask(ground))) {
    throw RangeError("mask " + text + " has bits above ground " + std::to_string(ground));
  }
  return m;
}

}  // namespace posetsat
