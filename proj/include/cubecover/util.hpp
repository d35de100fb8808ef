#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubecover {

/// Deterministic 64-bit generator (splitmix64). Used wherever "random" tables
/// or polynomials are sampled: fixed seeds keep every report byte-identical
/// across runs and platforms, which std::uniform_int_distribution would not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bias is irrelevant for test sampling.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Value in [lo, hi] inclusive.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Lowercase hex without prefix, e.g. mask 0b1011 -> "b".
inline std::string mask_to_hex(std::uint32_t mask) {
  if (mask == 0) return "0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  while (mask != 0) {
    s.insert(s.begin(), digits[mask & 0xf]);
    mask >>= 4;
  }
  return s;
}

/// Parses hex with or without 0x prefix.
inline std::uint32_t mask_from_hex(const std::string& s) {
  std::string body = s;
  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
  if (body.empty()) throw std::invalid_argument("mask_from_hex: empty string");
  std::uint64_t v = 0;
  for (char c : body) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("mask_from_hex: bad digit in '" + s + "'");
    v = (v << 4) | static_cast<std::uint64_t>(d);
    if (v > 0xffffffffULL) throw std::invalid_argument("mask_from_hex: mask too wide: " + s);
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace cubecover
