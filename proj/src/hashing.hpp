#pragma once

// Internal fingerprint arithmetic.  All hashing is fixed-seed and
// platform-independent; fingerprints live in F_p with p = 2^61 - 1 so that
// set summaries add commutatively across any enumeration partition.

#include <cstdint>
#include <string_view>
#include <vector>

#include "plactic/word.hpp"

namespace plactic::detail {

inline constexpr std::uint64_t kFpPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Mixer {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  void add(std::uint64_t v) { h = splitmix64(h ^ v); }
};

inline std::uint64_t add_mod_p(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;  // both < 2^61, no overflow
  return s >= kFpPrime ? s - kFpPrime : s;
}

inline std::uint64_t mul_mod_p(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % kFpPrime);
}

// Hash of a tableau's ragged rows, reduced into F_p.  Used as the per-word
// fingerprint contribution via w -> hash(P(w)).
inline std::uint64_t tableau_fp(const std::vector<std::vector<Letter>>& rows) {
  Mixer mix;
  mix.add(rows.size());
  for (const auto& row : rows) {
    mix.add(0x726f77ULL);  // row separator
    mix.add(row.size());
    for (Letter a : row) mix.add(a);
  }
  return mix.h % kFpPrime;
}

inline std::uint64_t string_hash64(std::string_view s) {
  Mixer mix;
  mix.add(s.size());
  for (unsigned char c : s) mix.add(c);
  return mix.h;
}

}  // namespace plactic::detail
