#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "plactic/bigint.hpp"
#include "plactic/exec.hpp"
#include "plactic/word.hpp"

namespace plactic {

// The truncated centralizer C'(u) = { w in C(u) : |w| <= max_len, letters
// <= max_letter }, summarized by a commutative fingerprint.  Each member
// word contributes the hash of its P-tableau in F_p (p = 2^61 - 1); that
// per-word hash is constant on plactic classes, so the class engine can add
// hook_count(shape) copies per member class and land on the same field
// element the word engine computes one word at a time.
struct TruncatedCentralizer {
  Word base;
  std::size_t max_len = 0;
  Letter max_letter = 0;
  std::uint64_t fingerprint = 0;
  BigInt word_count;
  std::uint64_t class_count = 0;
  std::optional<std::vector<Word>> members;  // word engine only, sorted

  bool same_set(const TruncatedCentralizer& other) const;
};

struct StabilityOptions {
  std::optional<std::filesystem::path> cache_dir;  // also: PLACTIC_CACHE_DIR
  bool with_members = false;
};

TruncatedCentralizer truncated_centralizer(const Word& u, std::size_t max_len,
                                           Letter max_letter,
                                           const Exec& exec = {},
                                           const StabilityOptions& opts = {});

struct PowerProbe {
  std::size_t k = 0;
  std::uint64_t fingerprint = 0;
  BigInt word_count;
  std::uint64_t class_count = 0;
};

// Words gained/lost between C'(u^{k_from}) and C'(u^{k_to}).
struct WitnessDiff {
  std::size_t k_from = 0;
  std::size_t k_to = 0;
  std::vector<Word> gained;
  std::vector<Word> lost;
};

struct StabilityReport {
  Word base;
  std::size_t max_power = 0;  // K
  std::size_t max_len = 0;    // L
  Letter max_letter = 0;      // M
  std::vector<PowerProbe> powers;
  // Smallest k with C'(u^k) = ... = C'(u^K); empty if even k = K-1 differs.
  std::optional<std::size_t> observed_stabilization_index;
  std::vector<WitnessDiff> witness_diffs;  // only when members requested
};

// Probe C'(u^k) for k = 1..K at truncation (L, M).  The default M in the CLI
// is max(u) + 1: one letter of headroom beyond u's alphabet.
StabilityReport stability_probe(const Word& u, std::size_t max_power,
                                std::size_t max_len, Letter max_letter,
                                const Exec& exec = {},
                                const StabilityOptions& opts = {});

// C'(u^k) == C'(u) for all k <= K; valid expectation for words over {1,2}.
bool strong_stability_check_two_letter(const Word& u, std::size_t max_power,
                                       std::size_t max_len, Letter max_letter,
                                       const Exec& exec = {},
                                       const StabilityOptions& opts = {});

// For a permutation u of [m]: C'(u^k) == C'(u^{k+1}) for all m <= k < K.
bool m_stability_check_permutation(const Word& u, std::size_t max_power,
                                   std::size_t max_len, Letter max_letter,
                                   const Exec& exec = {},
                                   const StabilityOptions& opts = {});

struct PackedSweepEntry {
  Word representative;  // first word of its plactic class in scan order
  bool stable = false;
};

struct PackedSweepReport {
  Letter m = 0;
  std::size_t max_len = 0;
  std::size_t max_power = 0;
  std::size_t trunc_len = 0;
  bool all_pass = false;
  std::vector<PackedSweepEntry> entries;
  std::vector<Word> candidates;  // entries that failed, i.e. counterexamples
};

// Sweep all m-packed words up to max_len (one representative per plactic
// class) and test C'(u^k) == C'(u^{k+1}) for m <= k < K at truncation
// (trunc_len, m).
PackedSweepReport packed_conjecture_sweep(Letter m, std::size_t max_len,
                                          std::size_t max_power,
                                          std::size_t trunc_len,
                                          const Exec& exec = {},
                                          const StabilityOptions& opts = {});

}  // namespace plactic
