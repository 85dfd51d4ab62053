#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "plactic/bigint.hpp"
#include "plactic/word.hpp"

namespace plactic {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<std::uint32_t> parts);
  explicit Partition(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  std::uint64_t cells() const;
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<std::uint32_t> parts_;
  void check() const;
};

// One step of a row-insertion path.  Row/col are 0-based; the final step of a
// trace is always an appended cell and carries no displaced letter.
struct BumpStep {
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<Letter> displaced;
};
using BumpTrace = std::vector<BumpStep>;

// Semistandard Young tableau stored as ragged rows (row 0 on top).
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<Letter>> rows);  // validates

  // Skips validation; for rows produced by algorithms that guarantee the
  // invariants (insertion, the SSYT enumerator, jdt slides).
  static Tableau from_rows_unchecked(std::vector<std::vector<Letter>> rows);

  static bool rows_semistandard(const std::vector<std::vector<Letter>>& rows);

  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  // 1-based row access; rows beyond the shape are empty.
  std::span<const Letter> row(std::size_t i) const;
  std::size_t row_count() const { return rows_.size(); }
  std::uint64_t cells() const;
  bool empty() const { return rows_.empty(); }
  Partition shape() const;

  // Row reading word: bottom row first, each row left to right.  Its
  // P-tableau is the tableau itself, which makes it the canonical class
  // representative used everywhere below.
  Word reading_word() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<Letter>> rows_;

  friend std::pair<Tableau, BumpTrace> insert(Tableau t, Letter a);
  friend Tableau insert_word(Tableau t, std::span<const Letter> w);
};

// Schensted row insertion: in each row the leftmost entry strictly greater
// than the incoming letter is displaced into the next row.
std::pair<Tableau, BumpTrace> insert(Tableau t, Letter a);
Tableau insert_word(Tableau t, std::span<const Letter> w);

Tableau p_tableau(const Word& w);

// Full correspondence.  Q is standard with entries 1..|w| in creation order.
std::pair<Tableau, Tableau> rsk(const Word& w);

// Number of height-1 columns holding the letter a.
std::size_t singleton_count(const Tableau& t, Letter a);

// Skew tableau: row i occupies columns [inner_offsets[i], inner_offsets[i] +
// rows[i].size()).  Inner and outer boundaries must both be partition shaped.
struct SkewConfiguration {
  std::vector<std::size_t> inner_offsets;
  std::vector<std::vector<Letter>> rows;

  // The product layout: `first` placed southwest, `second` northeast, the
  // vacated rectangle above `first` and left of `second`.  Rectifying this
  // configuration yields the P-tableau of (reading word of first) *
  // (reading word of second).
  static SkewConfiguration product(const Tableau& first, const Tableau& second);

  bool valid() const;
};

// Jeu de taquin rectification.  Slides fill the vacated cells row by row,
// bottom row of the inner shape first, right to left inside a row; by
// confluence the result does not depend on that choice.
Tableau jdt_rectify(const SkewConfiguration& cfg);

// Sum of the first i parts of shape(P(w)); by Greene's theorem this is the
// longest union of i weakly increasing subsequences of w.
std::uint64_t greene_invariant(const Word& w, std::size_t i);

// Independent oracle for the same quantity: exhausts assignments of selected
// positions into i weakly increasing chains (dominated chain-tail states are
// merged, which loses nothing for the maximum).  Guarded by max_len.
std::uint64_t lwi_bruteforce(const Word& w, std::size_t i,
                             std::size_t max_len = 10);

// Longest weakly increasing subsequence ending in the letter a (0 if a does
// not occur in w).
std::uint64_t lwi_ending_at(const Word& w, Letter a);

// Number of standard Young tableaux of the given shape, by the hook length
// formula.  Exact for any size; the library's envelope is n <= 64.
BigInt hook_count(const Partition& shape);

// Partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(std::uint64_t n);

// All SSYT with `cells` cells and entries in [max_entry], streamed as ragged
// rows valid only during the callback.  Order: shapes in descending lex,
// fillings in lexicographic row-major order.
using SsytVisitor = std::function<void(const std::vector<std::vector<Letter>>&)>;
void for_each_ssyt(std::uint64_t cells, Letter max_entry, const SsytVisitor& fn);
void for_each_ssyt_of_shape(const Partition& shape, Letter lo, Letter hi,
                            const SsytVisitor& fn);
std::vector<Tableau> enumerate_ssyt(std::uint64_t cells, Letter max_entry);

// Closed-form count of the stream above (Littlewood's identity), used both
// as the enumeration guard and as an oracle against the enumerator.
BigInt ssyt_count(std::uint64_t cells, Letter max_entry);

}  // namespace plactic
