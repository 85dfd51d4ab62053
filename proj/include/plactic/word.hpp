#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace plactic {

using Letter = std::uint32_t;

// A finite word over the positive integers.  The empty word is a valid value
// (it is the monoid identity and belongs to every centralizer).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  // Accepts the compact digit form ("3122413321") or comma-separated
  // integers ("10,3,11").  A comma-free string containing a '0' is read as a
  // single multi-digit letter, since no digit word may contain 0.
  static Word parse(const std::string& text);

  // Compact digit string when all letters are <= 9, comma-separated
  // otherwise.  Note the one ambiguity of this scheme: a single letter >= 10
  // with no zero digit ("11") re-parses as a digit word.
  std::string str() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::span<const Letter> span() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter max_letter() const;  // 0 for the empty word

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  void check() const;
};

Word concat(const Word& u, const Word& v);
Word power(const Word& u, std::size_t k);
std::size_t multiplicity(const Word& u, Letter a);

// Subsequence of letters <= m, order preserved.
Word restrict_to(const Word& w, Letter m);

// Replace each letter by its rank among the distinct values (1-based).
// Ties keep their common rank, so 3152 -> 3142 and 11 -> 11.
Word standardize(const Word& w);

// Uses every letter of [m] and nothing above m.
bool is_packed(const Word& w, Letter m);

// Rearrangement of 1..size(); the empty word counts as the permutation of S_0.
bool is_permutation(const Word& w);

}  // namespace plactic
