#pragma once

#include <cstdint>
#include <vector>

#include "plactic/exec.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic {

// Words are plactic-equivalent iff their P-tableaux coincide.
bool knuth_equivalent(const Word& v, const Word& w);

// Words one elementary Knuth move away: xzy <-> zxy for x <= y < z and
// yxz <-> yzx for x < y <= z, applied to consecutive triples.  Sorted, unique.
std::vector<Word> knuth_neighbors(const Word& w);

// Whole equivalence class by closure under elementary moves; sorted.  The
// class of w has hook_count(shape(P(w))) elements, all sharing w's content.
std::vector<Word> knuth_class(const Word& w, std::size_t max_len = 9);

// w centralizes u in the plactic monoid: P(uw) == P(wu).
bool in_centralizer(const Word& u, const Word& w);

// One plactic class intersecting the centralizer slice, identified by its
// P-tableau.  `weight` counts the words of length n mapping to it, which is
// hook_count of the shape.
struct WeightedClass {
  Tableau tableau;
  BigInt weight;
};

struct CentralizerSlice {
  Word base;
  std::uint64_t length = 0;
  Letter max_letter = 0;
  std::vector<WeightedClass> classes;  // in SSYT enumeration order
  BigInt total;                        // sum of weights = c_{n,m}(u)
};

// Class-level engine: enumerates SSYT with n cells over [m], keeps those
// whose reading word centralizes u.  Membership is a class property (the
// plactic congruence), so one representative decides a whole class.
CentralizerSlice centralizer_slice(const Word& u, std::uint64_t n, Letter m,
                                   const Exec& exec = {});

// Word-level oracle: every w in [m]^n with P(uw) == P(wu), in lexicographic
// order.  Exponentially larger than the slice; meant for cross-checks and
// witness extraction.
std::vector<Word> centralizer_words(const Word& u, std::uint64_t n, Letter m,
                                    const Exec& exec = {});

}  // namespace plactic
