#pragma once

#include <cstdint>

#include "plactic/word.hpp"

namespace plactic {

// Three equivalent readings of membership in C(1), reported separately so a
// disagreement (never expected) is visible rather than masked.
struct COneMembership {
  bool direct = false;          // P(1w) == P(w1)
  bool first_row_ones = false;  // first row of P(w) is all ones
  bool lwi_match = false;       // lwi(w) == lwi ending in the letter 1
  bool member() const { return direct; }
  bool consistent() const {
    return direct == first_row_ones && direct == lwi_match;
  }
};
COneMembership c_one_membership(const Word& w);

// Membership in C(delta_m) for the staircase word delta_m = m, m-1, ..., 1:
// every entry in the first m rows of P(w) is at most m.
bool staircase_membership(const Word& w, Letter m);

// Longest suffix m, m-1, ..., m-k+1 of the descending staircase realizable
// as a subsequence of u, starting at m = max(u).
std::size_t descending_run_from_max(const Word& u);

// If u realizes m, m-1, ..., m-k+1 (m = max u), membership in C(u) forces
// max of row i of P(w) to be at most m for all i <= k.  Returns that bound's
// verdict for w.
bool row_bound_check(const Word& w, const Word& u);

// Length of the second row of P(wu) for two-letter words, by the product
// rule |R2(wu)| = |R2(w)| + |R2(u)| + min(c1(u), c2(w)).
std::uint64_t r2_product_length(const Word& w, const Word& u);

// Exact membership test for C(u) when u uses both letters 1 and 2: the
// singleton-count conditions (split by the sign of m1(u) - m2(u)) plus the
// requirement that the first two rows of P(w) hold no letter above 2.
// A constant base word routes to the single-letter characterization.
bool two_letter_membership(const Word& u, const Word& w);

// c1(u^k) is constant in k when m1(u) <= m2(u); dually for c2.  Verifies the
// applicable equalities for k = 1..k_max.
bool c1c2_power_invariance(const Word& u, std::size_t k_max);

// For a permutation u of [m] and k >= m: row i of P(u^{k+1}) is the letter i
// prefixed to row i of P(u^k), and P(u^{k+1}) == P(delta_m u^k).
bool row_shift_check(const Word& u, std::size_t k);

// For a permutation u of [m] and i <= m: the first i rows of P(u^k) grow by
// at least i cells per extra factor of u.
bool lwi_growth_check(const Word& u, std::size_t i, std::size_t k);

}  // namespace plactic
