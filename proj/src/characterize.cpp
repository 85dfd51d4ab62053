#include "plactic/characterize.hpp"

#include <algorithm>
#include <stdexcept>

#include "plactic/errors.hpp"
#include "plactic/knuth.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

namespace {

bool all_ones(std::span<const Letter> row) {
  return std::all_of(row.begin(), row.end(), [](Letter a) { return a == 1; });
}

Letter row_max(std::span<const Letter> row) {
  return row.empty() ? 0 : row.back();  // rows weakly increase
}

void require_two_letter_alphabet(const Word& v, const char* who) {
  if (v.max_letter() > 2)
    throw std::invalid_argument(std::string(who) +
                                ": word must be over the alphabet {1,2}");
}

}  // namespace

COneMembership c_one_membership(const Word& w) {
  COneMembership result;
  result.direct = in_centralizer(Word{{1}}, w);
  Tableau p = p_tableau(w);
  result.first_row_ones = all_ones(p.row(1));
  result.lwi_match = greene_invariant(w, 1) == lwi_ending_at(w, 1);
  return result;
}

bool staircase_membership(const Word& w, Letter m) {
  if (m == 0) throw std::invalid_argument("staircase_membership: m must be >= 1");
  Tableau p = p_tableau(w);
  for (std::size_t i = 1; i <= m; ++i)
    if (row_max(p.row(i)) > m) return false;
  return true;
}

std::size_t descending_run_from_max(const Word& u) {
  Letter m = u.max_letter();
  if (m == 0) return 0;
  // Greedy scan: the needed letters m, m-1, ... are distinct and ordered, so
  // matching each at its earliest occurrence after the previous match is
  // optimal.
  Letter target = m;
  for (Letter a : u) {
    if (a == target) {
      --target;
      if (target == 0) break;
    }
  }
  return m - target;
}

bool row_bound_check(const Word& w, const Word& u) {
  std::size_t k = descending_run_from_max(u);
  Tableau p = p_tableau(w);
  Letter m = u.max_letter();
  for (std::size_t i = 1; i <= k; ++i)
    if (row_max(p.row(i)) > m) return false;
  return true;
}

std::uint64_t r2_product_length(const Word& w, const Word& u) {
  require_two_letter_alphabet(w, "r2_product_length");
  require_two_letter_alphabet(u, "r2_product_length");
  Tableau pw = p_tableau(w);
  Tableau pu = p_tableau(u);
  std::uint64_t r2w = pw.row(2).size();
  std::uint64_t r2u = pu.row(2).size();
  std::uint64_t c1u = singleton_count(pu, 1);
  std::uint64_t c2w = singleton_count(pw, 2);
  return r2w + r2u + std::min(c1u, c2w);
}

bool two_letter_membership(const Word& u, const Word& w) {
  require_two_letter_alphabet(u, "two_letter_membership");
  if (u.empty())
    throw std::invalid_argument("two_letter_membership: base word is empty");
  std::size_t m1 = multiplicity(u, 1);
  std::size_t m2 = multiplicity(u, 2);
  if (m1 == 0 || m2 == 0)
    throw routed_error("single_letter",
                       "two_letter_membership: base word uses one letter; "
                       "its centralizer is the single-letter case");

  Tableau pu = p_tableau(u);
  Tableau pw = p_tableau(w);
  std::uint64_t c1u = singleton_count(pu, 1);
  std::uint64_t c2u = singleton_count(pu, 2);
  std::uint64_t c1w = singleton_count(pw, 1);
  std::uint64_t c2w = singleton_count(pw, 2);

  // (b) no letter above 2 in the first two rows of P(w)
  if (row_max(pw.row(1)) > 2 || row_max(pw.row(2)) > 2) return false;

  // (a) singleton-count conditions, split on the sign of m1 - m2
  if (m1 < m2)
    return (c1w == c1u && c1u <= c2w) || (c1w == c2w && c2w < c1u);
  if (m1 == m2)
    return std::min(c1w, c2w) >= c1u || (c1w == c2w && c1w < c1u);
  return (c2w == c2u && c2u <= c1w) || (c1w == c2w && c1w < c2u);
}

bool c1c2_power_invariance(const Word& u, std::size_t k_max) {
  std::size_t m1 = multiplicity(u, 1);
  std::size_t m2 = multiplicity(u, 2);
  require_two_letter_alphabet(u, "c1c2_power_invariance");
  if (m1 == 0 || m2 == 0)
    throw std::invalid_argument(
        "c1c2_power_invariance: base word must use both letters");
  std::uint64_t c1 = singleton_count(p_tableau(u), 1);
  std::uint64_t c2 = singleton_count(p_tableau(u), 2);
  for (std::size_t k = 1; k <= k_max; ++k) {
    Tableau pk = p_tableau(power(u, k));
    if (m1 <= m2 && singleton_count(pk, 1) != c1) return false;
    if (m2 <= m1 && singleton_count(pk, 2) != c2) return false;
  }
  return true;
}

bool row_shift_check(const Word& u, std::size_t k) {
  if (!is_permutation(u) || u.empty())
    throw std::invalid_argument("row_shift_check: u must be a nonempty permutation");
  std::size_t m = u.size();
  if (k < m)
    throw std::invalid_argument("row_shift_check: requires k >= m");

  Word uk = power(u, k);
  Tableau pk = p_tableau(uk);
  Tableau pk1 = p_tableau(concat(uk, u));

  // Row i of P(u^{k+1}) is the one-letter word i concatenated with row i of
  // P(u^k).
  if (pk1.row_count() != pk.row_count()) return false;
  for (std::size_t i = 1; i <= pk.row_count(); ++i) {
    auto base = pk.row(i);
    auto grown = pk1.row(i);
    if (grown.size() != base.size() + 1 || grown[0] != i) return false;
    for (std::size_t c = 0; c < base.size(); ++c)
      if (grown[c + 1] != base[c]) return false;
  }

  // P(u^{k+1}) = P(delta_m u^k)
  std::vector<Letter> staircase(m);
  for (std::size_t i = 0; i < m; ++i)
    staircase[i] = static_cast<Letter>(m - i);
  return pk1 == p_tableau(concat(Word{staircase}, uk));
}

bool lwi_growth_check(const Word& u, std::size_t i, std::size_t k) {
  if (!is_permutation(u) || u.empty())
    throw std::invalid_argument("lwi_growth_check: u must be a nonempty permutation");
  if (i == 0 || i > u.size())
    throw std::invalid_argument("lwi_growth_check: requires 1 <= i <= m");
  return greene_invariant(power(u, k + 1), i) >=
         greene_invariant(power(u, k), i) + i;
}

}  // namespace plactic
