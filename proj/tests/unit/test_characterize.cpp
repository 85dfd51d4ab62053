#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "plactic/characterize.hpp"
#include "plactic/errors.hpp"
#include "plactic/knuth.hpp"
#include "plactic/tableau.hpp"

using namespace plactic;
using testutil::W;
using testutil::each_word_upto;
using testutil::words_upto;

namespace {

Word staircase(Letter m) {
  std::vector<Letter> letters;
  for (Letter a = m; a >= 1; --a) letters.push_back(a);
  return Word{letters};
}

// Two-letter base words using both letters, lengths 2..max_len.
std::vector<Word> two_letter_bases(std::size_t max_len) {
  std::vector<Word> bases;
  each_word_upto(2, max_len, [&](const Word& u) {
    if (multiplicity(u, 1) > 0 && multiplicity(u, 2) > 0) bases.push_back(u);
  });
  return bases;
}

}  // namespace

TEST_CASE("c_one_membership examples") {
  COneMembership yes = c_one_membership(W("21"));
  CHECK(yes.direct);
  CHECK(yes.first_row_ones);
  CHECK(yes.lwi_match);
  CHECK(yes.member());
  CHECK(yes.consistent());

  COneMembership no = c_one_membership(W("12"));
  CHECK(!no.direct);
  CHECK(!no.first_row_ones);
  CHECK(!no.lwi_match);
  CHECK(no.consistent());

  CHECK(c_one_membership(Word{}).member());
}

TEST_CASE("c_one_membership readings agree everywhere") {
  each_word_upto(4, 7, [](const Word& w) {
    COneMembership v = c_one_membership(w);
    CHECK(v.consistent());
    CHECK(v.direct == in_centralizer(W("1"), w));
  });
}

TEST_CASE("staircase membership") {
  CHECK(staircase_membership(W("11"), 1));
  CHECK(!staircase_membership(W("12"), 1));
  CHECK_THROWS_AS(staircase_membership(W("1"), 0), std::invalid_argument);

  for (Letter m = 1; m <= 3; ++m) {
    Word delta = staircase(m);
    each_word_upto(m + 2, 6, [&](const Word& w) {
      CHECK(staircase_membership(w, m) == in_centralizer(delta, w));
    });
  }
}

TEST_CASE("descending run from the maximum") {
  CHECK(descending_run_from_max(W("3122413321")) == 4);
  CHECK(descending_run_from_max(W("3312")) == 2);
  CHECK(descending_run_from_max(W("21")) == 2);
  CHECK(descending_run_from_max(W("12")) == 1);
  CHECK(descending_run_from_max(W("1")) == 1);
  CHECK(descending_run_from_max(Word{}) == 0);
}

TEST_CASE("row bound is necessary for membership") {
  CHECK(row_bound_check(W("2"), W("21")));
  CHECK(!row_bound_check(W("5"), W("21")));

  for (const Word& u : {W("21"), W("312"), W("321")}) {
    each_word_upto(4, 5, [&](const Word& w) {
      if (in_centralizer(u, w)) CHECK(row_bound_check(w, u));
    });
  }
}

TEST_CASE("second-row product rule") {
  CHECK(r2_product_length(W("21"), W("12")) == 1);
  CHECK(r2_product_length(Word{}, Word{}) == 0);
  CHECK(r2_product_length(W("12"), W("12")) == 1);
  CHECK_THROWS_AS(r2_product_length(W("3"), W("12")), std::invalid_argument);

  each_word_upto(2, 6, [](const Word& w) {
    each_word_upto(2, 6, [&](const Word& u) {
      CHECK(r2_product_length(w, u) ==
            p_tableau(concat(w, u)).row(2).size());
    });
  });
}

TEST_CASE("two-letter membership examples") {
  CHECK(two_letter_membership(W("12"), W("21")));
  CHECK(!two_letter_membership(W("12"), W("3")));
  CHECK(two_letter_membership(W("12"), Word{}));

  CHECK_THROWS_AS(two_letter_membership(Word{}, W("1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(two_letter_membership(W("123"), W("1")),
                  std::invalid_argument);
  try {
    two_letter_membership(W("11"), W("21"));
    FAIL("expected a routed error");
  } catch (const routed_error& e) {
    CHECK(e.route == "single_letter");
  }
}

TEST_CASE("two-letter membership agrees with brute force") {
  for (const Word& u : two_letter_bases(4)) {
    each_word_upto(3, 5, [&](const Word& w) {
      CHECK(two_letter_membership(u, w) == in_centralizer(u, w));
    });
  }
  // the denser base from the characterization statement
  each_word_upto(3, 5, [&](const Word& w) {
    CHECK(two_letter_membership(W("112"), w) == in_centralizer(W("112"), w));
  });
}

TEST_CASE("members of two-letter centralizers have small top rows") {
  for (const Word& u : two_letter_bases(4)) {
    each_word_upto(3, 5, [&](const Word& w) {
      if (!in_centralizer(u, w)) return;
      Tableau p = p_tableau(w);
      auto row_max = [](std::span<const Letter> r) {
        return r.empty() ? Letter{0} : r.back();
      };
      CHECK(row_max(p.row(1)) <= 2);
      CHECK(row_max(p.row(2)) <= 2);
    });
  }
}

TEST_CASE("two-letter tail rows are driven by the restriction") {
  for (const Word& u : words_upto(2, 4)) {
    each_word_upto(4, 5, [&](const Word& w) {
      Tableau pw = p_tableau(w);
      if (pw.row_count() < 2) return;
      auto over_two = [](std::span<const Letter> r) {
        return !r.empty() && r.back() > 2;
      };
      if (over_two(pw.row(1)) || over_two(pw.row(2))) return;
      Tableau pwu = p_tableau(concat(w, u));
      Tableau prwu = p_tableau(concat(restrict_to(w, 2), u));
      for (std::size_t i = 1; i <= 2; ++i) {
        auto a = pwu.row(i);
        auto b = prwu.row(i);
        CHECK(std::vector<Letter>(a.begin(), a.end()) ==
              std::vector<Letter>(b.begin(), b.end()));
      }
      for (std::size_t i = 3; i <= pwu.row_count(); ++i) {
        auto a = pwu.row(i);
        auto b = pw.row(i);
        CHECK(std::vector<Letter>(a.begin(), a.end()) ==
              std::vector<Letter>(b.begin(), b.end()));
      }
    });
  }
}

TEST_CASE("singleton counts are power-invariant") {
  CHECK(c1c2_power_invariance(W("12"), 5));
  CHECK(c1c2_power_invariance(W("122"), 4));
  CHECK(c1c2_power_invariance(W("21"), 5));
  CHECK_THROWS_AS(c1c2_power_invariance(W("1"), 3), std::invalid_argument);
  CHECK_THROWS_AS(c1c2_power_invariance(W("312"), 3), std::invalid_argument);

  for (const Word& u : two_letter_bases(5)) CHECK(c1c2_power_invariance(u, 4));
}

TEST_CASE("row shift for permutation powers") {
  CHECK(row_shift_check(W("21"), 2));
  CHECK(row_shift_check(W("1"), 1));
  CHECK(row_shift_check(W("1234"), 4));
  CHECK(row_shift_check(W("312"), 3));
  CHECK_THROWS_AS(row_shift_check(W("112"), 2), std::invalid_argument);
  CHECK_THROWS_AS(row_shift_check(Word{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(row_shift_check(W("1234"), 2), std::invalid_argument);
}

TEST_CASE("lwi growth for permutation powers") {
  CHECK(lwi_growth_check(W("21"), 2, 1));
  CHECK(lwi_growth_check(W("1"), 1, 1));
  CHECK(lwi_growth_check(W("312"), 2, 2));
  CHECK_THROWS_AS(lwi_growth_check(W("21"), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(lwi_growth_check(W("122"), 1, 1), std::invalid_argument);
}
