#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "plactic/word.hpp"

using namespace plactic;
using testutil::W;
using testutil::each_word_upto;

TEST_CASE("word parsing") {
  CHECK(W("3122413321").letters() ==
        std::vector<Letter>{3, 1, 2, 2, 4, 1, 3, 3, 2, 1});
  CHECK(W("10,3,11").letters() == std::vector<Letter>{10, 3, 11});
  CHECK(W("10").letters() == std::vector<Letter>{10});
  CHECK(W("102").letters() == std::vector<Letter>{102});
  CHECK(W("").empty());
  // the documented ambiguity: "11" is read as the digit word 1,1
  CHECK(W("11").letters() == std::vector<Letter>{1, 1});
  CHECK(Word{{11}}.str() == "11");

  CHECK_THROWS_AS(W("0"), std::invalid_argument);
  CHECK_THROWS_AS(W("1,0,2"), std::invalid_argument);
  CHECK_THROWS_AS(W("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(W(",1"), std::invalid_argument);
  CHECK_THROWS_AS(W("2,"), std::invalid_argument);
  CHECK_THROWS_AS(W("abc"), std::invalid_argument);
  CHECK_THROWS_AS(W("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(Word{{0}}, std::invalid_argument);
}

TEST_CASE("word serialization") {
  CHECK(W("3122413321").str() == "3122413321");
  CHECK(W("10,3,11").str() == "10,3,11");
  CHECK(W("3,1,2").str() == "312");
  CHECK(Word{}.str() == "");

  // round trip on every word without a letter >= 10
  each_word_upto(9, 3, [](const Word& w) { CHECK(Word::parse(w.str()) == w); });
  CHECK(Word::parse(Word{{12, 7, 30}}.str()) == Word{{12, 7, 30}});
}

TEST_CASE("concat, power, multiplicity") {
  CHECK(concat(W("312"), W("21")) == W("31221"));
  CHECK(concat(Word{}, W("12")) == W("12"));
  CHECK(power(W("21"), 3) == W("212121"));
  CHECK(power(W("21"), 0) == Word{});
  CHECK(power(Word{}, 5) == Word{});

  CHECK(multiplicity(W("3122413321"), 1) == 3);
  CHECK(multiplicity(W("3122413321"), 2) == 3);
  CHECK(multiplicity(W("3122413321"), 4) == 1);
  CHECK(multiplicity(W("3122413321"), 5) == 0);

  each_word_upto(3, 3, [](const Word& u) {
    for (std::size_t k = 0; k <= 3; ++k)
      for (Letter a = 1; a <= 3; ++a)
        CHECK(multiplicity(power(u, k), a) == k * multiplicity(u, a));
  });
}

TEST_CASE("restrict_to") {
  CHECK(restrict_to(W("3122413321"), 2) == W("122121"));
  CHECK(restrict_to(W("3122413321"), 0) == Word{});
  CHECK(restrict_to(W("12"), 9) == W("12"));
  each_word_upto(4, 4, [](const Word& w) {
    for (Letter m = 0; m <= 4; ++m) {
      Word r = restrict_to(w, m);
      CHECK(restrict_to(r, m) == r);
      CHECK(r.max_letter() <= m);
    }
    CHECK(restrict_to(w, w.max_letter()) == w);
  });
}

TEST_CASE("standardize") {
  CHECK(standardize(W("3152")) == W("3142"));
  CHECK(standardize(W("11")) == W("11"));
  CHECK(standardize(W("972")) == W("321"));
  CHECK_THROWS_AS(standardize(Word{}), std::invalid_argument);

  each_word_upto(4, 4, [](const Word& w) {
    if (w.empty()) return;
    Word s = standardize(w);
    CHECK(standardize(s) == s);
    // order-isomorphic to the original, position by position
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) {
        CHECK((w[i] < w[j]) == (s[i] < s[j]));
        CHECK((w[i] == w[j]) == (s[i] == s[j]));
      }
    std::set<Letter> distinct(w.begin(), w.end());
    CHECK(is_packed(s, static_cast<Letter>(distinct.size())));
  });
}

TEST_CASE("is_packed and is_permutation") {
  CHECK(is_packed(W("121"), 2));
  CHECK(!is_packed(W("12"), 3));
  CHECK(!is_packed(W("133"), 3));
  CHECK(!is_packed(W("121"), 1));
  CHECK(is_packed(W("1"), 1));
  CHECK(!is_packed(Word{}, 1));

  CHECK(is_permutation(W("1234")));
  CHECK(is_permutation(W("4123")));
  CHECK(is_permutation(W("1")));
  CHECK(is_permutation(Word{}));
  CHECK(!is_permutation(W("11")));
  CHECK(!is_permutation(W("122")));
  CHECK(!is_permutation(W("2")));
  CHECK(!is_permutation(W("23")));
}

TEST_CASE("max_letter") {
  CHECK(Word{}.max_letter() == 0);
  CHECK(W("3122413321").max_letter() == 4);
  CHECK(Word{{17, 3}}.max_letter() == 17);
}
