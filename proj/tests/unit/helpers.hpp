#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plactic/word.hpp"

namespace testutil {

using plactic::Letter;
using plactic::Word;

inline Word W(const std::string& text) { return Word::parse(text); }

// All words of exactly length n over [m], lexicographic order.
inline void each_word(Letter m, std::size_t n,
                      const std::function<void(const Word&)>& fn) {
  if (n == 0) {
    fn(Word{});
    return;
  }
  if (m == 0) return;
  std::vector<Letter> w(n, 1);
  while (true) {
    fn(Word{std::vector<Letter>(w)});
    std::size_t i = n;
    while (i > 0 && w[i - 1] == m) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
}

// All words of length <= max_len over [m], shortest first.
inline void each_word_upto(Letter m, std::size_t max_len,
                           const std::function<void(const Word&)>& fn) {
  for (std::size_t n = 0; n <= max_len; ++n) each_word(m, n, fn);
}

inline std::vector<Word> words_upto(Letter m, std::size_t max_len) {
  std::vector<Word> out;
  each_word_upto(m, max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace testutil
