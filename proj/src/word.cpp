#include "plactic/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace plactic {

namespace {

Letter parse_letter(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty letter in word");
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad letter '" + token + "' in word");
  unsigned long v = std::stoul(token);
  if (v == 0 || v > 0xffffffffUL)
    throw std::invalid_argument("letter out of range: " + token);
  return static_cast<Letter>(v);
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) { check(); }

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) { check(); }

void Word::check() const {
  for (Letter a : letters_)
    if (a == 0) throw std::invalid_argument("word letters must be positive");
}

Word Word::parse(const std::string& text) {
  std::vector<Letter> letters;
  if (text.empty()) return Word{};
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::size_t end = comma == std::string::npos ? text.size() : comma;
      letters.push_back(parse_letter(text.substr(start, end - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Word{std::move(letters)};
  }
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad word '" + text + "'");
  // A '0' cannot be a letter, so such a string can only mean one multi-digit
  // letter (e.g. "10").
  if (text.find('0') != std::string::npos)
    return Word{{parse_letter(text)}};
  letters.reserve(text.size());
  for (char c : text) letters.push_back(static_cast<Letter>(c - '0'));
  return Word{std::move(letters)};
}

std::string Word::str() const {
  if (letters_.empty()) return "";
  bool compact = std::all_of(letters_.begin(), letters_.end(),
                             [](Letter a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

Letter Word::max_letter() const {
  Letter m = 0;
  for (Letter a : letters_) m = std::max(m, a);
  return m;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word{std::move(out)};
}

Word power(const Word& u, std::size_t k) {
  std::vector<Letter> out;
  out.reserve(u.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), u.begin(), u.end());
  return Word{std::move(out)};
}

std::size_t multiplicity(const Word& u, Letter a) {
  return static_cast<std::size_t>(std::count(u.begin(), u.end(), a));
}

Word restrict_to(const Word& w, Letter m) {
  std::vector<Letter> out;
  for (Letter a : w)
    if (a <= m) out.push_back(a);
  return Word{std::move(out)};
}

Word standardize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("standardize: empty word");
  std::map<Letter, Letter> rank;
  for (Letter a : w) rank[a] = 0;
  Letter next = 1;
  for (auto& [value, r] : rank) r = next++;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(rank[a]);
  return Word{std::move(out)};
}

bool is_packed(const Word& w, Letter m) {
  if (m == 0) return false;
  std::vector<bool> seen(m, false);
  for (Letter a : w) {
    if (a > m) return false;
    seen[a - 1] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size(), false);
  for (Letter a : w) {
    if (a == 0 || a > w.size() || seen[a - 1]) return false;
    seen[a - 1] = true;
  }
  return true;
}

}  // namespace plactic
