#include "plactic/knuth.hpp"

#include <algorithm>
#include <set>

#include "plactic/errors.hpp"
#include "parallel.hpp"

namespace plactic {

bool knuth_equivalent(const Word& v, const Word& w) {
  return p_tableau(v) == p_tableau(w);
}

std::vector<Word> knuth_neighbors(const Word& w) {
  std::set<Word> out;
  if (w.size() < 3) return {};
  std::vector<Letter> scratch(w.begin(), w.end());
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    Letter a = w[p], b = w[p + 1], c = w[p + 2];
    // xzy <-> zxy (x <= y < z) swaps the first two letters of the triple.
    if ((a <= c && c < b) || (b <= c && c < a)) {
      std::swap(scratch[p], scratch[p + 1]);
      out.insert(Word{scratch});
      std::swap(scratch[p], scratch[p + 1]);
    }
    // yxz <-> yzx (x < y <= z) swaps the last two.
    if ((b < a && a <= c) || (c < a && a <= b)) {
      std::swap(scratch[p + 1], scratch[p + 2]);
      out.insert(Word{scratch});
      std::swap(scratch[p + 1], scratch[p + 2]);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Word> knuth_class(const Word& w, std::size_t max_len) {
  if (w.size() > max_len)
    throw resource_limit_error("knuth_class: word longer than limit " +
                               std::to_string(max_len));
  std::set<Word> seen{w};
  std::vector<Word> frontier{w};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& v : frontier)
      for (Word& nb : knuth_neighbors(v))
        if (seen.insert(nb).second) next.push_back(std::move(nb));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool in_centralizer(const Word& u, const Word& w) {
  // P(uw) = P(w) inserted into P(u) and vice versa; insertion is a left fold.
  Tableau pu = p_tableau(u);
  Tableau pw = p_tableau(w);
  return insert_word(std::move(pu), w.span()) ==
         insert_word(std::move(pw), u.span());
}

namespace {

// Reading word of ragged rows into a reusable buffer (bottom row first).
void reading_word_into(const std::vector<std::vector<Letter>>& rows,
                       std::vector<Letter>& buf) {
  buf.clear();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    buf.insert(buf.end(), it->begin(), it->end());
}

}  // namespace

CentralizerSlice centralizer_slice(const Word& u, std::uint64_t n, Letter m,
                                   const Exec& exec) {
  if (m == 0 && n > 0)
    throw std::invalid_argument("centralizer_slice: alphabet must be nonempty");
  if (ssyt_count(n, m) > exec.guard)
    throw resource_limit_error(
        "centralizer_slice: " + ssyt_count(n, m).str() +
        " tableaux exceed the guard of " + std::to_string(exec.guard));

  CentralizerSlice slice;
  slice.base = u;
  slice.length = n;
  slice.max_letter = m;

  Tableau pu = p_tableau(u);
  auto shapes = partitions_of(n);
  std::vector<std::vector<WeightedClass>> found(shapes.size());
  detail::run_tasks(exec, shapes.size(), [&](std::size_t si) {
    const Partition& shape = shapes[si];
    if (shape.rows() > m) return;
    BigInt weight = hook_count(shape);
    std::vector<Letter> reading;
    for_each_ssyt_of_shape(
        shape, 1, m, [&](const std::vector<std::vector<Letter>>& rows) {
          reading_word_into(rows, reading);
          // P(u . r) vs P(r . u); the tableau itself is P(r).
          Tableau left = insert_word(pu, reading);
          Tableau right = insert_word(Tableau::from_rows_unchecked(rows),
                                      u.span());
          if (left == right)
            found[si].push_back({Tableau::from_rows_unchecked(rows), weight});
        });
  });
  slice.total = 0;
  for (auto& bucket : found)
    for (auto& wc : bucket) {
      slice.total += wc.weight;
      slice.classes.push_back(std::move(wc));
    }
  return slice;
}

std::vector<Word> centralizer_words(const Word& u, std::uint64_t n, Letter m,
                                    const Exec& exec) {
  if (m == 0 && n > 0)
    throw std::invalid_argument("centralizer_words: alphabet must be nonempty");
  BigInt space = 1;
  for (std::uint64_t i = 0; i < n; ++i) space *= m;
  if (space > exec.guard)
    throw resource_limit_error("centralizer_words: " + space.str() +
                               " words exceed the guard of " +
                               std::to_string(exec.guard));
  if (n == 0) {
    return in_centralizer(u, Word{}) ? std::vector<Word>{Word{}}
                                     : std::vector<Word>{};
  }

  Tableau pu = p_tableau(u);
  // Partition the odometer by first letter; each task scans its block in
  // lexicographic order and blocks are concatenated in letter order.
  std::vector<std::vector<Word>> found(m);
  detail::run_tasks(exec, m, [&](std::size_t task) {
    std::vector<Letter> w(n, 1);
    w[0] = static_cast<Letter>(task + 1);
    for (;;) {
      Tableau left = insert_word(pu, w);
      Tableau right = insert_word(p_tableau(Word{w}), u.span());
      if (left == right) found[task].push_back(Word{w});
      // advance the suffix w[1..]; stop when it wraps
      std::size_t pos = n;
      while (pos > 1 && w[pos - 1] == m) w[--pos] = 1;
      if (pos == 1) break;
      ++w[pos - 1];
    }
  });
  std::vector<Word> out;
  for (auto& bucket : found)
    for (auto& w : bucket) out.push_back(std::move(w));
  return out;
}

}  // namespace plactic
