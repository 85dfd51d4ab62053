#include "plactic/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "plactic/errors.hpp"

namespace plactic {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::initializer_list<std::uint32_t> parts)
    : parts_(parts) {
  check();
}

Partition::Partition(std::vector<std::uint32_t> parts)
    : parts_(std::move(parts)) {
  check();
}

void Partition::check() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

std::uint64_t Partition::cells() const {
  std::uint64_t n = 0;
  for (auto p : parts_) n += p;
  return n;
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<Letter>> rows) : rows_(std::move(rows)) {
  if (!rows_semistandard(rows_))
    throw std::invalid_argument("rows do not form a semistandard tableau");
}

Tableau Tableau::from_rows_unchecked(std::vector<std::vector<Letter>> rows) {
  Tableau t;
  t.rows_ = std::move(rows);
  return t;
}

bool Tableau::rows_semistandard(const std::vector<std::vector<Letter>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == 0) return false;
      if (c && rows[r][c] < rows[r][c - 1]) return false;
      if (r && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

std::span<const Letter> Tableau::row(std::size_t i) const {
  if (i == 0) throw std::out_of_range("tableau rows are 1-based");
  if (i > rows_.size()) return {};
  return rows_[i - 1];
}

std::uint64_t Tableau::cells() const {
  std::uint64_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Partition Tableau::shape() const {
  std::vector<std::uint32_t> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_)
    parts.push_back(static_cast<std::uint32_t>(row.size()));
  return Partition{std::move(parts)};
}

Word Tableau::reading_word() const {
  std::vector<Letter> out;
  out.reserve(cells());
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return Word{std::move(out)};
}

// ---------------------------------------------------------------------------
// Row insertion

namespace {

// Core bump loop; returns the cell where the cascade terminated.
std::pair<std::size_t, std::size_t> insert_cell(
    std::vector<std::vector<Letter>>& rows, Letter a) {
  Letter cur = a;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({cur});
      return {r, 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      return {r, row.size() - 1};
    }
    std::swap(cur, *it);
  }
}

}  // namespace

std::pair<Tableau, BumpTrace> insert(Tableau t, Letter a) {
  if (a == 0) throw std::invalid_argument("letters must be positive");
  BumpTrace trace;
  Letter cur = a;
  auto& rows = t.rows_;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({cur});
      trace.push_back({r, 0, std::nullopt});
      break;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      trace.push_back({r, row.size() - 1, std::nullopt});
      break;
    }
    trace.push_back({r, static_cast<std::size_t>(it - row.begin()), *it});
    std::swap(cur, *it);
  }
  return {std::move(t), std::move(trace)};
}

Tableau insert_word(Tableau t, std::span<const Letter> w) {
  for (Letter a : w) insert_cell(t.rows_, a);
  return t;
}

Tableau p_tableau(const Word& w) { return insert_word(Tableau{}, w.span()); }

std::pair<Tableau, Tableau> rsk(const Word& w) {
  std::vector<std::vector<Letter>> p, q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [r, c] = insert_cell(p, w[i]);
    if (r == q.size()) q.emplace_back();
    q[r].push_back(static_cast<Letter>(i + 1));
    (void)c;  // a new cell always lands at the end of its row
  }
  return {Tableau::from_rows_unchecked(std::move(p)),
          Tableau::from_rows_unchecked(std::move(q))};
}

std::size_t singleton_count(const Tableau& t, Letter a) {
  const auto& rows = t.rows();
  if (rows.empty()) return 0;
  std::size_t second = rows.size() > 1 ? rows[1].size() : 0;
  std::size_t count = 0;
  for (std::size_t c = second; c < rows[0].size(); ++c)
    if (rows[0][c] == a) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Jeu de taquin

SkewConfiguration SkewConfiguration::product(const Tableau& first,
                                             const Tableau& second) {
  SkewConfiguration cfg;
  std::size_t width = first.rows().empty() ? 0 : first.rows()[0].size();
  for (const auto& row : second.rows()) {
    cfg.inner_offsets.push_back(width);
    cfg.rows.push_back(row);
  }
  for (const auto& row : first.rows()) {
    cfg.inner_offsets.push_back(0);
    cfg.rows.push_back(row);
  }
  return cfg;
}

bool SkewConfiguration::valid() const {
  if (inner_offsets.size() != rows.size()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    std::size_t end = inner_offsets[r] + rows[r].size();
    if (r) {
      if (inner_offsets[r] > inner_offsets[r - 1]) return false;          // inner shape
      if (end > inner_offsets[r - 1] + rows[r - 1].size()) return false;  // outer shape
    }
    for (std::size_t c = 1; c < rows[r].size(); ++c)
      if (rows[r][c] < rows[r][c - 1]) return false;
    if (r) {
      // column strictness on the overlap with the row above
      std::size_t lo = std::max(inner_offsets[r], inner_offsets[r - 1]);
      std::size_t hi =
          std::min(end, inner_offsets[r - 1] + rows[r - 1].size());
      for (std::size_t c = lo; c < hi; ++c)
        if (rows[r][c - inner_offsets[r]] <=
            rows[r - 1][c - inner_offsets[r - 1]])
          return false;
    }
    for (Letter a : rows[r])
      if (a == 0) return false;
  }
  return true;
}

Tableau jdt_rectify(const SkewConfiguration& cfg) {
  if (!cfg.valid())
    throw std::invalid_argument("invalid skew configuration");
  std::size_t nrows = cfg.rows.size();
  std::vector<std::size_t> off(cfg.inner_offsets);
  std::vector<std::size_t> end(nrows);
  std::vector<std::vector<Letter>> grid(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    end[r] = off[r] + cfg.rows[r].size();
    grid[r].assign(end[r], 0);
    std::copy(cfg.rows[r].begin(), cfg.rows[r].end(), grid[r].begin() + off[r]);
  }
  for (std::size_t ri = nrows; ri-- > 0;) {
    while (off[ri] > 0) {
      std::size_t hr = ri, hc = --off[ri];
      for (;;) {
        bool east = hc + 1 < end[hr];
        bool south =
            hr + 1 < nrows && hc >= off[hr + 1] && hc < end[hr + 1];
        // Move the smaller neighbor into the hole; ties go to the south one,
        // which is what keeps columns strict.
        if (south && (!east || grid[hr + 1][hc] <= grid[hr][hc + 1])) {
          grid[hr][hc] = grid[hr + 1][hc];
          ++hr;
        } else if (east) {
          grid[hr][hc] = grid[hr][hc + 1];
          ++hc;
        } else {
          end[hr] = hc;  // the hole sat on the rightmost cell of its row
          break;
        }
      }
    }
  }
  std::vector<std::vector<Letter>> out;
  for (std::size_t r = 0; r < nrows && end[r] > 0; ++r)
    out.emplace_back(grid[r].begin(), grid[r].begin() + end[r]);
  return Tableau{std::move(out)};  // validating constructor as a final check
}

// ---------------------------------------------------------------------------
// Greene invariants

std::uint64_t greene_invariant(const Word& w, std::size_t i) {
  if (i == 0) throw std::invalid_argument("greene_invariant: i must be >= 1");
  auto shape = p_tableau(w).shape();
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < std::min(i, shape.rows()); ++r)
    total += shape.parts()[r];
  return total;
}

std::uint64_t lwi_bruteforce(const Word& w, std::size_t i,
                             std::size_t max_len) {
  if (i == 0) throw std::invalid_argument("lwi_bruteforce: i must be >= 1");
  if (w.size() > max_len)
    throw resource_limit_error("lwi_bruteforce: word longer than limit " +
                               std::to_string(max_len));
  if (w.empty()) return 0;
  i = std::min(i, w.size());  // extra chains beyond |w| cannot help

  // Rank-compress letters so chain tails fit a packed state.
  std::vector<Letter> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto rank = [&](Letter a) {
    return static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), a) - sorted.begin() + 1);
  };

  // State: multiset of chain tails (0 = empty chain), kept sorted ascending
  // and packed 5 bits per chain.  Exhausts every assignment of positions to
  // chains; merging equal-tail states only drops dominated duplicates.
  auto encode = [&](std::vector<std::uint32_t>& tails) {
    std::sort(tails.begin(), tails.end());
    std::uint64_t code = 0;
    for (auto t : tails) code = (code << 5) | t;
    return code;
  };
  std::map<std::uint64_t, std::uint64_t> dp;  // state -> best picked count
  {
    std::vector<std::uint32_t> tails(i, 0);
    dp[encode(tails)] = 0;
  }
  for (Letter a : w) {
    std::uint32_t ra = rank(a);
    std::map<std::uint64_t, std::uint64_t> next(dp);  // skip-this-letter branch
    for (const auto& [code, cnt] : dp) {
      std::vector<std::uint32_t> tails(i);
      std::uint64_t c = code;
      for (std::size_t j = i; j-- > 0;) {
        tails[j] = static_cast<std::uint32_t>(c & 31);
        c >>= 5;
      }
      std::uint32_t last = UINT32_MAX;
      for (std::size_t j = 0; j < i; ++j) {
        if (tails[j] > ra || tails[j] == last) continue;  // chain tails weakly increase
        last = tails[j];
        auto extended = tails;
        extended[j] = ra;
        std::uint64_t code2 = encode(extended);
        auto [it, fresh] = next.try_emplace(code2, cnt + 1);
        if (!fresh && it->second < cnt + 1) it->second = cnt + 1;
      }
    }
    dp = std::move(next);
  }
  std::uint64_t best = 0;
  for (const auto& [code, cnt] : dp) best = std::max(best, cnt);
  return best;
}

std::uint64_t lwi_ending_at(const Word& w, Letter a) {
  std::vector<std::uint64_t> best(w.size(), 0);
  std::uint64_t answer = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    best[p] = 1;
    for (std::size_t q = 0; q < p; ++q)
      if (w[q] <= w[p]) best[p] = std::max(best[p], best[q] + 1);
    if (w[p] == a) answer = std::max(answer, best[p]);
  }
  return answer;
}

// ---------------------------------------------------------------------------
// Hook lengths and SSYT enumeration

BigInt hook_count(const Partition& shape) {
  const auto& parts = shape.parts();
  std::size_t cols = parts.empty() ? 0 : parts[0];
  std::vector<std::uint32_t> col_height(cols, 0);
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (std::uint32_t c = 0; c < parts[r]; ++c) col_height[c] = r + 1;
  BigInt denom = 1;
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (std::uint32_t c = 0; c < parts[r]; ++c) {
      std::uint64_t hook = (parts[r] - c - 1) + (col_height[c] - r - 1) + 1;
      denom *= hook;
    }
  return factorial(shape.cells()) / denom;
}

std::vector<Partition> partitions_of(std::uint64_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> current;
  // Descending lexicographic: larger first parts come first.
  auto rec = [&](auto&& self, std::uint64_t remaining,
                 std::uint32_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    std::uint32_t top =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(max_part, remaining));
    for (std::uint32_t p = top; p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n > 0xffffffffULL ? 0xffffffffU : static_cast<std::uint32_t>(n));
  return out;
}

void for_each_ssyt_of_shape(const Partition& shape, Letter lo, Letter hi,
                            const SsytVisitor& fn) {
  if (lo == 0) throw std::invalid_argument("entries must be positive");
  const auto& parts = shape.parts();
  if (parts.empty()) {
    static const std::vector<std::vector<Letter>> kEmpty;
    fn(kEmpty);
    return;
  }
  if (hi < lo || parts.size() > hi - lo + 1) return;  // column strictness
  std::vector<std::vector<Letter>> rows(parts.size());
  for (std::size_t r = 0; r < parts.size(); ++r) rows[r].assign(parts[r], 0);
  // Row-major fill; entries >= left neighbor, > upper neighbor, <= hi.
  auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      fn(rows);
      return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc == rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    Letter min = lo;
    if (c > 0) min = std::max(min, rows[r][c - 1]);
    if (r > 0) min = std::max(min, static_cast<Letter>(rows[r - 1][c] + 1));
    for (Letter v = min; v <= hi; ++v) {
      rows[r][c] = v;
      self(self, nr, nc);
    }
    rows[r][c] = 0;
  };
  rec(rec, 0, 0);
}

void for_each_ssyt(std::uint64_t cells, Letter max_entry,
                   const SsytVisitor& fn) {
  for (const auto& shape : partitions_of(cells))
    for_each_ssyt_of_shape(shape, 1, max_entry, fn);
}

std::vector<Tableau> enumerate_ssyt(std::uint64_t cells, Letter max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(cells, max_entry,
                [&](const std::vector<std::vector<Letter>>& rows) {
                  out.push_back(Tableau::from_rows_unchecked(rows));
                });
  return out;
}

BigInt ssyt_count(std::uint64_t cells, Letter max_entry) {
  // [q^cells] (1-q)^{-m} (1-q^2)^{-C(m,2)} by Littlewood's identity
  // sum_lambda s_lambda(x) = prod 1/(1-x_i) prod_{i<j} 1/(1-x_i x_j).
  std::int64_t m = max_entry;
  if (m == 0) return cells == 0 ? 1 : 0;
  BigInt pairs = binomial(m, 2);
  BigInt total = 0;
  for (std::uint64_t j = 0; 2 * j <= cells; ++j) {
    std::int64_t rest = static_cast<std::int64_t>(cells - 2 * j);
    // C(pairs + j - 1, j) with a possibly big top index
    BigInt top = 1;
    for (std::uint64_t t = 0; t < j; ++t) top *= pairs + static_cast<std::int64_t>(t);
    top /= factorial(j);
    total += top * binomial(m + rest - 1, rest);
  }
  return total;
}

}  // namespace plactic
