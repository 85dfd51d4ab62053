#include "plactic/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "plactic/errors.hpp"
#include "plactic/knuth.hpp"
#include "parallel.hpp"

namespace plactic {

// ---------------------------------------------------------------------------
// Posets and linear extensions

LabeledPoset::LabeledPoset(std::size_t n)
    : n_(n), leq_(n, std::vector<bool>(n, false)) {
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
}

bool LabeledPoset::less_equal(std::size_t a, std::size_t b) const {
  if (a == 0 || b == 0 || a > n_ || b > n_)
    throw std::out_of_range("poset labels are 1-based");
  return leq_[a - 1][b - 1];
}

void LabeledPoset::add_less(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0 || a > n_ || b > n_)
    throw std::out_of_range("poset labels are 1-based");
  if (a == b || leq_[b - 1][a - 1])
    throw std::invalid_argument("relation would create a cycle");
  // close transitively: everything below a sits below everything above b
  for (std::size_t x = 0; x < n_; ++x)
    if (leq_[x][a - 1])
      for (std::size_t y = 0; y < n_; ++y)
        if (leq_[b - 1][y]) leq_[x][y] = true;
}

LabeledPoset poset_from_partition(const Partition& shape) {
  // Row i is labeled right to left, rows top to bottom; k <= k' iff k's cell
  // lies weakly southeast of k''s.  With this orientation a column (1^k)
  // gives the chain k < ... < 1 and a row gives 1 < ... < n.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> coords;  // (row, col)
  const auto& parts = shape.parts();
  for (std::uint32_t r = 0; r < parts.size(); ++r)
    for (std::uint32_t t = 0; t < parts[r]; ++t)
      coords.emplace_back(r, parts[r] - 1 - t);
  LabeledPoset poset(coords.size());
  for (std::size_t k = 1; k <= coords.size(); ++k)
    for (std::size_t k2 = 1; k2 <= coords.size(); ++k2)
      if (k != k2 && coords[k - 1].first >= coords[k2 - 1].first &&
          coords[k - 1].second >= coords[k2 - 1].second &&
          !poset.less_equal(k, k2))
        poset.add_less(k, k2);
  return poset;
}

void for_each_linear_extension(const LabeledPoset& poset,
                               const std::function<void(const Word&)>& fn,
                               std::size_t max_size) {
  std::size_t n = poset.size();
  if (n > max_size)
    throw resource_limit_error("linear_extensions: poset larger than limit " +
                               std::to_string(max_size));
  if (n == 0) {
    fn(Word{});
    return;
  }
  // pred_mask[v]: labels strictly below v; v is available once they are used.
  std::vector<std::uint64_t> pred_mask(n, 0);
  for (std::size_t v = 1; v <= n; ++v)
    for (std::size_t u = 1; u <= n; ++u)
      if (u != v && poset.less_equal(u, v)) pred_mask[v - 1] |= 1ULL << (u - 1);
  std::vector<Letter> prefix;
  prefix.reserve(n);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      fn(Word{prefix});
      return;
    }
    for (std::size_t v = 1; v <= n; ++v) {
      std::uint64_t bit = 1ULL << (v - 1);
      if ((used & bit) || (pred_mask[v - 1] & ~used)) continue;
      used |= bit;
      prefix.push_back(static_cast<Letter>(v));
      self(self);
      prefix.pop_back();
      used &= ~bit;
    }
  };
  rec(rec);
}

std::vector<Word> linear_extensions(const LabeledPoset& poset,
                                    std::size_t max_size) {
  std::vector<Word> out;
  for_each_linear_extension(
      poset, [&](const Word& pi) { out.push_back(pi); }, max_size);
  return out;
}

std::size_t descent_count(const Word& pi) {
  if (!is_permutation(pi))
    throw std::invalid_argument("descent_count: not a permutation");
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (pi[i] > pi[i + 1]) ++d;
  return d;
}

// ---------------------------------------------------------------------------
// The symmetric-function route

namespace {

Partition drop_first_row(const Partition& shape) {
  const auto& parts = shape.parts();
  if (parts.empty()) return {};
  return Partition{
      std::vector<std::uint32_t>(parts.begin() + 1, parts.end())};
}

}  // namespace

BigInt g_poly(const Partition& shape, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("g_poly: requires m >= 2");
  Partition tail = drop_first_row(shape);
  std::int64_t cells = static_cast<std::int64_t>(tail.cells());
  BigInt total = 0;
  for_each_linear_extension(
      poset_from_partition(tail),
      [&](const Word& pi) {
        std::int64_t des = static_cast<std::int64_t>(descent_count(pi));
        total += binomial(static_cast<std::int64_t>(m) + cells - des - 2, cells);
      },
      16);  // extension counts explode factorially past this
  return total;
}

BigInt c_via_schur_formula(std::uint64_t n, std::uint64_t m, const Exec& exec) {
  if (n == 0) return 1;
  if (m < 2)
    throw std::invalid_argument("c_via_schur_formula: requires m >= 2");
  auto shapes = partitions_of(n);
  std::vector<BigInt> terms(shapes.size());
  detail::run_tasks(exec, shapes.size(), [&](std::size_t i) {
    terms[i] = hook_count(shapes[i]) * g_poly(shapes[i], m);
  });
  BigInt total = 0;
  for (const auto& t : terms) total += t;
  return total;
}

// ---------------------------------------------------------------------------
// Slice-based counting with a structured fallback for u = 1

namespace {

const Word& word_one() {
  static const Word one{{1}};
  return one;
}

// Distinct letters in a tableau filling; rows are short, so linear scans win
// over a set (and letters need not fit in a 64-bit mask).
std::size_t distinct_letters(const std::vector<std::vector<Letter>>& rows) {
  std::vector<Letter> seen;
  for (const auto& row : rows)
    for (Letter a : row)
      if (std::find(seen.begin(), seen.end(), a) == seen.end())
        seen.push_back(a);
  return seen.size();
}

// Classes of C(1) are exactly the tableaux whose first row is all ones, so a
// slice with base 1 reduces to filling lambda'' (the shape below the first
// row) with entries from {2..m}.  refined[d] collects weights by the number
// d+1 of distinct letters in the class.
struct COneTally {
  BigInt total = 0;
  std::vector<BigInt> refined;  // index: distinct letters - 1
};

COneTally c_one_structured(std::uint64_t n, Letter m, const Exec& exec) {
  COneTally tally;
  tally.refined.assign(m ? m : 1, 0);
  if (n == 0) {
    tally.total = 1;
    return tally;
  }
  if (m == 0) return tally;
  auto shapes = partitions_of(n);
  detail::GuardCounter guard(exec.guard);
  std::vector<COneTally> local(shapes.size());
  detail::run_tasks(exec, shapes.size(), [&](std::size_t si) {
    const Partition& shape = shapes[si];
    if (shape.rows() > m) return;
    auto& bucket = local[si];
    bucket.refined.assign(m, 0);
    BigInt weight = hook_count(shape);
    Partition tail = drop_first_row(shape);
    if (tail.cells() == 0) {
      guard.bump();
      bucket.total = weight;        // the all-ones single row
      bucket.refined[0] = weight;
      return;
    }
    for_each_ssyt_of_shape(
        tail, 2, m, [&](const std::vector<std::vector<Letter>>& rows) {
          guard.bump();
          // + 1 for the letter 1 filling the first row
          std::size_t distinct = distinct_letters(rows) + 1;
          bucket.total += weight;
          bucket.refined[distinct - 1] += weight;
        });
  });
  for (const auto& bucket : local) {
    tally.total += bucket.total;
    for (std::size_t d = 0; d < bucket.refined.size(); ++d)
      tally.refined[d] += bucket.refined[d];
  }
  return tally;
}

bool within_class_guard(std::uint64_t n, Letter m, const Exec& exec) {
  return ssyt_count(n, m) <= exec.guard;
}

}  // namespace

BigInt count_c(std::uint64_t n, Letter m, const Word& u, const Exec& exec) {
  if (m == 0) return n == 0 ? 1 : 0;
  if (within_class_guard(n, m, exec)) return centralizer_slice(u, n, m, exec).total;
  if (u == word_one()) return c_one_structured(n, m, exec).total;
  throw resource_limit_error(
      "count_c: workload exceeds the guard and no structured engine applies");
}

std::vector<BigInt> count_c_refined_all(std::uint64_t n, Letter m,
                                        const Word& u, const Exec& exec) {
  std::size_t buckets = std::min<std::uint64_t>(m, n);
  if (n == 0 || m == 0) return std::vector<BigInt>(buckets, 0);
  std::vector<BigInt> refined(buckets, 0);
  if (within_class_guard(n, m, exec)) {
    auto slice = centralizer_slice(u, n, m, exec);
    for (const auto& wc : slice.classes)
      refined[distinct_letters(wc.tableau.rows()) - 1] += wc.weight;
    return refined;
  }
  if (u == word_one()) {
    auto tally = c_one_structured(n, m, exec);
    for (std::size_t d = 0; d < buckets && d < tally.refined.size(); ++d)
      refined[d] = tally.refined[d];
    return refined;
  }
  throw resource_limit_error(
      "count_c_refined: workload exceeds the guard and no structured engine "
      "applies");
}

BigInt count_c_refined(std::uint64_t n, Letter m, std::size_t k, const Word& u,
                       const Exec& exec) {
  if (k == 0) throw std::invalid_argument("count_c_refined: k must be >= 1");
  if (n == 0 || m == 0 || k > std::min<std::uint64_t>(m, n)) return 0;
  return count_c_refined_all(n, m, u, exec)[k - 1];
}

BigInt b_count(std::uint64_t n, std::size_t k, const Exec& exec) {
  // k-packed members of C(1) are exactly those with k distinct letters, all
  // of them at most k.
  if (k == 0 || k > n) return 0;
  return count_c_refined(n, static_cast<Letter>(k), k, word_one(), exec);
}

// ---------------------------------------------------------------------------
// Binomial-basis coefficients

CoeffVector expand_in_binomial_basis(const std::vector<BigInt>& values,
                                     int shift,
                                     std::optional<std::size_t> degree_bound) {
  if (values.empty())
    throw std::invalid_argument("expand_in_binomial_basis: no values");
  std::size_t degree = degree_bound.value_or(values.size() - 1);
  if (degree + 1 > values.size())
    throw std::invalid_argument(
        "expand_in_binomial_basis: degree bound needs more values");
  // Newton forward differences: coeffs[k] = Delta^k values[0].
  CoeffVector cv;
  cv.basis_shift = shift;
  std::vector<BigInt> diff(values.begin(), values.begin() + degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    cv.coeffs.push_back(diff[0]);
    for (std::size_t i = 0; i + k + 1 <= degree; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // Exact residual check on every supplied point, including the ones beyond
  // the interpolation window.
  for (std::size_t j = 0; j < values.size(); ++j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < cv.coeffs.size(); ++k)
      acc += cv.coeffs[k] * binomial(static_cast<std::int64_t>(j),
                                     static_cast<std::int64_t>(k));
    if (acc != values[j])
      throw std::invalid_argument(
          "expand_in_binomial_basis: values exceed the declared degree at "
          "offset " +
          std::to_string(j));
  }
  return cv;
}

BigInt eval_binomial_basis(const CoeffVector& cv, std::int64_t m) {
  BigInt acc = 0;
  for (std::size_t k = 0; k < cv.coeffs.size(); ++k)
    acc += cv.coeffs[k] *
           binomial(m - cv.basis_shift, static_cast<std::int64_t>(k));
  return acc;
}

bool CoefficientReport::all_pass() const {
  return a0_zero && a1_one && a2_formula && a_top_one && a_positive &&
         b1_one && b2_formula && bn_one && b_positive && b_matches_refined &&
         b_valid_below_degree && log_concave;
}

CoefficientReport coefficient_report(std::uint64_t n, const Exec& exec) {
  if (n < 2)
    throw std::invalid_argument("coefficient_report: requires n >= 2");
  CoefficientReport rep;
  rep.n = n;
  for (std::uint64_t m = 0; m <= n + 2; ++m)
    rep.values.push_back(count_c(n, static_cast<Letter>(m), word_one(), exec));

  // a-basis: degree n-1 fixed by m = 0..n-1, validated at m = n..n+2.
  rep.a = expand_in_binomial_basis(rep.values, 0, n - 1);
  // b-basis: same degree in j = m-1, fixed by m = 1..n, validated above.
  std::vector<BigInt> from_one(rep.values.begin() + 1, rep.values.end());
  rep.b = expand_in_binomial_basis(from_one, 1, n - 1);

  BigInt central = binomial(static_cast<std::int64_t>(n),
                            static_cast<std::int64_t>(n / 2));
  rep.a0_zero = rep.a.coeffs[0] == 0;
  rep.a1_one = rep.a.coeffs[1] == 1;
  // a_2 vanishes past the degree when n = 2, matching binom(2,1) - 2 = 0
  BigInt a2 = rep.a.coeffs.size() > 2 ? rep.a.coeffs[2] : BigInt(0);
  rep.a2_formula = a2 == central - 2;
  rep.a_top_one = rep.a.coeffs[n - 1] == 1;
  rep.a_positive = true;
  for (std::size_t k = 1; k <= n - 1; ++k)
    rep.a_positive = rep.a_positive && rep.a.coeffs[k] >= 1;

  rep.b1_one = rep.b.coeffs[0] == 1;
  rep.b2_formula = rep.b.coeffs[1] == central - 1;
  rep.bn_one = rep.b.coeffs[n - 1] == 1;
  rep.b_positive = true;
  for (std::size_t k = 0; k < n; ++k)
    rep.b_positive = rep.b_positive && rep.b.coeffs[k] >= 1;

  rep.b_matches_refined = true;
  for (std::size_t k = 1; k <= n; ++k)
    rep.b_matches_refined =
        rep.b_matches_refined && rep.b.coeffs[k - 1] == b_count(n, k, exec);

  // The b-expansion is stated for m >= n; here it already reproduced every
  // supplied point m >= 1 (the expansion above would have thrown otherwise),
  // and the missing m = 0 evaluates to 0 = c_{n,0}(1) under the binomial
  // cutoff.  That settles validity below the degree as well.
  rep.b_valid_below_degree = eval_binomial_basis(rep.b, 0) == rep.values[0];

  rep.log_concave = true;
  for (std::size_t k = 2; k + 1 <= n; ++k)
    rep.log_concave = rep.log_concave &&
                      rep.b.coeffs[k - 1] * rep.b.coeffs[k - 1] >=
                          rep.b.coeffs[k - 2] * rep.b.coeffs[k];
  return rep;
}

}  // namespace plactic
