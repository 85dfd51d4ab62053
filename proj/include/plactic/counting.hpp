#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plactic/bigint.hpp"
#include "plactic/exec.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic {

// Finite poset on labels 1..n with an explicit reachability matrix.
class LabeledPoset {
 public:
  explicit LabeledPoset(std::size_t n);

  std::size_t size() const { return n_; }
  bool less_equal(std::size_t a, std::size_t b) const;  // 1-based, reflexive

  // Declare a < b and close transitively; rejects cycles.
  void add_less(std::size_t a, std::size_t b);

 private:
  std::size_t n_;
  std::vector<std::vector<bool>> leq_;
};

// Cell poset of a partition.  Cells of row i are labeled consecutively right
// to left (so the label order within a row runs against the column order),
// rows top to bottom, and k <= k' iff k's cell lies weakly southeast of
// k''s.  A column (1^k) therefore yields the chain k < k-1 < ... < 1.
LabeledPoset poset_from_partition(const Partition& shape);

// All linear extensions as words of labels, generated by picking the
// smallest available minimal label first; lexicographic order, each exactly
// once.  Guarded: posets above max_size are refused.
std::vector<Word> linear_extensions(const LabeledPoset& poset,
                                    std::size_t max_size = 12);
void for_each_linear_extension(const LabeledPoset& poset,
                               const std::function<void(const Word&)>& fn,
                               std::size_t max_size = 12);

// Positions i with pi_i > pi_{i+1}.
std::size_t descent_count(const Word& pi);

// g_m^lambda: the number of SSYT of shape lambda'' (lambda minus its first
// row) with entries in [m-1], computed as a sum of binomials over linear
// extensions of the cell poset of lambda''.  Requires m >= 2.
BigInt g_poly(const Partition& shape, std::uint64_t m);

// c_{n,m}(1) through the symmetric-function route: sum over lambda |- n of
// hook_count(lambda) * g_m^lambda.  Independent of the enumeration engines.
BigInt c_via_schur_formula(std::uint64_t n, std::uint64_t m,
                           const Exec& exec = {});

// c_{n,m}(u): words of length n over [m] centralizing u.  Within the guard
// this is the centralizer_slice total; past it, and only for u = 1, a
// structured engine enumerates the classes by their all-ones first row.
BigInt count_c(std::uint64_t n, Letter m, const Word& u, const Exec& exec = {});

// Refinement by the number of distinct letters; index k = 1..n.
BigInt count_c_refined(std::uint64_t n, Letter m, std::size_t k, const Word& u,
                       const Exec& exec = {});
std::vector<BigInt> count_c_refined_all(std::uint64_t n, Letter m,
                                        const Word& u, const Exec& exec = {});

// b_{n,k}: k-packed words of length n in C(1), i.e. c_{n,k,k}(1).
BigInt b_count(std::uint64_t n, std::size_t k, const Exec& exec = {});

// Coefficients over a binomial basis: value(m) = sum_i coeffs[i] *
// C(m - basis_shift, i).  For basis_shift = 1 this is the C(m-1, k-1) basis
// with coeffs[i] = b_{i+1}.
struct CoeffVector {
  int basis_shift = 0;
  std::vector<BigInt> coeffs;
};

// Finite-difference extraction from values[j] = value(shift + j).  The first
// degree_bound+1 points (default: all) determine the coefficients; every
// remaining supplied point is then validated exactly, and any residual is an
// error rather than a warning.
CoeffVector expand_in_binomial_basis(const std::vector<BigInt>& values,
                                     int shift,
                                     std::optional<std::size_t> degree_bound = {});
BigInt eval_binomial_basis(const CoeffVector& cv, std::int64_t m);

struct CoefficientReport {
  std::uint64_t n = 0;
  std::vector<BigInt> values;  // c_{n,m}(1) for m = 0..n+2
  CoeffVector a;               // basis C(m, k),   k = 0..n-1
  CoeffVector b;               // basis C(m-1, k-1), k = 1..n
  bool a0_zero = false;
  bool a1_one = false;
  bool a2_formula = false;  // a_2 == C(n, floor(n/2)) - 2
  bool a_top_one = false;   // leading coefficient 1/(n-1)! in the monomial basis
  bool a_positive = false;  // a_k >= 1 for 1 <= k <= n-1
  bool b1_one = false;
  bool b2_formula = false;  // b_2 == C(n, floor(n/2)) - 1
  bool bn_one = false;
  bool b_positive = false;
  bool b_matches_refined = false;     // b_k == b_count(n, k) for every k
  bool b_valid_below_degree = false;  // expansion already exact for m < n
  bool log_concave = false;           // b_k^2 >= b_{k-1} b_{k+1}
  bool all_pass() const;
};
CoefficientReport coefficient_report(std::uint64_t n, const Exec& exec = {});

}  // namespace plactic
