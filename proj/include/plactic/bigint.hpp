#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace plactic {

// Exact integer arithmetic for hook products, slice totals and basis
// coefficients.  Everything user-visible stays in Z; no floats anywhere.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);

// Combinatorial convention: zero unless 0 <= k <= n.  Negative upper index
// never produces a signed binomial here; callers rely on the cutoff when
// evaluating basis expansions below their support.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace plactic
