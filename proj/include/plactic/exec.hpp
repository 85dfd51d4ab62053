#pragma once

#include <cstdint>

namespace plactic {

// Knobs shared by every enumeration-heavy operation.
//
// guard   hard ceiling on enumerated objects (tableaux, words, fillings).
//         Exceeding it raises resource_limit_error.
// workers 0 = one task slot per hardware thread.  Results are merged in
//         task order, so any worker count produces byte-identical reports.
struct Exec {
  std::uint64_t guard = 10'000'000;
  unsigned workers = 0;
};

unsigned resolve_workers(const Exec& exec);

}  // namespace plactic
