#include "plactic/exec.hpp"

#include <thread>

#include "plactic/errors.hpp"
#include "parallel.hpp"

namespace plactic {

unsigned resolve_workers(const Exec& exec) {
  if (exec.workers) return exec.workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace detail {

void GuardCounter::overflow() const {
  throw resource_limit_error(
      "enumeration exceeds the configured guard of " + std::to_string(limit_) +
      " objects; raise --guard to proceed");
}

}  // namespace detail

}  // namespace plactic
