#pragma once

// Internal deterministic task runner.  Tasks are indexed; each writes only
// its own slot and the caller merges in index order, so worker count never
// changes a result byte.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "plactic/exec.hpp"

namespace plactic::detail {

template <typename Body>
void run_tasks(const Exec& exec, std::size_t count, Body&& body) {
  if (count == 0) return;
  unsigned workers = resolve_workers(exec);
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Shared enumeration budget.  Whether the limit trips depends only on the
// total workload, not on scheduling.
class GuardCounter {
 public:
  explicit GuardCounter(std::uint64_t limit) : limit_(limit) {}
  void bump(std::uint64_t amount = 1) {
    if (used_.fetch_add(amount, std::memory_order_relaxed) + amount > limit_)
      overflow();
  }

 private:
  [[noreturn]] void overflow() const;
  std::atomic<std::uint64_t> used_{0};
  std::uint64_t limit_;
};

}  // namespace plactic::detail
