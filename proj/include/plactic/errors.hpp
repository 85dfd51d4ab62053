#pragma once

#include <stdexcept>
#include <string>

namespace plactic {

// An enumeration would exceed the configured object budget.  Raised before
// work starts whenever the workload can be sized up front; never a silent
// truncation.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The query falls outside the hypotheses of the requested characterization
// but belongs to a different one (e.g. a one-letter base word handed to the
// two-letter test).  `route` names where the caller should go instead.
struct routed_error : std::invalid_argument {
  routed_error(std::string route_name, const std::string& what)
      : std::invalid_argument(what), route(std::move(route_name)) {}
  std::string route;
};

}  // namespace plactic
