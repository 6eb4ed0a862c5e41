#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace sedcore {

/// Raised on any rejected input (bad geometry, malformed CSV row, infeasible
/// config). The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when select_optimal is handed a table with no feasible row.
class no_solution_error : public validation_error {
 public:
  explicit no_solution_error(const std::string& what) : validation_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw validation_error(what);
}

inline void require_finite(double value, const std::string& name) {
  if (!std::isfinite(value)) throw validation_error(name + " must be finite");
}

}  // namespace sedcore
