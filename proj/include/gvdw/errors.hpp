#pragma once

#include <stdexcept>
#include <string>

namespace gvdw {

// Bad or inconsistent input (grids, configs, parameter ranges). CLI exit code 1.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Catalog or key lookups.
class not_found_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A numerical routine ran out of budget. Carries the best estimate so callers
// can flag the point instead of losing it. CLI exit code 2.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_estimate,
                    double achieved_rel_error)
      : std::runtime_error(what),
        best_estimate(best_estimate),
        achieved_rel_error(achieved_rel_error) {}

  double best_estimate;
  double achieved_rel_error;
};

}  // namespace gvdw
