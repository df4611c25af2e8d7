#pragma once

#include <string>
#include <vector>

#include "masim/config.hpp"

namespace masim {

struct ValidationPoint {
  std::string paradigm;  // DNR or MA
  std::string metric;    // time or cost
  double n = 0;
  double simulated = 0;
  double analytical = 0;
  double abs_err = 0;
  double rel_err = 0;
};

struct ValidationReport {
  std::vector<ValidationPoint> points;
  double max_rel_err = 0;
  double tolerance = 0;
  bool pass = false;  // pass iff max_rel_err <= tolerance

  std::vector<ValidationPoint> failures() const;
  std::string summary() const;
};

// Grades simulated-vs-analytical pairs. Split out from validate() so tests
// can feed deliberately perturbed series through the same grading path.
ValidationReport grade_points(std::vector<ValidationPoint> points, double tolerance);

// Runs every sweep point of the experiment in the simulator and compares
// each measured total against the closed-form prediction. Only defined where
// the closed forms apply: paper mode, no faulty nodes; anything else is
// refused with a ConfigError.
ValidationReport validate(const ExperimentSpec& spec, double tolerance = 1e-9);

}  // namespace masim
