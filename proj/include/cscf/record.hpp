#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cscf
{

/// Outcome of one optimizer run; the unit of statistical analysis.
///
/// `best_curve[t]` is the best-so-far score after t iterations (entry 0 is
/// the initial population). Scores are objective values (or statically
/// penalized values); under feasibility rules the score is +inf until a
/// feasible point has been found.
struct RunRecord
{
  std::string problem;
  std::size_t dim = 0;
  std::string algorithm;
  std::string variant;  // "none" for the non-hybrid algorithms
  std::string map;      // "none" when no chaotic map is used
  std::uint64_t seed = 0;
  std::size_t population = 0;
  std::size_t max_iter = 0;

  std::vector<double> best_position;
  double best_fitness = 0.0;
  double best_objective = 0.0;
  double best_violation = 0.0;
  std::vector<double> best_constraints;
  std::optional<double> reference;

  std::vector<double> best_curve;
  double wall_time = 0.0;  // seconds
  std::size_t evals = 0;

  /// Grouping label, e.g. "cscf-iv-circle" or "sca".
  [[nodiscard]] std::string algorithm_label() const
  {
    std::string label = algorithm;
    if (variant != "none") {
      label += "-" + variant;
    }
    if (map != "none") {
      label += "-" + map;
    }
    return label;
  }

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

}  // namespace cscf
