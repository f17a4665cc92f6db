#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cscf/rng.hpp"

namespace cscf
{

using Position = std::vector<double>;

struct Bounds
{
  std::vector<double> lower;
  std::vector<double> upper;

  static Bounds uniform(std::size_t dim, double lo, double hi)
  {
    return {std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
  }

  [[nodiscard]] std::size_t dim() const noexcept { return lower.size(); }
  [[nodiscard]] double range(std::size_t k) const noexcept { return upper[k] - lower[k]; }
  [[nodiscard]] bool contains(std::span<const double> x) const noexcept;
  void clamp(std::span<double> x) const noexcept;
};

struct Evaluation
{
  double objective = 0.0;
  /// g_i(x); feasibility means every entry is <= 0. Empty when unconstrained.
  std::vector<double> constraints;
  bool out_of_bounds = false;
};

/// Sum of positive constraint parts.
double total_violation(std::span<const double> g) noexcept;

/// An objective with its box, optional inequality constraints and reference
/// optimum. Benchmarks and engineering designs share this type; the latter
/// simply carry a non-zero constraint count.
struct Problem
{
  using Objective = std::function<double(std::span<const double>, Rng*)>;
  using Constraints = std::function<void(std::span<const double>, std::span<double>)>;

  std::string name;
  std::string label;  // "fn1".."fn20" for benchmarks, name otherwise
  Bounds bounds;
  /// Best known objective value; used as the MAE reference.
  std::optional<double> reference;
  /// Optimum printed in the source tables, kept for side-by-side reporting.
  std::optional<double> published;
  /// Natural dimension ignores the requested one.
  bool fixed_dim = false;
  /// Consumes the injected noise stream.
  bool noisy = false;
  std::size_t constraint_count = 0;
  Objective objective;
  Constraints constraints;

  [[nodiscard]] std::size_t dim() const noexcept { return bounds.dim(); }

  /// Evaluates objective and constraints. Throws Error{DimensionMismatch} on a
  /// wrong-length input and Error{NonFiniteResult} when an in-bounds point
  /// yields a NaN anywhere or a non-finite objective.
  [[nodiscard]] Evaluation evaluate(std::span<const double> x, Rng* noise = nullptr) const;
};

enum class PenaltyMode
{
  StaticPenalty,
  FeasibilityRules,
};

struct PenaltyParams
{
  PenaltyMode mode = PenaltyMode::FeasibilityRules;
  double weight = 1e6;
};

/// Comparable fitness. Ordered lexicographically by (violation, value), which
/// is Deb's feasibility ordering when `violation` is the total constraint
/// violation and a plain scalar order when `violation` is always zero.
struct FitnessKey
{
  double violation = 0.0;
  double value = 0.0;

  [[nodiscard]] bool feasible() const noexcept { return violation == 0.0; }

  /// Value reported in convergence curves: the key value while feasible,
  /// +inf otherwise. Nonincreasing whenever the key is.
  [[nodiscard]] double score() const noexcept
  {
    return feasible() ? value : std::numeric_limits<double>::infinity();
  }

  friend bool operator<(const FitnessKey& a, const FitnessKey& b) noexcept
  {
    if (a.violation != b.violation) {
      return a.violation < b.violation;
    }
    return a.value < b.value;
  }
  friend bool operator==(const FitnessKey&, const FitnessKey&) = default;
};

}  // namespace cscf
