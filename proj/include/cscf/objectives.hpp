#pragma once

/// The twenty-function benchmark suite.
///
/// Rows whose printed formulas were garbled are implemented in their
/// canonical literature forms:
///   fn3  30 + sum floor(x)                  (literal; optimum 30 - 6D)
///   fn5  sum |x^5 - 3x^4 + 4x^3 + 2x^2 - 10x - 4|   (quintic)
///   fn8  sum floor(x + 0.5)^2                (step; printed optimum -3.214 is unreachable)
///   fn11 six-hump camel, 2-D
///   fn12 Goldstein-Price, 2-D
///   fn13 Shekel with the standard 10-point matrix, 4-D
///   fn15 Schwefel 2.26
///   fn16 max |x_k|                           (Schwefel 2.21)
///   fn17 Rosenbrock on [-30, 30]
///   fn18 Hartmann 6-D on [0, 1]
///   fn19, fn20 generalized penalized functions with u(x, a, k, m)
/// Printed optima that disagree with the formulas are kept as
/// `Problem::published` and never asserted.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cscf/problem.hpp"

namespace cscf::objectives
{

inline constexpr std::size_t kBenchmarkCount = 20;
inline constexpr std::size_t kDefaultDim = 20;

/// 1-based benchmark index.
class BenchmarkId
{
public:
  /// Throws Error{ConfigError} outside 1..20.
  explicit BenchmarkId(std::size_t index);
  [[nodiscard]] std::size_t index() const noexcept { return index_; }
  friend bool operator==(BenchmarkId, BenchmarkId) = default;

private:
  std::size_t index_;
};

/// Canonical short name ("ackley", "sphere", ...).
std::string_view name_of(BenchmarkId id) noexcept;

/// Accepts "fn1".."fn20" or a canonical name.
std::optional<BenchmarkId> parse_benchmark(std::string_view name) noexcept;

/// Builds the problem; `dim` is ignored for fixed-dimension functions.
Problem make_benchmark(BenchmarkId id, std::size_t dim = kDefaultDim);

/// All twenty problems in table order.
std::vector<Problem> suite(std::size_t dim = kDefaultDim);

/// Evaluates one benchmark at x (len(x) decides the dimension for
/// variable-dimension functions). Out-of-bounds input is evaluated and flagged.
Evaluation evaluate(BenchmarkId id, std::span<const double> x, Rng* noise = nullptr);

/// Standard penalty term of the penalized benchmarks.
double u_penalty(double x, double a, double k, double m) noexcept;

}  // namespace cscf::objectives
