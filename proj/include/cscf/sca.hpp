#pragma once

#include <span>

#include "cscf/problem.hpp"

namespace cscf::sca
{

struct ScaParams
{
  double a_const = 2.0;

  void validate() const;
};

/// Linearly decreasing amplitude A - iter * A / max_iter.
double r1_schedule(std::size_t iter, std::size_t max_iter, double a_const) noexcept;

/// One coordinate of the sine/cosine update; the sine branch is taken when r4 < 0.5.
double sca_component(double x, double dest, double r1, double r2, double r3, double r4) noexcept;

/// Per-coordinate update with shared r1 and per-coordinate r2, r3, r4; clamped.
/// Throws Error{DimensionMismatch}.
Position sca_step(std::span<const double> x, std::span<const double> dest, double r1,
                  std::span<const double> r2, std::span<const double> r3,
                  std::span<const double> r4, const Bounds& bounds);

/// Same draws for every coordinate.
Position sca_step(std::span<const double> x, std::span<const double> dest, double r1, double r2,
                  double r3, double r4, const Bounds& bounds);

}  // namespace cscf::sca
