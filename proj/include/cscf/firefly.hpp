#pragma once

/// Firefly movement kernels: standard attraction towards a brighter agent
/// and the improved rule with an extra pull towards a random third agent.
///
/// The kernels are pure. Randomness enters only through `eta_unit`, one
/// uniform [0, 1] draw per coordinate, which is shifted to [-1/2, 1/2] and
/// scaled by eta_scale * range_k / 10. Results are clamped to the box.

#include <cstddef>
#include <span>

#include "cscf/problem.hpp"

namespace cscf::firefly
{

struct FireflyParams
{
  double alpha0 = 1.0;  // attractiveness at distance 0
  double beta = 1.0;    // light absorption
  double j_step = 0.2;  // randomization step
  double k_step = 0.2;  // improved-term step
  double eta_scale = 1.0;

  /// Throws Error{ConfigError} when alpha0 <= 0 or a step/beta is negative.
  void validate() const;
};

struct Agent
{
  Position position;
  double fitness = 0.0;  // raw objective
  FitnessKey penalized;
  std::size_t trial = 0;
};

/// I0 * exp(-beta * d)
double light_intensity(double i0, double beta, double d) noexcept;

/// alpha0 * exp(-beta * d^2)
double attractiveness(double alpha0, double beta, double d) noexcept;

/// Euclidean distance. Throws Error{DimensionMismatch}.
double distance(std::span<const double> x, std::span<const double> y);

/// Zero-mean perturbation for coordinate k.
double eta(double unit_draw, const FireflyParams& params, const Bounds& bounds, std::size_t k) noexcept;

/// x + alpha0 e^{-beta d^2} (y - x) + J eta, clamped.
Position move_standard(std::span<const double> x, std::span<const double> y, const Bounds& bounds,
                       const FireflyParams& params, std::span<const double> eta_unit);

/// move_standard plus K (a - x), clamped. With K = 0 the result is
/// bit-identical to move_standard.
Position move_improved(std::span<const double> x, std::span<const double> y,
                       std::span<const double> a, const Bounds& bounds,
                       const FireflyParams& params, std::span<const double> eta_unit);

/// Index-checked form: throws Error{SameAgent} when a_index equals x_index or
/// y_index. y_index may equal x_index (no brighter partner exists).
Position move_improved(std::span<const Agent> population, std::size_t x_index, std::size_t y_index,
                       std::size_t a_index, const Bounds& bounds, const FireflyParams& params,
                       std::span<const double> eta_unit);

}  // namespace cscf::firefly
