#pragma once

/// Constrained design problems and penalty-based constraint handling.
///
/// Conventions: g_i(z) <= 0 means satisfied. Formulas follow the standard
/// literature statements of each problem; where the source typesetting
/// differed, the repair is noted at the function.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cscf/problem.hpp"

namespace cscf::engineering
{

template <std::size_t N>
struct DesignEvaluation
{
  double cost = 0.0;
  std::array<double, N> g{};

  [[nodiscard]] bool feasible() const noexcept
  {
    for (double gi : g) {
      if (gi > 0.0) {
        return false;
      }
    }
    return true;
  }
};

/// Welded beam, z = (h, l, t, b). Cost 1.10471 h^2 l + 0.04811 t b (14 + l).
/// Seven constraints: shear stress <= 13600 psi, bending stress <= 30000 psi,
/// h <= b, the 5.0 cost-side limit (0.10471 h^2 coefficient), h >= 0.125,
/// end deflection <= 0.25 in, buckling load >= 6000 lb. The radius term uses
/// (h + t) / 2.
DesignEvaluation<7> welded_beam(std::span<const double> z);

/// Pressure vessel, z = (Ts, Th, R, L). Ts and Th are snapped to multiples
/// of 0.0625 first. g3 uses the hemispherical-head volume (4/3) pi R^3 and
/// g4 = L - 240.
DesignEvaluation<4> pressure_vessel(std::span<const double> z);

/// Tension/compression spring, z = (Dc, Nc, D): mean coil diameter, active
/// coils, wire diameter. Cost (Nc + 2) Dc D^2. The surge, shear and
/// frequency constraints use D^4, Dc D^3 - D^4 and D / (Dc^2 Nc).
DesignEvaluation<4> spring(std::span<const double> z);

/// Nearest positive multiple of 0.0625. Idempotent.
double snap_sixteenth(double v) noexcept;

/// Static mode: {0, cost + weight * sum max(0, g)^2}.
/// Feasibility rules: {sum max(0, g), cost}, compared lexicographically.
FitnessKey penalized_fitness(double cost, std::span<const double> g, const PenaltyParams& penalty);

struct Reported
{
  double cost;
  std::vector<double> z;
};

/// Best solution listed for the hybrid in the source tables.
Reported reported_best(std::string_view problem);

Problem make_welded_beam();
Problem make_pressure_vessel();
Problem make_spring();

/// "welded_beam", "pressure_vessel" or "spring".
std::optional<Problem> make_engineering(std::string_view name);
const std::vector<std::string_view>& engineering_names();

}  // namespace cscf::engineering
