#include "cscf/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cscf/error.hpp"

namespace cscf
{

bool Bounds::contains(std::span<const double> x) const noexcept
{
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] >= lower[k] && x[k] <= upper[k])) {
      return false;
    }
  }
  return true;
}

void Bounds::clamp(std::span<double> x) const noexcept
{
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k] = std::clamp(x[k], lower[k], upper[k]);
  }
}

double total_violation(std::span<const double> g) noexcept
{
  double sum = 0.0;
  for (double gi : g) {
    sum += std::max(0.0, gi);
  }
  return sum;
}

Evaluation Problem::evaluate(std::span<const double> x, Rng* noise) const
{
  if (x.size() != dim()) {
    std::ostringstream msg;
    msg << name << " expects " << dim() << " coordinates, got " << x.size();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  Evaluation out;
  out.out_of_bounds = !bounds.contains(x);

  out.objective = objective(x, noise);
  if (constraint_count > 0) {
    out.constraints.assign(constraint_count, 0.0);
    constraints(x, out.constraints);
  }

  if (!out.out_of_bounds) {
    const bool bad_constraint =
        std::any_of(out.constraints.begin(), out.constraints.end(),
                    [](double g) { return std::isnan(g); });
    if (!std::isfinite(out.objective) || bad_constraint) {
      std::ostringstream msg;
      msg << name << " produced a non-finite result at an in-bounds point";
      throw Error(ErrorKind::NonFiniteResult, msg.str());
    }
  }
  return out;
}

}  // namespace cscf
