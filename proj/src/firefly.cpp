#include "cscf/firefly.hpp"

#include <cmath>
#include <sstream>

#include "cscf/error.hpp"

namespace cscf::firefly
{
namespace
{

void require_dims(std::size_t expected, std::size_t got, const char* what)
{
  if (expected != got) {
    std::ostringstream msg;
    msg << what << " has " << got << " coordinates, expected " << expected;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

// Unclamped standard firefly step.
Position attraction_step(std::span<const double> x, std::span<const double> y, const Bounds& bounds,
                         const FireflyParams& params, std::span<const double> eta_unit)
{
  require_dims(x.size(), y.size(), "partner");
  require_dims(x.size(), bounds.dim(), "bounds");
  require_dims(x.size(), eta_unit.size(), "eta draws");
  const double pull = attractiveness(params.alpha0, params.beta, distance(x, y));
  Position out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    out[k] = x[k] + pull * (y[k] - x[k]) + params.j_step * eta(eta_unit[k], params, bounds, k);
  }
  return out;
}

}  // namespace

void FireflyParams::validate() const
{
  if (!(alpha0 > 0.0) || !(beta >= 0.0) || !(j_step >= 0.0) || !(k_step >= 0.0) ||
      !(eta_scale >= 0.0)) {
    throw Error(ErrorKind::ConfigError,
                "firefly parameters need alpha0 > 0 and non-negative beta, j_step, k_step, "
                "eta_scale");
  }
}

double light_intensity(double i0, double beta, double d) noexcept
{
  return i0 * std::exp(-beta * d);
}

double attractiveness(double alpha0, double beta, double d) noexcept
{
  return alpha0 * std::exp(-beta * d * d);
}

double distance(std::span<const double> x, std::span<const double> y)
{
  require_dims(x.size(), y.size(), "second point");
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double eta(double unit_draw, const FireflyParams& params, const Bounds& bounds, std::size_t k) noexcept
{
  return (unit_draw - 0.5) * params.eta_scale * bounds.range(k) / 10.0;
}

Position move_standard(std::span<const double> x, std::span<const double> y, const Bounds& bounds,
                       const FireflyParams& params, std::span<const double> eta_unit)
{
  Position out = attraction_step(x, y, bounds, params, eta_unit);
  bounds.clamp(out);
  return out;
}

Position move_improved(std::span<const double> x, std::span<const double> y,
                       std::span<const double> a, const Bounds& bounds,
                       const FireflyParams& params, std::span<const double> eta_unit)
{
  require_dims(x.size(), a.size(), "random partner");
  Position out = attraction_step(x, y, bounds, params, eta_unit);
  if (params.k_step != 0.0) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      out[k] += params.k_step * (a[k] - x[k]);
    }
  }
  bounds.clamp(out);
  return out;
}

Position move_improved(std::span<const Agent> population, std::size_t x_index, std::size_t y_index,
                       std::size_t a_index, const Bounds& bounds, const FireflyParams& params,
                       std::span<const double> eta_unit)
{
  if (a_index == x_index || a_index == y_index) {
    std::ostringstream msg;
    msg << "random partner " << a_index << " coincides with agent " << x_index << " or "
        << y_index;
    throw Error(ErrorKind::SameAgent, msg.str());
  }
  return move_improved(population[x_index].position, population[y_index].position,
                       population[a_index].position, bounds, params, eta_unit);
}

}  // namespace cscf::firefly
