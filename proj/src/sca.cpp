#include "cscf/sca.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "cscf/error.hpp"

namespace cscf::sca
{

void ScaParams::validate() const
{
  if (!(a_const > 0.0)) {
    throw Error(ErrorKind::ConfigError, "a_const must be positive");
  }
}

double r1_schedule(std::size_t iter, std::size_t max_iter, double a_const) noexcept
{
  if (iter >= max_iter) {
    return 0.0;
  }
  return a_const - static_cast<double>(iter) * (a_const / static_cast<double>(max_iter));
}

double sca_component(double x, double dest, double r1, double r2, double r3, double r4) noexcept
{
  const double gap = std::abs(r3 * dest - x);
  return r4 < 0.5 ? x + r1 * std::sin(r2) * gap : x + r1 * std::cos(r2) * gap;
}

Position sca_step(std::span<const double> x, std::span<const double> dest, double r1,
                  std::span<const double> r2, std::span<const double> r3,
                  std::span<const double> r4, const Bounds& bounds)
{
  const std::size_t n = x.size();
  if (dest.size() != n || r2.size() != n || r3.size() != n || r4.size() != n ||
      bounds.dim() != n) {
    std::ostringstream msg;
    msg << "sca_step inputs disagree on dimension (position has " << n << ")";
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  Position out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = sca_component(x[k], dest[k], r1, r2[k], r3[k], r4[k]);
  }
  bounds.clamp(out);
  return out;
}

Position sca_step(std::span<const double> x, std::span<const double> dest, double r1, double r2,
                  double r3, double r4, const Bounds& bounds)
{
  const std::vector<double> v2(x.size(), r2);
  const std::vector<double> v3(x.size(), r3);
  const std::vector<double> v4(x.size(), r4);
  return sca_step(x, dest, r1, v2, v3, v4, bounds);
}

}  // namespace cscf::sca
