#include "cscf/engineering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "cscf/error.hpp"

namespace cscf::engineering
{
namespace
{

constexpr double kPi = std::numbers::pi;

// Welded-beam material and load constants.
constexpr double kLoad = 6000.0;        // lb
constexpr double kLength = 14.0;        // in
constexpr double kYoung = 30e6;         // psi
constexpr double kShear = 12e6;         // psi
constexpr double kShearMax = 13600.0;   // psi
constexpr double kBendMax = 30000.0;    // psi
constexpr double kDeflectMax = 0.25;    // in

void require(std::span<const double> z, std::size_t n, const char* name)
{
  if (z.size() != n) {
    std::ostringstream msg;
    msg << name << " expects " << n << " variables, got " << z.size();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

}  // namespace

DesignEvaluation<7> welded_beam(std::span<const double> z)
{
  require(z, 4, "welded_beam");
  const double h = z[0];
  const double l = z[1];
  const double t = z[2];
  const double b = z[3];

  const double tau_direct = kLoad / (std::sqrt(2.0) * h * l);
  const double moment = kLoad * (kLength + l / 2.0);
  const double half = (h + t) / 2.0;
  const double radius = std::sqrt(l * l / 4.0 + half * half);
  const double polar = 2.0 * std::sqrt(2.0) * h * l * (l * l / 12.0 + half * half);
  const double tau_torsion = moment * radius / polar;
  const double tau = std::sqrt(tau_direct * tau_direct +
                               2.0 * tau_direct * tau_torsion * l / (2.0 * radius) +
                               tau_torsion * tau_torsion);
  const double sigma = 6.0 * kLoad * kLength / (b * t * t);
  const double delta = 4.0 * kLoad * std::pow(kLength, 3) / (kYoung * t * t * t * b);
  const double buckling = 4.013 * kYoung * std::sqrt(t * t * std::pow(b, 6) / 36.0) /
                          (kLength * kLength) *
                          (1.0 - t / (2.0 * kLength) * std::sqrt(kYoung / (4.0 * kShear)));

  DesignEvaluation<7> out;
  out.cost = 1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l);
  out.g = {
      tau - kShearMax,
      sigma - kBendMax,
      h - b,
      0.10471 * h * h + 0.04811 * t * b * (14.0 + l) - 5.0,
      0.125 - h,
      delta - kDeflectMax,
      kLoad - buckling,
  };
  return out;
}

double snap_sixteenth(double v) noexcept
{
  return std::max(1.0, std::round(v / 0.0625)) * 0.0625;
}

DesignEvaluation<4> pressure_vessel(std::span<const double> z)
{
  require(z, 4, "pressure_vessel");
  const double ts = snap_sixteenth(z[0]);
  const double th = snap_sixteenth(z[1]);
  const double r = z[2];
  const double len = z[3];

  DesignEvaluation<4> out;
  out.cost = 0.6224 * ts * r * len + 1.7781 * th * r * r + 3.1611 * ts * ts * len +
             19.84 * ts * ts * r;
  out.g = {
      -ts + 0.0193 * r,
      -th + 0.0095 * r,
      -kPi * r * r * len - 4.0 / 3.0 * kPi * r * r * r + 1296000.0,
      len - 240.0,
  };
  return out;
}

DesignEvaluation<4> spring(std::span<const double> z)
{
  require(z, 3, "spring");
  const double dc = z[0];
  const double nc = z[1];
  const double d = z[2];
  const double d2 = d * d;
  const double d4 = d2 * d2;

  DesignEvaluation<4> out;
  out.cost = (nc + 2.0) * dc * d2;
  out.g = {
      1.0 - dc * dc * dc * nc / (71785.0 * d4),
      (4.0 * dc * dc - d * dc) / (12566.0 * (dc * d2 * d - d4)) + 1.0 / (5108.0 * d2) - 1.0,
      1.0 - 140.45 * d / (dc * dc * nc),
      (d + dc) / 1.5 - 1.0,
  };
  return out;
}

FitnessKey penalized_fitness(double cost, std::span<const double> g, const PenaltyParams& penalty)
{
  if (penalty.mode == PenaltyMode::StaticPenalty) {
    double sq = 0.0;
    for (double gi : g) {
      const double v = std::max(0.0, gi);
      sq += v * v;
    }
    return {0.0, cost + penalty.weight * sq};
  }
  return {total_violation(g), cost};
}

Reported reported_best(std::string_view problem)
{
  if (problem == "welded_beam") {
    return {1.704, {0.197, 8.035, 3.209, 2.210}};
  }
  if (problem == "pressure_vessel") {
    return {6123.489, {0.726329, 0.527452, 41.66390, 163.4489}};
  }
  if (problem == "spring") {
    // The table lists only cost for this design in a usable form.
    return {0.020342, {}};
  }
  throw Error(ErrorKind::ConfigError, "unknown engineering problem '" + std::string(problem) + "'");
}

namespace
{

template <std::size_t N, class Fn>
Problem wrap(std::string name, Bounds bounds, Fn fn)
{
  Problem p;
  p.name = name;
  p.label = name;
  p.bounds = std::move(bounds);
  p.fixed_dim = true;
  p.constraint_count = N;
  p.reference = reported_best(name).cost;
  p.published = p.reference;
  p.objective = [fn](std::span<const double> z, Rng*) { return fn(z).cost; };
  p.constraints = [fn](std::span<const double> z, std::span<double> g) {
    const auto ev = fn(z);
    std::copy(ev.g.begin(), ev.g.end(), g.begin());
  };
  return p;
}

}  // namespace

Problem make_welded_beam()
{
  return wrap<7>("welded_beam", Bounds{{0.1, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0}},
                 [](std::span<const double> z) { return welded_beam(z); });
}

Problem make_pressure_vessel()
{
  return wrap<4>("pressure_vessel",
                 Bounds{{0.0625, 0.0625, 10.0, 10.0}, {6.1875, 6.1875, 200.0, 200.0}},
                 [](std::span<const double> z) { return pressure_vessel(z); });
}

Problem make_spring()
{
  return wrap<4>("spring", Bounds{{0.25, 2.0, 0.05}, {1.3, 15.0, 2.0}},
                 [](std::span<const double> z) { return spring(z); });
}

std::optional<Problem> make_engineering(std::string_view name)
{
  if (name == "welded_beam") {
    return make_welded_beam();
  }
  if (name == "pressure_vessel") {
    return make_pressure_vessel();
  }
  if (name == "spring") {
    return make_spring();
  }
  return std::nullopt;
}

const std::vector<std::string_view>& engineering_names()
{
  static const std::vector<std::string_view> names = {"welded_beam", "pressure_vessel", "spring"};
  return names;
}

}  // namespace cscf::engineering
