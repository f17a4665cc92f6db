#include "cscf/chaos.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cscf/error.hpp"

namespace cscf::chaos
{
namespace
{

template <class... Ts>
struct Overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::string_view, kMapCount> kNames = {
    "logistic", "tent",      "sinusoidal", "gauss",         "circle", "sinus",
    "iterative", "chebyshev", "henon",     "intermittency", "singer", "sine",
};

MapParams default_params(MapKind kind)
{
  switch (kind) {
    case MapKind::Logistic: return LogisticParams{};
    case MapKind::Tent: return TentParams{};
    case MapKind::Sinusoidal: return SinusoidalParams{};
    case MapKind::Gauss: return GaussParams{};
    case MapKind::Circle: return CircleParams{};
    case MapKind::Sinus: return SinusParams{};
    case MapKind::Iterative: return IterativeParams{};
    case MapKind::Chebyshev: return ChebyshevParams{};
    case MapKind::Henon: return HenonParams{};
    case MapKind::Intermittency: return IntermittencyParams{};
    case MapKind::Singer: return SingerParams{};
    case MapKind::Sine: return SineParams{};
  }
  return LogisticParams{};
}

// Seeds that are fixed points (or land on one after a single step).
std::vector<double> fixed_point_seeds(const MapSpec& spec)
{
  return std::visit(
      Overloaded{
          [](const LogisticParams& p) {
            std::vector<double> v{0.0, 1.0};
            if (p.a > 1.0) {
              v.push_back(1.0 - 1.0 / p.a);
            }
            return v;
          },
          [](const TentParams& p) { return std::vector<double>{0.0, p.slope / (1.0 + p.slope)}; },
          [](const SinusoidalParams&) { return std::vector<double>{0.0}; },
          [](const GaussParams&) { return std::vector<double>{0.0}; },
          [](const CircleParams&) { return std::vector<double>{}; },
          [](const SinusParams&) { return std::vector<double>{0.0}; },
          [](const IterativeParams&) { return std::vector<double>{}; },
          [](const ChebyshevParams&) { return std::vector<double>{1.0, -1.0, -0.5}; },
          [](const HenonParams&) { return std::vector<double>{}; },
          [](const IntermittencyParams&) { return std::vector<double>{1.0}; },
          [](const SingerParams&) { return std::vector<double>{0.0}; },
          [](const SineParams&) { return std::vector<double>{0.0}; },
      },
      spec.params());
}

}  // namespace

MapSpec::MapSpec(MapKind kind) : params_(default_params(kind)) {}

MapSpec::Interval MapSpec::attractor() const noexcept
{
  switch (kind()) {
    case MapKind::Iterative:
    case MapKind::Chebyshev: return {-1.0, 1.0};
    case MapKind::Henon: return {-1.5, 1.5};
    default: return {0.0, 1.0};
  }
}

MapSpec::Interval MapSpec::seed_interval() const noexcept
{
  switch (kind()) {
    case MapKind::Iterative:
    case MapKind::Chebyshev:
    case MapKind::Henon: return {-1.0, 1.0};
    default: return {0.0, 1.0};
  }
}

double MapSpec::apply(double z, double z_prev) const noexcept
{
  return std::visit(
      Overloaded{
          [&](const LogisticParams& p) { return p.a * z * (1.0 - z); },
          [&](const TentParams& p) { return z < 0.5 ? p.slope * z : p.slope * (1.0 - z); },
          [&](const SinusoidalParams& p) { return p.a * z * z * std::sin(kPi * z); },
          [&](const GaussParams&) {
            if (z == 0.0) {
              return 0.0;
            }
            const double inv = 1.0 / z;
            return inv - std::floor(inv);
          },
          [&](const CircleParams& p) {
            const double v = z + p.b - (p.a / (2.0 * kPi)) * std::sin(2.0 * kPi * z);
            return v - std::floor(v);
          },
          [&](const SinusParams&) { return 2.3 * z * z * std::sin(kPi * z); },
          [&](const IterativeParams& p) { return std::sin(p.a * kPi / z); },
          [&](const ChebyshevParams& p) {
            return std::cos(p.k * std::acos(std::clamp(z, -1.0, 1.0)));
          },
          [&](const HenonParams& p) { return 1.0 - p.p * z * z + p.q * z_prev; },
          [&](const IntermittencyParams& p) {
            if (z <= p.p) {
              return p.delta + z + p.b * std::pow(z, p.n);
            }
            return (z - p.p) / (1.0 - p.p);
          },
          [&](const SingerParams& p) {
            const double z2 = z * z;
            return p.alpha * (7.8 * z - 23.3 * z2 + 28.7 * z2 * z - 13.3 * z2 * z2);
          },
          [&](const SineParams& p) { return p.a / 4.0 * std::sin(kPi * z); },
      },
      params_);
}

std::string_view to_string(MapKind kind) noexcept
{
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<MapKind> parse_map_kind(std::string_view name) noexcept
{
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) {
      return static_cast<MapKind>(i);
    }
  }
  return std::nullopt;
}

const std::vector<MapKind>& all_map_kinds()
{
  static const std::vector<MapKind> kinds = [] {
    std::vector<MapKind> v;
    for (std::size_t i = 0; i < kMapCount; ++i) {
      v.push_back(static_cast<MapKind>(i));
    }
    return v;
  }();
  return kinds;
}

ChaoticMap::ChaoticMap(MapSpec spec, double z0) : spec_(spec), z_(z0)
{
  const auto range = spec_.seed_interval();
  if (!std::isfinite(z0) || z0 < range.lo || z0 > range.hi ||
      (spec_.kind() == MapKind::Iterative && z0 == 0.0) ||
      (spec_.kind() == MapKind::Circle && z0 == 1.0)) {
    std::ostringstream msg;
    msg << "seed " << z0 << " outside the admissible interval of the " << to_string(kind())
        << " map";
    throw Error(ErrorKind::SeedOutOfRange, msg.str());
  }
  for (double fp : fixed_point_seeds(spec_)) {
    if (z0 == fp) {
      std::ostringstream msg;
      msg << "seed " << z0 << " is a fixed point of the " << to_string(kind()) << " map";
      throw Error(ErrorKind::FixedPointSeed, msg.str());
    }
  }
}

double ChaoticMap::next_raw()
{
  const double next = spec_.apply(z_, z_prev_);
  if (!std::isfinite(next)) {
    std::ostringstream msg;
    msg << to_string(kind()) << " map diverged after " << steps_ << " steps";
    throw Error(ErrorKind::DivergedOrbit, msg.str());
  }
  z_prev_ = z_;
  z_ = next;
  ++steps_;
  return z_;
}

double ChaoticMap::next_unit()
{
  return to_unit(next_raw(), spec_.attractor());
}

double to_unit(double raw, MapSpec::Interval range) noexcept
{
  return std::clamp((raw - range.lo) / (range.hi - range.lo), 0.0, 1.0);
}

double seed_from_unit(const MapSpec& spec, double u)
{
  const auto range = spec.seed_interval();
  const double z = range.lo + (range.hi - range.lo) * (0.05 + 0.9 * u);
  try {
    ChaoticMap probe(spec, z);
    return z;
  } catch (const Error&) {
    return kDefaultSeed;
  }
}

}  // namespace cscf::chaos
