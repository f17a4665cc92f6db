#pragma once

/// Chaotic sequence generators used in place of uniform random draws.
///
/// Twelve one-dimensional maps are provided. Each map has a fixed parameter
/// record and a fixed attractor interval; `ChaoticMap::next_unit` rescales
/// the raw iterate affinely from that interval onto [0, 1] and clamps.
///
/// Deviations from the literal map table this library was built against:
///   - Tent: the printed "beta - z" branch is not a chaotic map. The
///     canonical tent map is used, with slope 1.9999 rather than 2: at
///     exactly 2 every step is an exact binary shift in double precision and
///     the orbit reaches the fixed point 0 within ~55 iterations.
///   - Chebyshev: printed identically to Sinus; the canonical
///     z' = cos(k arccos z) with k = 4 is used instead.
///   - Henon: the two-term delayed form z' = 1 - P z^2 + Q z_prev is used;
///     z_prev starts at 0.
///   - Sinus and Sinusoidal (A = 2.3) share one formula, so with default
///     parameters and equal seeds they produce identical sequences.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cscf::chaos
{

enum class MapKind
{
  Logistic,
  Tent,
  Sinusoidal,
  Gauss,
  Circle,
  Sinus,
  Iterative,
  Chebyshev,
  Henon,
  Intermittency,
  Singer,
  Sine,
};

inline constexpr std::size_t kMapCount = 12;

struct LogisticParams
{
  double a = 4.0;
};
struct TentParams
{
  double slope = 1.9999;
};
struct SinusoidalParams
{
  double a = 2.3;
};
struct GaussParams
{
};
struct CircleParams
{
  double a = 0.5;
  double b = 0.2;
};
struct SinusParams
{
};
struct IterativeParams
{
  double a = 0.7;
};
struct ChebyshevParams
{
  double k = 4.0;
};
struct HenonParams
{
  double p = 1.4;
  double q = 0.3;
};
struct IntermittencyParams
{
  double delta = 0.001;
  double b = 1.0;
  double n = 2.0;
  double p = 0.5;
};
struct SingerParams
{
  double alpha = 1.07;
};
struct SineParams
{
  double a = 4.0;
};

/// Alternatives are ordered exactly like MapKind.
using MapParams = std::variant<LogisticParams, TentParams, SinusoidalParams, GaussParams,
                               CircleParams, SinusParams, IterativeParams, ChebyshevParams,
                               HenonParams, IntermittencyParams, SingerParams, SineParams>;

/// A map kind together with its (immutable) parameter record.
class MapSpec
{
public:
  /// Default parameters for `kind`.
  explicit MapSpec(MapKind kind);
  explicit MapSpec(MapParams params) : params_(params) {}

  [[nodiscard]] MapKind kind() const noexcept { return static_cast<MapKind>(params_.index()); }
  [[nodiscard]] const MapParams& params() const noexcept { return params_; }

  struct Interval
  {
    double lo;
    double hi;
  };

  /// Attractor interval used by the unit rescaling.
  [[nodiscard]] Interval attractor() const noexcept;
  /// Admissible seed interval (closed unless the map is undefined at an end).
  [[nodiscard]] Interval seed_interval() const noexcept;
  /// Raw image of z under the map. Henon additionally needs the previous iterate.
  [[nodiscard]] double apply(double z, double z_prev) const noexcept;

private:
  MapParams params_;
};

std::string_view to_string(MapKind kind) noexcept;
std::optional<MapKind> parse_map_kind(std::string_view name) noexcept;
const std::vector<MapKind>& all_map_kinds();

inline constexpr double kDefaultSeed = 0.7;

/// One chaotic generator. Mutable and sequential; each optimizer run owns its
/// own instances.
class ChaoticMap
{
public:
  /// Throws Error{FixedPointSeed} or Error{SeedOutOfRange}.
  ChaoticMap(MapSpec spec, double z0 = kDefaultSeed);
  explicit ChaoticMap(MapKind kind, double z0 = kDefaultSeed) : ChaoticMap(MapSpec(kind), z0) {}

  /// Advance one iteration and return the raw iterate. Throws
  /// Error{DivergedOrbit} if the iterate is not finite.
  double next_raw();

  /// next_raw() rescaled from the attractor interval onto [0, 1].
  double next_unit();

  [[nodiscard]] const MapSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] MapKind kind() const noexcept { return spec_.kind(); }
  [[nodiscard]] double value() const noexcept { return z_; }
  [[nodiscard]] double previous() const noexcept { return z_prev_; }
  [[nodiscard]] std::uint64_t step_count() const noexcept { return steps_; }

private:
  MapSpec spec_;
  double z_;
  double z_prev_ = 0.0;
  std::uint64_t steps_ = 0;
};

/// Map a raw value from [lo, hi] onto [0, 1], clamping outside values.
double to_unit(double raw, MapSpec::Interval range) noexcept;

/// Draw an admissible, non-fixed-point seed for `spec` from a unit uniform u.
double seed_from_unit(const MapSpec& spec, double u);

}  // namespace cscf::chaos
