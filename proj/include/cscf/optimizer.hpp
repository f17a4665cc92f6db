#pragma once

/// The chaotic sine cosine firefly hybrid and its base algorithms.
///
/// Each agent carries a stagnation counter. While it is below `trial_limit`
/// the agent takes an improved-firefly step; once it reaches the limit the
/// agent takes a sine cosine step towards the best-so-far position and the
/// counter is reset. A candidate replaces the agent only if its fitness key
/// strictly improves; otherwise the counter increments.
///
/// Variants choose which step parameter is driven by a chaotic map:
///   I   J (firefly randomization step)    J * c
///   II  K (improved-term step)            K * c
///   III r1 (sine cosine amplitude)        c
///   IV  r2 (phase)                        2 pi c
///   V   r3 (destination weight)           2 c
/// with c = next_unit() of the map. "all" tunes all five at once, each
/// parameter with its own generator of the same kind.
///
/// Budget: one evaluation per agent for initialization and one per agent
/// per iteration, i.e. population * (1 + max_iter) evaluations.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cscf/chaos.hpp"
#include "cscf/firefly.hpp"
#include "cscf/problem.hpp"
#include "cscf/record.hpp"
#include "cscf/rng.hpp"
#include "cscf/sca.hpp"

namespace cscf
{

enum class Algorithm
{
  Firefly,          // "ff": attraction towards a random brighter agent
  ImprovedFirefly,  // "iff": plus the random third-agent pull
  SineCosine,       // "sca"
  Cscf,             // "cscf": the hybrid
};

enum class Variant
{
  I,
  II,
  III,
  IV,
  V,
  AllChaotic,
};

std::string_view to_string(Algorithm a) noexcept;
std::string_view to_string(Variant v) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept;
std::optional<Variant> parse_variant(std::string_view s) noexcept;
const std::vector<Variant>& single_variants();

struct OptimizerConfig
{
  Algorithm algorithm = Algorithm::Cscf;
  std::size_t population = 20;
  std::size_t max_iter = 500;
  Variant variant = Variant::AllChaotic;
  chaos::MapKind map = chaos::MapKind::Logistic;
  std::size_t trial_limit = 10;
  std::uint64_t seed = 0;
  firefly::FireflyParams firefly;
  sca::ScaParams sca;
  PenaltyParams penalty;

  /// Throws Error{ConfigError}.
  void validate() const;
};

/// Unit-interval number source standing in for one tuned parameter.
using UnitSource = std::function<double()>;

/// One slot per tunable parameter; an empty slot means "draw uniformly".
struct ChaosSet
{
  UnitSource j;
  UnitSource k;
  UnitSource r1;
  UnitSource r2;
  UnitSource r3;
};

/// Independent generators of kind `map` for the slots `variant` tunes, with
/// seeds drawn from `seeder`.
ChaosSet make_chaos_set(Variant variant, const chaos::MapSpec& map, Rng& seeder);

/// Everything a single agent update reads.
struct StepContext
{
  std::span<const firefly::Agent> population;
  std::span<const double> best;
  const Bounds& bounds;
  const firefly::FireflyParams& firefly;
  const sca::ScaParams& sca;
  std::size_t iter;
  std::size_t max_iter;
};

enum class StepSide
{
  Firefly,
  SineCosine,
};

/// Candidate position for agent `index`. The firefly side uses the improved
/// rule (or the standard one when `improved` is false) with J and K scaled by
/// their chaos slots. Distances are measured relative to the box diagonal,
/// i.e. beta is divided by the squared diagonal. The sine cosine side uses r1
/// from the schedule unless chaos-tuned, and per-coordinate r2 in [0, 2 pi),
/// r3 in [0, 2), r4 in [0, 1).
Position step_variant(std::size_t index, StepSide side, const StepContext& ctx, ChaosSet& chaos,
                      Rng& rng, bool improved = true);

/// Branch for an agent's next update: the hybrid switches to the sine cosine
/// side once the agent has failed `trial_limit` times in a row.
StepSide choose_side(Algorithm algorithm, std::size_t trial, std::size_t trial_limit) noexcept;

/// Runs one optimization. Throws Error{ConfigError} and propagates
/// Error{NonFiniteResult}.
RunRecord optimize(const Problem& problem, const OptimizerConfig& config);

struct SweepCell
{
  std::string problem;
  Variant variant;
  chaos::MapKind map;
  double mae = 0.0;
  std::vector<double> achieved;
};

struct VariantRank
{
  Variant variant;
  double mean_rank = 0.0;  // average over problems; 1 is best
  chaos::MapKind best_map;
  double best_mae = 0.0;  // mean over problems of the per-problem best MAE
};

struct SweepResult
{
  std::vector<SweepCell> cells;  // problem-major, then variant, then map
  std::vector<VariantRank> ranking;  // sorted best first
};

/// Ranking used by variant_sweep, exposed for reports built from stored runs.
std::vector<VariantRank> rank_variants(std::span<const SweepCell> cells);

/// Runs every (problem, variant, map) cell `replicates` times with seeds
/// base.seed + r and records the MAE of the achieved best fitness against each
/// problem's reference. Per problem, variants are ranked by their best MAE
/// over maps; the ranking averages these ranks. Throws Error{ConfigError}
/// when replicates is zero or a problem has no reference.
SweepResult variant_sweep(std::span<const Problem> problems, std::span<const Variant> variants,
                          std::span<const chaos::MapKind> maps, std::size_t replicates,
                          const OptimizerConfig& base);

}  // namespace cscf
