#include "cscf/optimizer.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>

#include "cscf/analysis.hpp"
#include "cscf/engineering.hpp"
#include "cscf/error.hpp"

namespace cscf
{
namespace
{

constexpr std::array<std::string_view, 4> kAlgorithmNames = {"ff", "iff", "sca", "cscf"};
constexpr std::array<std::string_view, 6> kVariantNames = {"i", "ii", "iii", "iv", "v", "all"};

// Offsets the noise stream away from the main stream of the same seed.
constexpr std::uint64_t kNoiseStream = 0x9E3779B97F4A7C15ULL;

UnitSource chaotic_source(const chaos::MapSpec& spec, Rng& seeder)
{
  auto map = std::make_shared<chaos::ChaoticMap>(spec, chaos::seed_from_unit(spec, seeder.uniform01()));
  return [map] { return map->next_unit(); };
}

struct Scored
{
  Evaluation eval;
  FitnessKey key;
};

}  // namespace

std::string_view to_string(Algorithm a) noexcept
{
  return kAlgorithmNames[static_cast<std::size_t>(a)];
}

std::string_view to_string(Variant v) noexcept
{
  return kVariantNames[static_cast<std::size_t>(v)];
}

std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept
{
  for (std::size_t i = 0; i < kAlgorithmNames.size(); ++i) {
    if (kAlgorithmNames[i] == s) {
      return static_cast<Algorithm>(i);
    }
  }
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view s) noexcept
{
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (kVariantNames[i] == s) {
      return static_cast<Variant>(i);
    }
  }
  return std::nullopt;
}

const std::vector<Variant>& single_variants()
{
  static const std::vector<Variant> v = {Variant::I, Variant::II, Variant::III, Variant::IV,
                                         Variant::V};
  return v;
}

void OptimizerConfig::validate() const
{
  if (population < 3) {
    throw Error(ErrorKind::ConfigError,
                "population must be at least 3 (the improved rule needs three distinct agents)");
  }
  if (trial_limit < 1) {
    throw Error(ErrorKind::ConfigError, "trial_limit must be at least 1");
  }
  if (penalty.mode == PenaltyMode::StaticPenalty && !(penalty.weight > 0.0)) {
    throw Error(ErrorKind::ConfigError, "static penalty weight must be positive");
  }
  firefly.validate();
  sca.validate();
}

ChaosSet make_chaos_set(Variant variant, const chaos::MapSpec& map, Rng& seeder)
{
  ChaosSet set;
  const bool all = variant == Variant::AllChaotic;
  if (all || variant == Variant::I) {
    set.j = chaotic_source(map, seeder);
  }
  if (all || variant == Variant::II) {
    set.k = chaotic_source(map, seeder);
  }
  if (all || variant == Variant::III) {
    set.r1 = chaotic_source(map, seeder);
  }
  if (all || variant == Variant::IV) {
    set.r2 = chaotic_source(map, seeder);
  }
  if (all || variant == Variant::V) {
    set.r3 = chaotic_source(map, seeder);
  }
  return set;
}

Position step_variant(std::size_t index, StepSide side, const StepContext& ctx, ChaosSet& chaos,
                      Rng& rng, bool improved)
{
  const auto& pop = ctx.population;
  const auto& self = pop[index];
  const std::size_t dim = ctx.bounds.dim();

  if (side == StepSide::Firefly) {
    std::vector<std::size_t> brighter;
    for (std::size_t j = 0; j < pop.size(); ++j) {
      if (pop[j].penalized < self.penalized) {
        brighter.push_back(j);
      }
    }
    // The brightest agent has no partner to move towards; its attraction
    // term vanishes.
    const std::size_t y = brighter.empty() ? index : brighter[rng.index(brighter.size())];
    std::size_t a = index;
    if (improved) {
      do {
        a = rng.index(pop.size());
      } while (a == index || a == y);
    }
    std::vector<double> eta_unit(dim);
    for (double& e : eta_unit) {
      e = rng.uniform01();
    }
    firefly::FireflyParams params = ctx.firefly;
    double diagonal2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      diagonal2 += ctx.bounds.range(k) * ctx.bounds.range(k);
    }
    params.beta /= diagonal2;
    if (chaos.j) {
      params.j_step *= chaos.j();
    }
    if (chaos.k) {
      params.k_step *= chaos.k();
    }
    if (!improved) {
      return firefly::move_standard(self.position, pop[y].position, ctx.bounds, params, eta_unit);
    }
    return firefly::move_improved(pop, index, y, a, ctx.bounds, params, eta_unit);
  }

  const double r1 =
      chaos.r1 ? chaos.r1() : sca::r1_schedule(ctx.iter, ctx.max_iter, ctx.sca.a_const);
  std::vector<double> r2(dim);
  std::vector<double> r3(dim);
  std::vector<double> r4(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    r2[k] = 2.0 * std::numbers::pi * (chaos.r2 ? chaos.r2() : rng.uniform01());
    r3[k] = 2.0 * (chaos.r3 ? chaos.r3() : rng.uniform01());
    r4[k] = rng.uniform01();
  }
  return sca::sca_step(self.position, ctx.best, r1, r2, r3, r4, ctx.bounds);
}

StepSide choose_side(Algorithm algorithm, std::size_t trial, std::size_t trial_limit) noexcept
{
  if (algorithm == Algorithm::SineCosine ||
      (algorithm == Algorithm::Cscf && trial >= trial_limit)) {
    return StepSide::SineCosine;
  }
  return StepSide::Firefly;
}

RunRecord optimize(const Problem& problem, const OptimizerConfig& config)
{
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  Rng noise(config.seed ^ kNoiseStream);
  ChaosSet chaos;
  if (config.algorithm == Algorithm::Cscf) {
    chaos = make_chaos_set(config.variant, chaos::MapSpec(config.map), rng);
  }

  const Bounds& bounds = problem.bounds;
  const std::size_t dim = problem.dim();
  std::size_t evals = 0;

  auto score = [&](std::span<const double> x) {
    Scored s{problem.evaluate(x, problem.noisy ? &noise : nullptr), {}};
    s.key = problem.constraint_count > 0
                ? engineering::penalized_fitness(s.eval.objective, s.eval.constraints, config.penalty)
                : FitnessKey{0.0, s.eval.objective};
    ++evals;
    return s;
  };

  std::vector<firefly::Agent> pop(config.population);
  std::vector<Evaluation> evals_of(config.population);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    pop[i].position.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      pop[i].position[k] = rng.uniform(bounds.lower[k], bounds.upper[k]);
    }
    Scored s = score(pop[i].position);
    pop[i].fitness = s.eval.objective;
    pop[i].penalized = s.key;
    evals_of[i] = std::move(s.eval);
  }

  std::size_t best_index = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].penalized < pop[best_index].penalized) {
      best_index = i;
    }
  }
  firefly::Agent best = pop[best_index];
  Evaluation best_eval = evals_of[best_index];

  RunRecord rec;
  rec.best_curve.reserve(config.max_iter + 1);
  rec.best_curve.push_back(best.penalized.score());

  const bool improved = config.algorithm != Algorithm::Firefly;
  for (std::size_t t = 0; t < config.max_iter; ++t) {
    for (std::size_t i = 0; i < pop.size(); ++i) {
      const StepSide side = choose_side(config.algorithm, pop[i].trial, config.trial_limit);
      const StepContext ctx{pop, best.position, bounds, config.firefly, config.sca, t,
                            config.max_iter};
      Position candidate = step_variant(i, side, ctx, chaos, rng, improved);
      if (config.algorithm == Algorithm::Cscf && side == StepSide::SineCosine) {
        pop[i].trial = 0;
      }

      Scored s = score(candidate);
      if (s.key < pop[i].penalized) {
        pop[i].position = std::move(candidate);
        pop[i].fitness = s.eval.objective;
        pop[i].penalized = s.key;
        pop[i].trial = 0;
        if (pop[i].penalized < best.penalized) {
          best = pop[i];
          best_eval = std::move(s.eval);
        }
      } else {
        ++pop[i].trial;
      }
    }
    rec.best_curve.push_back(best.penalized.score());
  }

  rec.problem = problem.name;
  rec.dim = dim;
  rec.algorithm = std::string(to_string(config.algorithm));
  const bool hybrid = config.algorithm == Algorithm::Cscf;
  rec.variant = hybrid ? std::string(to_string(config.variant)) : "none";
  rec.map = hybrid ? std::string(chaos::to_string(config.map)) : "none";
  rec.seed = config.seed;
  rec.population = config.population;
  rec.max_iter = config.max_iter;
  rec.best_position = best.position;
  rec.best_fitness = rec.best_curve.back();
  rec.best_objective = best_eval.objective;
  rec.best_violation = total_violation(best_eval.constraints);
  rec.best_constraints = best_eval.constraints;
  rec.reference = problem.reference;
  rec.evals = evals;
  rec.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

std::vector<VariantRank> rank_variants(std::span<const SweepCell> cells)
{
  // problem -> variant -> (best mae, arg map)
  std::map<std::string, std::map<Variant, std::pair<double, chaos::MapKind>>> best;
  // variant -> map -> (sum of mae, count) for choosing a representative map
  std::map<Variant, std::map<chaos::MapKind, std::pair<double, std::size_t>>> per_map;
  for (const auto& c : cells) {
    auto& slot = best[c.problem];
    auto it = slot.find(c.variant);
    if (it == slot.end() || c.mae < it->second.first) {
      slot[c.variant] = {c.mae, c.map};
    }
    auto& acc = per_map[c.variant][c.map];
    acc.first += c.mae;
    acc.second += 1;
  }

  std::map<Variant, std::pair<double, std::size_t>> rank_sum;
  std::map<Variant, double> best_mae_sum;
  for (const auto& [problem, by_variant] : best) {
    std::vector<double> maes;
    std::vector<Variant> order;
    for (const auto& [v, entry] : by_variant) {
      maes.push_back(entry.first);
      order.push_back(v);
    }
    const auto ranks = analysis::midranks(maes);
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank_sum[order[i]].first += ranks[i];
      rank_sum[order[i]].second += 1;
      best_mae_sum[order[i]] += maes[i];
    }
  }

  std::vector<VariantRank> out;
  for (const auto& [v, acc] : rank_sum) {
    VariantRank r{v, acc.first / static_cast<double>(acc.second), chaos::MapKind::Logistic,
                  best_mae_sum[v] / static_cast<double>(acc.second)};
    double best_mean = std::numeric_limits<double>::infinity();
    for (const auto& [m, sums] : per_map[v]) {
      const double mean = sums.first / static_cast<double>(sums.second);
      if (mean < best_mean) {
        best_mean = mean;
        r.best_map = m;
      }
    }
    out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const VariantRank& a, const VariantRank& b) {
    return a.mean_rank < b.mean_rank;
  });
  return out;
}

SweepResult variant_sweep(std::span<const Problem> problems, std::span<const Variant> variants,
                          std::span<const chaos::MapKind> maps, std::size_t replicates,
                          const OptimizerConfig& base)
{
  if (replicates == 0) {
    throw Error(ErrorKind::ConfigError, "variant_sweep needs at least one replicate");
  }
  SweepResult result;
  for (const auto& problem : problems) {
    if (!problem.reference) {
      throw Error(ErrorKind::ConfigError, problem.name + " has no reference value for MAE");
    }
    for (Variant v : variants) {
      for (chaos::MapKind m : maps) {
        SweepCell cell{problem.name, v, m, 0.0, {}};
        for (std::size_t r = 0; r < replicates; ++r) {
          OptimizerConfig cfg = base;
          cfg.algorithm = Algorithm::Cscf;
          cfg.variant = v;
          cfg.map = m;
          cfg.seed = base.seed + r;
          cell.achieved.push_back(optimize(problem, cfg).best_fitness);
        }
        cell.mae = analysis::mae(cell.achieved, *problem.reference);
        result.cells.push_back(std::move(cell));
      }
    }
  }
  result.ranking = rank_variants(result.cells);
  return result;
}

}  // namespace cscf
