#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cscf/record.hpp"

namespace cscf::analysis
{

struct SummaryStats
{
  double mean = 0.0;
  double std = 0.0;  // n - 1 denominator, 0 for a single sample
  double best = 0.0;
  double worst = 0.0;
  std::size_t n = 0;
};

/// Throws Error{EmptySample}.
SummaryStats summarize(std::span<const double> samples);

struct WilcoxonResult
{
  double statistic = 0.0;
  double r_plus = 0.0;
  double r_minus = 0.0;
  double p_value = 1.0;  // two-sided
  bool exact = false;
  bool significant_10 = false;  // p < 0.1
  bool significant_05 = false;  // p < 0.05
};

/// Sample sizes at or below which p-values are computed by enumeration.
inline constexpr std::size_t kExactLimit = 12;

/// Ranks 1..n with ties replaced by their average rank.
std::vector<double> midranks(std::span<const double> values);

/// Two-sample rank-sum test. statistic = r_plus = rank sum of `a`,
/// r_minus = rank sum of `b`. Exact when |a| + |b| <= 12, otherwise normal
/// approximation with tie and continuity corrections.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

/// Paired signed-rank test on a - b with zero differences dropped.
/// statistic = min(r_plus, r_minus). Exact for up to 12 nonzero pairs.
/// Throws Error{EmptySample}, Error{DimensionMismatch} or
/// Error{AllZeroDifferences}.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

/// Mean absolute error against a reference value. Throws Error{EmptySample}.
double mae(std::span<const double> achieved, double reference);

struct PairwiseComparison
{
  std::string a;
  std::string b;
  WilcoxonResult test;
  /// -1 when a has the lower mean, +1 when b does, 0 on a tie.
  int winner = 0;
};

struct ComparisonReport
{
  std::map<std::string, SummaryStats> summaries;
  std::map<std::string, double> mean_wall_time;
  std::map<std::string, double> mae;  // present when a reference is known
  std::vector<PairwiseComparison> pairs;
};

/// Per-algorithm summaries, pairwise rank-sum tests on best_fitness and mean
/// wall time for one problem. Throws Error{TooFewGroups} with fewer than two
/// algorithms and Error{EmptySample} for an empty group.
ComparisonReport compare_report(const std::map<std::string, std::vector<RunRecord>>& records_by_algorithm,
                                std::optional<double> reference);

/// Multi-problem comparison row: B counts problems where `a` has the lower
/// mean, W where it has the higher one; the signed-rank test pairs the
/// per-problem means.
struct MultiProblemComparison
{
  std::string a;
  std::string b;
  std::size_t better = 0;
  std::size_t worse = 0;
  std::optional<WilcoxonResult> test;  // absent when all means coincide
};

std::vector<MultiProblemComparison> compare_across_problems(std::span<const ComparisonReport> reports);

}  // namespace cscf::analysis
