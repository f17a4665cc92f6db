#include "cscf/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "cscf/error.hpp"

namespace cscf::analysis
{
namespace
{

// Deviations within this of the observed one count as "at least as extreme";
// midranks are multiples of 0.5 so any real difference is far larger.
constexpr double kTieTolerance = 1e-9;

void require_nonempty(std::span<const double> s, const char* what)
{
  if (s.empty()) {
    throw Error(ErrorKind::EmptySample, std::string(what) + " is empty");
  }
}

double two_sided_normal(double deviation, double variance)
{
  if (!(variance > 0.0)) {
    return 1.0;
  }
  const double z = std::max(0.0, std::abs(deviation) - 0.5) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

void set_flags(WilcoxonResult& r)
{
  r.significant_10 = r.p_value < 0.1;
  r.significant_05 = r.p_value < 0.05;
}

}  // namespace

SummaryStats summarize(std::span<const double> samples)
{
  require_nonempty(samples, "sample");
  SummaryStats s;
  s.n = samples.size();
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.n);
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  s.best = *lo;
  s.worst = *hi;
  // Rounding in the sum can push the mean just outside [best, worst].
  s.mean = std::clamp(s.mean, s.best, s.worst);
  if (s.n > 1 && s.best != s.worst) {
    double ss = 0.0;
    for (double v : samples) {
      ss += (v - s.mean) * (v - s.mean);
    }
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

std::vector<double> midranks(std::span<const double> values)
{
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = rank;
    }
    i = j + 1;
  }
  return ranks;
}

WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b)
{
  require_nonempty(a, "first sample");
  require_nonempty(b, "second sample");
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t total = n1 + n2;

  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = midranks(pooled);

  WilcoxonResult r;
  r.r_plus = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n1), 0.0);
  r.r_minus = std::accumulate(ranks.begin() + static_cast<std::ptrdiff_t>(n1), ranks.end(), 0.0);
  r.statistic = r.r_plus;
  const double expected = static_cast<double>(n1) * static_cast<double>(total + 1) / 2.0;
  const double observed = std::abs(r.r_plus - expected);

  if (total <= kExactLimit) {
    r.exact = true;
    std::uint64_t extreme = 0;
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != n1) {
        continue;
      }
      double w = 0.0;
      for (std::size_t k = 0; k < total; ++k) {
        if (mask & (1u << k)) {
          w += ranks[k];
        }
      }
      ++count;
      if (std::abs(w - expected) >= observed - kTieTolerance) {
        ++extreme;
      }
    }
    r.p_value = static_cast<double>(extreme) / static_cast<double>(count);
  } else {
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) {
        ++j;
      }
      const double t = static_cast<double>(j - i);
      tie_term += t * t * t - t;
      i = j;
    }
    const double n = static_cast<double>(total);
    const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                            ((n + 1.0) - tie_term / (n * (n - 1.0)));
    r.p_value = two_sided_normal(r.r_plus - expected, variance);
  }
  set_flags(r);
  return r;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b)
{
  require_nonempty(a, "first sample");
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << "paired samples differ in length (" << a.size() << " vs " << b.size() << ")";
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) {
      diffs.push_back(d);
    }
  }
  if (diffs.empty()) {
    throw Error(ErrorKind::AllZeroDifferences, "every paired difference is zero");
  }
  std::vector<double> magnitudes(diffs.size());
  std::transform(diffs.begin(), diffs.end(), magnitudes.begin(),
                 [](double d) { return std::abs(d); });
  const std::vector<double> ranks = midranks(magnitudes);

  WilcoxonResult r;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    (diffs[i] > 0.0 ? r.r_plus : r.r_minus) += ranks[i];
  }
  r.statistic = std::min(r.r_plus, r.r_minus);
  const double expected = (r.r_plus + r.r_minus) / 2.0;
  const double observed = std::abs(r.r_plus - expected);

  const std::size_t m = diffs.size();
  if (m <= kExactLimit) {
    r.exact = true;
    std::uint64_t extreme = 0;
    const std::uint32_t patterns = 1u << m;
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
      double t = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask & (1u << k)) {
          t += ranks[k];
        }
      }
      if (std::abs(t - expected) >= observed - kTieTolerance) {
        ++extreme;
      }
    }
    r.p_value = static_cast<double>(extreme) / static_cast<double>(patterns);
  } else {
    double variance = 0.0;
    for (double rk : ranks) {
      variance += rk * rk;
    }
    r.p_value = two_sided_normal(r.r_plus - expected, variance / 4.0);
  }
  set_flags(r);
  return r;
}

double mae(std::span<const double> achieved, double reference)
{
  require_nonempty(achieved, "achieved values");
  double sum = 0.0;
  for (double v : achieved) {
    sum += std::abs(v - reference);
  }
  return sum / static_cast<double>(achieved.size());
}

ComparisonReport compare_report(const std::map<std::string, std::vector<RunRecord>>& records_by_algorithm,
                                std::optional<double> reference)
{
  if (records_by_algorithm.size() < 2) {
    throw Error(ErrorKind::TooFewGroups, "pairwise comparison needs at least two algorithms");
  }
  ComparisonReport report;
  std::map<std::string, std::vector<double>> bests;
  for (const auto& [name, records] : records_by_algorithm) {
    if (records.empty()) {
      throw Error(ErrorKind::EmptySample, "no records for " + name);
    }
    std::vector<double> values;
    double wall = 0.0;
    for (const auto& rec : records) {
      values.push_back(rec.best_fitness);
      wall += rec.wall_time;
    }
    report.summaries[name] = summarize(values);
    report.mean_wall_time[name] = wall / static_cast<double>(records.size());
    if (reference) {
      report.mae[name] = mae(values, *reference);
    }
    bests[name] = std::move(values);
  }
  for (auto i = bests.begin(); i != bests.end(); ++i) {
    for (auto j = std::next(i); j != bests.end(); ++j) {
      PairwiseComparison row;
      row.a = i->first;
      row.b = j->first;
      row.test = wilcoxon_rank_sum(i->second, j->second);
      const double ma = report.summaries[row.a].mean;
      const double mb = report.summaries[row.b].mean;
      row.winner = ma < mb ? -1 : (mb < ma ? 1 : 0);
      report.pairs.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<MultiProblemComparison> compare_across_problems(std::span<const ComparisonReport> reports)
{
  std::set<std::string> names;
  for (const auto& rep : reports) {
    for (const auto& [name, stats] : rep.summaries) {
      names.insert(name);
    }
  }
  std::vector<MultiProblemComparison> out;
  for (auto i = names.begin(); i != names.end(); ++i) {
    for (auto j = std::next(i); j != names.end(); ++j) {
      MultiProblemComparison row;
      row.a = *i;
      row.b = *j;
      std::vector<double> ma;
      std::vector<double> mb;
      for (const auto& rep : reports) {
        const auto fa = rep.summaries.find(*i);
        const auto fb = rep.summaries.find(*j);
        if (fa == rep.summaries.end() || fb == rep.summaries.end() ||
            !std::isfinite(fa->second.mean) || !std::isfinite(fb->second.mean)) {
          continue;
        }
        ma.push_back(fa->second.mean);
        mb.push_back(fb->second.mean);
        row.better += fa->second.mean < fb->second.mean ? 1 : 0;
        row.worse += fa->second.mean > fb->second.mean ? 1 : 0;
      }
      if (ma.empty()) {
        continue;
      }
      if (row.better + row.worse > 0) {
        row.test = wilcoxon_signed_rank(ma, mb);
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace cscf::analysis
