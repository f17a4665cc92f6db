#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "cscf/analysis.hpp"
#include "cscf/error.hpp"
#include "cscf/rng.hpp"
#include "oracles.hpp"

using namespace cscf;
using namespace cscf::analysis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

ErrorKind kind_of(auto&& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

RunRecord record(const std::string& algo, double best, double wall = 0.1)
{
  RunRecord r;
  r.problem = "sphere";
  r.dim = 2;
  r.algorithm = algo;
  r.variant = "none";
  r.map = "none";
  r.best_fitness = best;
  r.best_curve = {best};
  r.wall_time = wall;
  return r;
}

}  // namespace

TEST_CASE("summaries", "[analysis]")
{
  const std::vector<double> one = {5};
  const auto s1 = summarize(one);
  CHECK(s1.mean == 5);
  CHECK(s1.std == 0);
  CHECK(s1.best == 5);
  CHECK(s1.worst == 5);
  const std::vector<double> three = {1, 2, 3};
  const auto s3 = summarize(three);
  CHECK(s3.mean == 2);
  CHECK(s3.std == 1);
  CHECK(s3.best == 1);
  CHECK(s3.worst == 3);
  CHECK(s3.n == 3);
  const std::vector<double> same = {0.1, 0.1, 0.1};
  CHECK(summarize(same).std == 0);
  CHECK(kind_of([] { summarize(std::vector<double>{}); }) == ErrorKind::EmptySample);
}

TEST_CASE("summary ordering holds on random samples", "[analysis][property]")
{
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> v(1 + rng.index(30));
    for (auto& x : v) {
      x = rng.uniform(-100, 100);
    }
    const auto s = summarize(v);
    REQUIRE(s.best <= s.mean + 1e-12);
    REQUIRE(s.mean <= s.worst + 1e-12);
    REQUIRE(s.std >= 0.0);
  }
}

TEST_CASE("rank-sum examples", "[analysis]")
{
  const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
  const auto r = wilcoxon_rank_sum(a, b);
  CHECK(r.exact);
  CHECK_THAT(r.p_value, WithinAbs(0.1, 1e-12));
  CHECK(r.r_plus == 6.0);
  CHECK(r.r_minus == 15.0);
  CHECK(wilcoxon_rank_sum(a, a).p_value == 1.0);
  const std::vector<double> one = {1}, two = {2};
  CHECK_THAT(wilcoxon_rank_sum(one, two).p_value, WithinAbs(1.0, 1e-12));
  CHECK(kind_of([&] { wilcoxon_rank_sum(std::vector<double>{}, a); }) == ErrorKind::EmptySample);
}

TEST_CASE("rank-sum equals permutation enumeration", "[analysis][oracle]")
{
  Rng rng(42);
  for (std::size_t total = 2; total <= 10; ++total) {
    for (std::size_t na = 1; na < total; ++na) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> a(na), b(total - na);
        // Small integer pool so that ties occur.
        for (auto& x : a) x = static_cast<double>(rng.index(rep % 2 ? 4 : 1000));
        for (auto& x : b) x = static_cast<double>(rng.index(rep % 2 ? 4 : 1000));
        const auto r = wilcoxon_rank_sum(a, b);
        INFO("na=" << na << " nb=" << total - na);
        REQUIRE(r.exact);
        REQUIRE_THAT(r.p_value, WithinAbs(oracle::rank_sum_p(a, b), 1e-12));
      }
    }
  }
}

TEST_CASE("rank-sum large samples use the normal approximation", "[analysis]")
{
  std::vector<double> a(20), b(20);
  for (std::size_t i = 0; i < 20; ++i) {
    a[i] = static_cast<double>(i);
    b[i] = static_cast<double>(i) + 30.0;
  }
  const auto r = wilcoxon_rank_sum(a, b);
  CHECK_FALSE(r.exact);
  CHECK(r.p_value < 1e-6);
  CHECK(r.significant_05);
  CHECK(r.significant_10);
  CHECK_THAT(wilcoxon_rank_sum(a, a).p_value, WithinAbs(1.0, 1e-12));
}

TEST_CASE("statistics ignore input order", "[analysis][property]")
{
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> a(1 + rng.index(15)), b(1 + rng.index(15));
    for (auto& x : a) x = static_cast<double>(rng.index(10));
    for (auto& x : b) x = static_cast<double>(rng.index(10));
    const auto r = wilcoxon_rank_sum(a, b);
    auto a2 = a, b2 = b;
    std::reverse(a2.begin(), a2.end());
    std::rotate(b2.begin(), b2.begin() + static_cast<long>(b2.size() / 2), b2.end());
    const auto r2 = wilcoxon_rank_sum(a2, b2);
    REQUIRE(r.statistic == r2.statistic);
    REQUIRE(r.p_value == r2.p_value);
  }
}

TEST_CASE("signed-rank examples", "[analysis]")
{
  const std::vector<double> a = {3, 4, 5}, b = {2, 2, 2};
  const auto r = wilcoxon_signed_rank(a, b);
  CHECK(r.r_plus == 6);
  CHECK(r.r_minus == 0);
  const std::vector<double> x = {2}, y = {1};
  const auto one = wilcoxon_signed_rank(x, y);
  CHECK(one.r_plus == 1);
  CHECK(one.r_minus == 0);
  CHECK(one.exact);
  CHECK_THAT(one.p_value, WithinAbs(1.0, 1e-12));
  CHECK(kind_of([&] { wilcoxon_signed_rank(a, a); }) == ErrorKind::AllZeroDifferences);
  CHECK(kind_of([&] { wilcoxon_signed_rank(a, x); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("signed-rank totals", "[analysis][property]")
{
  Rng rng(44);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.index(30);
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.uniform(-10, 10);
      b[i] = rng.uniform(-10, 10);
    }
    const auto r = wilcoxon_signed_rank(a, b);
    const double m = static_cast<double>(n);
    REQUIRE_THAT(r.r_plus + r.r_minus, WithinAbs(m * (m + 1) / 2, 1e-9));
    REQUIRE(r.p_value >= 0.0);
    REQUIRE(r.p_value <= 1.0);
  }
}

TEST_CASE("signed-rank exact p by sign enumeration", "[analysis][oracle]")
{
  // Differences 1..5 all positive: only 2 of the 32 sign patterns are as extreme.
  const std::vector<double> a = {1, 2, 3, 4, 5}, b = {0, 0, 0, 0, 0};
  CHECK_THAT(wilcoxon_signed_rank(a, b).p_value, WithinAbs(2.0 / 32.0, 1e-12));
}

TEST_CASE("mean absolute error", "[analysis]")
{
  CHECK(mae(std::vector<double>{2}, 2) == 0);
  CHECK_THAT(mae(std::vector<double>{1, 2, 3}, 2), WithinRel(2.0 / 3.0, 1e-15));
  CHECK_THAT(mae(std::vector<double>{7.5, 2.5}, 5), WithinRel(2.5, 1e-15));
  CHECK(kind_of([] { mae(std::vector<double>{}, 1); }) == ErrorKind::EmptySample);

  Rng rng(45);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(1 + rng.index(10));
    for (auto& x : v) x = rng.uniform(-1, 1);
    const double ref = rng.uniform(-1, 1);
    REQUIRE(mae(v, ref) > 0.0);
    std::vector<double> hit(v.size(), ref);
    REQUIRE(mae(hit, ref) == 0.0);
  }
}

TEST_CASE("comparison report", "[analysis]")
{
  std::map<std::string, std::vector<RunRecord>> same;
  for (double v : {1.0, 2.0, 3.0}) {
    same["a"].push_back(record("a", v));
    same["b"].push_back(record("b", v));
  }
  const auto rep = compare_report(same, 0.0);
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].test.p_value == 1.0);
  CHECK(rep.pairs[0].winner == 0);
  CHECK(rep.mae.at("a") == 2.0);
  CHECK_THAT(rep.mean_wall_time.at("b"), WithinRel(0.1, 1e-12));

  std::map<std::string, std::vector<RunRecord>> single = {{"a", same["a"]}};
  CHECK(kind_of([&] { compare_report(single, 0.0); }) == ErrorKind::TooFewGroups);
}

TEST_CASE("multi-problem win counts", "[analysis]")
{
  std::vector<ComparisonReport> reports;
  for (int p = 0; p < 20; ++p) {
    std::map<std::string, std::vector<RunRecord>> m;
    const double x = p < 16 ? 1.0 : 3.0;
    for (int s = 0; s < 3; ++s) {
      m["cscf"].push_back(record("cscf", x + s));
      m["ff"].push_back(record("ff", 2.0 + s));
    }
    reports.push_back(compare_report(m, std::nullopt));
  }
  const auto rows = compare_across_problems(reports);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].a == "cscf");
  CHECK(rows[0].better == 16);
  CHECK(rows[0].worse == 4);
  REQUIRE(rows[0].test.has_value());
  CHECK_THAT(rows[0].test->r_plus + rows[0].test->r_minus, WithinAbs(210.0, 1e-9));
}
