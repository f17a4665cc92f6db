// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cscf/analysis.hpp"
#include "cscf/chaos.hpp"
#include "cscf/engineering.hpp"
#include "cscf/experiment.hpp"
#include "cscf/firefly.hpp"
#include "cscf/objectives.hpp"
#include "cscf/optimizer.hpp"
#include "cscf/rng.hpp"
#include "cscf/sca.hpp"
#include "oracles.hpp"

using namespace cscf;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
  bool pass = true;
  std::string detail;
};

bool close_rel(double got, double want, double rel)
{
  if (got == want) {
    return true;
  }
  return std::fabs(got - want) <= rel * std::max(std::fabs(want), 1e-300) ||
         std::fabs(got - want) <= rel;
}

std::vector<double> draw(Rng& rng, std::size_t n, double lo, double hi)
{
  std::vector<double> v(n);
  for (auto& x : v) {
    x = rng.uniform(lo, hi);
  }
  return v;
}

// 1. Literal maps against longhand formulas; range and spread for all twelve.
Outcome chaos_conformance()
{
  Outcome o;
  struct Case
  {
    chaos::MapKind kind;
    double (*f)(double);
  };
  const Case literal[] = {
      {chaos::MapKind::Logistic, oracle::logistic},
      {chaos::MapKind::Sine, oracle::sine},
      {chaos::MapKind::Gauss, oracle::gauss},
      {chaos::MapKind::Circle, oracle::circle},
      {chaos::MapKind::Sinusoidal, oracle::sinusoidal},
      {chaos::MapKind::Singer, oracle::singer},
      {chaos::MapKind::Iterative, oracle::iterative},
  };
  double worst = 0.0;
  for (const auto& c : literal) {
    chaos::ChaoticMap m(c.kind);
    for (int s = 0; s < 10000; ++s) {
      const double want = c.f(m.value());
      const double got = m.next_raw();
      if (!close_rel(got, want, 1e-12)) {
        o.pass = false;
        o.detail += std::string(chaos::to_string(c.kind)) + " step " + std::to_string(s) + "; ";
        break;
      }
      if (want != 0.0) {
        worst = std::max(worst, std::fabs(got - want) / std::fabs(want));
      }
    }
  }
  double min_var = INFINITY;
  for (auto kind : chaos::all_map_kinds()) {
    chaos::ChaoticMap m(kind);
    double sum = 0.0, sum2 = 0.0;
    for (int s = 0; s < 10000; ++s) {
      const double u = m.next_unit();
      if (!(u >= 0.0 && u <= 1.0)) {
        o.pass = false;
        o.detail += std::string(chaos::to_string(kind)) + " left [0,1]; ";
        break;
      }
      if (s < 1000) {
        sum += u;
        sum2 += u * u;
      }
    }
    const double var = (sum2 - sum * sum / 1000.0) / 999.0;
    min_var = std::min(min_var, var);
    if (!(var > 1e-4)) {
      o.pass = false;
      o.detail += std::string(chaos::to_string(kind)) + " variance " + std::to_string(var) + "; ";
    }
  }
  std::ostringstream d;
  d << "max rel err " << worst << " (tol 1e-12), min variance " << min_var << " (> 1e-4)";
  o.detail = d.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 2. Zero-optimum benchmarks at the origin.
Outcome benchmark_minima()
{
  Outcome o;
  double worst = 0.0;
  for (std::size_t i : {1, 2, 6, 7, 10}) {
    const std::vector<double> origin(20, 0.0);
    const double f = objectives::evaluate(objectives::BenchmarkId(i), origin).objective;
    worst = std::max(worst, std::fabs(f));
    if (!(std::fabs(f) <= 1e-10)) {
      o.pass = false;
    }
  }
  std::ostringstream d;
  d << "max |f(0)| = " << worst << " (tol 1e-10)";
  o.detail = d.str();
  return o;
}

// 3. Movement kernels against longhand re-evaluation.
Outcome kernel_oracles()
{
  Outcome o;
  Rng rng(2024);
  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = 1 + rng.index(10);
    Bounds box{draw(rng, dim, -100, -1), draw(rng, dim, 1, 100)};
    std::vector<double> x(dim), y(dim), a(dim), dest(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      x[k] = rng.uniform(box.lower[k], box.upper[k]);
      y[k] = rng.uniform(box.lower[k], box.upper[k]);
      a[k] = rng.uniform(box.lower[k], box.upper[k]);
      dest[k] = rng.uniform(box.lower[k], box.upper[k]);
    }
    firefly::FireflyParams p;
    p.alpha0 = rng.uniform(0.1, 2);
    p.beta = rng.uniform(0, 0.001);
    p.j_step = rng.uniform(0, 1);
    p.k_step = rng.uniform(0, 1);
    const auto unit = draw(rng, dim, 0, 1);
    std::vector<double> eta(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      eta[k] = (unit[k] - 0.5) * (box.upper[k] - box.lower[k]) / 10.0;
    }
    const auto s_want =
        oracle::firefly_move(x, y, a, p.alpha0, p.beta, p.j_step, 0.0, eta, box.lower, box.upper);
    const auto i_want = oracle::firefly_move(x, y, a, p.alpha0, p.beta, p.j_step, p.k_step, eta,
                                             box.lower, box.upper);
    const auto s_got = firefly::move_standard(x, y, box, p, unit);
    const auto i_got = firefly::move_improved(x, y, a, box, p, unit);

    const double r1 = rng.uniform(0, 2);
    const auto r2 = draw(rng, dim, 0, 2 * oracle::pi), r3 = draw(rng, dim, 0, 2),
               r4 = draw(rng, dim, 0, 1);
    const auto c_want = oracle::sca_move(x, dest, r1, r2, r3, r4, box.lower, box.upper);
    const auto c_got = sca::sca_step(x, dest, r1, r2, r3, r4, box);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!close_rel(s_got[k], s_want[k], 1e-12) || !close_rel(i_got[k], i_want[k], 1e-12) ||
          !close_rel(c_got[k], c_want[k], 1e-12)) {
        ++bad;
        break;
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(bad) + "/1000 inputs outside rel 1e-12 (move_standard, "
                                   "move_improved, sca_step)";
  return o;
}

// 4. Full-scale calibration against uniform random search.
Outcome optimizer_sanity()
{
  Outcome o;
  OptimizerConfig c;  // population 20, 500 iterations, composite, logistic
  const std::size_t budget = c.population * (1 + c.max_iter);
  std::ostringstream d;
  struct Target
  {
    std::size_t id;
    double (*f)(const std::vector<double>&);
    double bound;
  };
  for (const Target& t : {Target{6, oracle::sphere, 100.0}, Target{1, oracle::ackley, 30.0},
                          Target{10, oracle::rastrigin, 200.0}}) {
    const auto problem = objectives::make_benchmark(objectives::BenchmarkId(t.id), 20);
    std::vector<double> ours, random;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      c.seed = seed;
      ours.push_back(optimize(problem, c).best_fitness);
      random.push_back(oracle::random_search(t.f, 20, -t.bound, t.bound, budget,
                                             static_cast<unsigned>(seed + 1000)));
    }
    const double mo = oracle::median(ours), mr = oracle::median(random);
    d << problem.name << " median " << mo << " vs random " << mr << "; ";
    if (!(mo < mr)) {
      o.pass = false;
    }
    if (t.id == 6 && !(mo < 1e-2)) {
      o.pass = false;
      d << "(sphere median must be < 1e-2) ";
    }
  }
  o.detail = d.str();
  return o;
}

const std::vector<Problem>& smoke_problems()
{
  static const std::vector<Problem> p = {
      objectives::make_benchmark(objectives::BenchmarkId(1), 20),
      objectives::make_benchmark(objectives::BenchmarkId(10), 20),
      engineering::make_welded_beam(),
  };
  return p;
}

const std::vector<chaos::MapKind> kSmokeMaps = {chaos::MapKind::Logistic, chaos::MapKind::Circle};

// 5. Monotone curves and exact evaluation counts on the smoke grid.
Outcome monotone_budgets()
{
  Outcome o;
  std::size_t runs = 0, bad = 0;
  for (const auto& p : smoke_problems()) {
    for (Variant v : single_variants()) {
      for (auto m : kSmokeMaps) {
        OptimizerConfig c;
        c.variant = v;
        c.map = m;
        c.seed = runs;
        const auto r = optimize(p, c);
        ++runs;
        bool ok = r.evals == c.population * (1 + c.max_iter) &&
                  r.best_curve.size() == c.max_iter + 1 && r.best_fitness == r.best_curve.back();
        for (std::size_t t = 1; ok && t < r.best_curve.size(); ++t) {
          ok = r.best_curve[t] <= r.best_curve[t - 1];
        }
        bad += ok ? 0 : 1;
      }
    }
  }
  o.pass = runs == 30 && bad == 0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(bad) + " violations";
  return o;
}

// 6. Engineering designs under feasibility rules, best of ten seeds.
Outcome engineering_feasibility()
{
  Outcome o;
  std::ostringstream d;
  struct Target
  {
    const char* name;
    double bound;
  };
  for (const Target& t : {Target{"welded_beam", 2.0}, Target{"pressure_vessel", 7000.0},
                          Target{"spring", 0.025}}) {
    const auto problem = *engineering::make_engineering(t.name);
    OptimizerConfig c;
    double best = INFINITY;
    std::size_t feasible = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      c.seed = seed;
      const auto r = optimize(problem, c);
      const auto e = problem.evaluate(r.best_position);
      if (total_violation(e.constraints) == 0.0) {
        ++feasible;
        best = std::min(best, e.objective);
      }
    }
    d << t.name << " best " << best << " (<= " << t.bound << "), " << feasible << "/10 feasible; ";
    if (!(best <= t.bound)) {
      o.pass = false;
    }
  }
  o.detail = d.str();
  return o;
}

// 7. Exact rank-sum p-values and the signed-rank total.
Outcome wilcoxon_exactness()
{
  Outcome o;
  Rng rng(77);
  double worst = 0.0;
  std::size_t shapes = 0;
  for (std::size_t total = 2; total <= 8; ++total) {
    for (std::size_t na = 1; na < total; ++na) {
      ++shapes;
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = draw(rng, na, 0, 1), b = draw(rng, total - na, 0, 1);
        const double got = analysis::wilcoxon_rank_sum(a, b).p_value;
        worst = std::max(worst, std::fabs(got - oracle::rank_sum_p(a, b)));
      }
    }
  }
  std::size_t bad_sums = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.index(40);
    const auto a = draw(rng, n, -1, 1), b = draw(rng, n, -1, 1);
    const auto r = analysis::wilcoxon_signed_rank(a, b);
    const double m = static_cast<double>(n);
    if (std::fabs(r.r_plus + r.r_minus - m * (m + 1) / 2) > 1e-9) {
      ++bad_sums;
    }
  }
  o.pass = worst <= 1e-12 && bad_sums == 0;
  std::ostringstream d;
  d << shapes << " shapes, max |p - p_perm| " << worst << " (tol 1e-12); " << bad_sums
    << "/1000 signed-rank totals off";
  o.detail = d.str();
  return o;
}

std::string strip_wall_time(const std::string& line)
{
  static const std::regex wall(R"(,"wall_time":[^,}]*)");
  return std::regex_replace(line, wall, "");
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 8. Two identical cmd_run invocations.
Outcome determinism()
{
  Outcome o;
  const fs::path root = fs::temp_directory_path() / ("cscf-accept-" + std::to_string(::getpid()));
  fs::remove_all(root);
  cli::ExperimentSpec spec;
  spec.problems = {"ackley", "rastrigin", "welded_beam"};
  spec.variants = single_variants();
  spec.maps = kSmokeMaps;
  spec.base_seed = 11;
  std::ostringstream log;
  spec.out_dir = root / "a";
  cli::cmd_run(spec, log);
  spec.out_dir = root / "b";
  spec.jobs = 4;
  cli::cmd_run(spec, log);

  std::size_t files = 0, differ = 0;
  for (const auto& e : fs::directory_iterator(root / "a" / "records")) {
    const auto other = root / "b" / "records" / e.path().filename();
    ++files;
    if (!fs::exists(other) || strip_wall_time(slurp(e.path())) != strip_wall_time(slurp(other))) {
      ++differ;
    }
  }
  for (const auto& e : fs::directory_iterator(root / "a" / "curves")) {
    if (slurp(e.path()) != slurp(root / "b" / "curves" / e.path().filename())) {
      ++differ;
    }
  }
  fs::remove_all(root);
  o.pass = files == 30 && differ == 0;
  o.detail = std::to_string(files) + " record files compared, " + std::to_string(differ) +
             " differ beyond wall_time";
  return o;
}

// 9. Sweep shape over the three design problems.
Outcome sweep_shape()
{
  Outcome o;
  std::vector<Problem> problems;
  for (auto name : engineering::engineering_names()) {
    problems.push_back(*engineering::make_engineering(name));
  }
  const auto variants = single_variants();
  const auto& maps = chaos::all_map_kinds();
  OptimizerConfig base;
  const auto res = variant_sweep(problems, variants, maps, 1, base);
  bool finite = true;
  for (const auto& cell : res.cells) {
    finite = finite && std::isfinite(cell.mae) && cell.mae >= 0.0;
  }
  o.pass = res.cells.size() == 180 && res.ranking.size() == 5 && finite;
  std::ostringstream d;
  d << res.cells.size() << " cells, " << res.ranking.size() << " ranked variants";
  if (!res.ranking.empty()) {
    d << ", top " << to_string(res.ranking[0].variant) << " with "
      << chaos::to_string(res.ranking[0].best_map);
  }
  o.detail = d.str();
  return o;
}

}  // namespace

int main()
{
  struct Criterion
  {
    const char* name;
    double time_limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"chaos conformance", 1.0, chaos_conformance},
      {"benchmark minima", 1.0, benchmark_minima},
      {"kernel oracle equivalence", 0.0, kernel_oracles},
      {"optimizer sanity at full scale", 30.0, optimizer_sanity},
      {"monotone curves and exact budgets", 120.0, monotone_budgets},
      {"engineering feasibility", 60.0, engineering_feasibility},
      {"wilcoxon exactness", 0.0, wilcoxon_exactness},
      {"determinism", 0.0, determinism},
      {"variant sweep shape", 0.0, sweep_shape},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs >= c.time_limit) {
      out.pass = false;
      out.detail += " [over time limit " + std::to_string(c.time_limit) + " s]";
    }
    failures += out.pass ? 0 : 1;
    std::printf("AC%zu %s  %s: %s (%.2f s)\n", i + 1, out.pass ? "PASS" : "FAIL", c.name,
                out.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
