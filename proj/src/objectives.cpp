#include "cscf/objectives.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "cscf/error.hpp"

namespace cscf::objectives
{
namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

using X = std::span<const double>;

double ackley(X x, Rng*)
{
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + kE;
}

double griewank(X x, Rng*)
{
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sum += x[k] * x[k];
    prod *= std::cos(x[k] / std::sqrt(static_cast<double>(k + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

double floor_sum(X x, Rng*)
{
  double sum = 30.0;
  for (double v : x) {
    sum += std::floor(v);
  }
  return sum;
}

double sin_log(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    sum += std::sin(10.0 * std::log(v));
  }
  return sum;
}

double quintic(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    const double v2 = v * v;
    sum += std::abs(v2 * v2 * v - 3.0 * v2 * v2 + 4.0 * v2 * v + 2.0 * v2 - 10.0 * v - 4.0);
  }
  return sum;
}

double sphere(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    sum += v * v;
  }
  return sum;
}

double schwefel_1_2(X x, Rng*)
{
  double sum = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    sum += prefix * prefix;
  }
  return sum;
}

double step(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    const double s = std::floor(v + 0.5);
    sum += s * s;
  }
  return sum;
}

double sine_root(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    sum += -v * std::sin(std::sqrt(std::abs(v)));
  }
  return sum;
}

double rastrigin(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    sum += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  }
  return sum;
}

double six_hump_camel(X x, Rng*)
{
  const double a = x[0];
  const double b = x[1];
  const double a2 = a * a;
  const double b2 = b * b;
  return 4.0 * a2 - 2.1 * a2 * a2 + a2 * a2 * a2 / 3.0 + a * b - 4.0 * b2 + 4.0 * b2 * b2;
}

double goldstein_price(X x, Rng*)
{
  const double a = x[0];
  const double b = x[1];
  const double s = a + b + 1.0;
  const double t = 2.0 * a - 3.0 * b;
  const double left =
      1.0 + s * s * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double right =
      30.0 + t * t * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
  return left * right;
}

constexpr std::array<std::array<double, 4>, 10> kShekelA = {{
    {4, 4, 4, 4},
    {1, 1, 1, 1},
    {8, 8, 8, 8},
    {6, 6, 6, 6},
    {3, 7, 3, 7},
    {2, 9, 2, 9},
    {5, 5, 3, 3},
    {8, 1, 8, 1},
    {6, 2, 6, 2},
    {7, 3.6, 7, 3.6},
}};
constexpr std::array<double, 10> kShekelC = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

double shekel(X x, Rng*)
{
  double sum = 0.0;
  for (std::size_t i = 0; i < kShekelA.size(); ++i) {
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double diff = x[k] - kShekelA[i][k];
      d += diff * diff;
    }
    sum -= 1.0 / (d + kShekelC[i]);
  }
  return sum;
}

double quartic_noise(X x, Rng* noise)
{
  if (noise == nullptr) {
    throw Error(ErrorKind::ConfigError, "quartic_noise requires an injected noise stream");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double v2 = x[k] * x[k];
    sum += static_cast<double>(k + 1) * v2 * v2;
  }
  return sum + noise->uniform01();
}

double schwefel_2_26(X x, Rng*)
{
  double sum = 0.0;
  for (double v : x) {
    sum += -v * std::sin(std::sqrt(std::abs(v)));
  }
  return sum;
}

double max_abs(X x, Rng*)
{
  double m = 0.0;
  for (double v : x) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double rosenbrock(X x, Rng*)
{
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    const double a = x[k + 1] - x[k] * x[k];
    const double b = x[k] - 1.0;
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

constexpr std::array<double, 4> kHartmannAlpha = {1.0, 1.2, 3.0, 3.2};
constexpr std::array<std::array<double, 6>, 4> kHartmannA = {{
    {10, 3, 17, 3.5, 1.7, 8},
    {0.05, 10, 17, 0.1, 8, 14},
    {3, 3.5, 1.7, 10, 17, 8},
    {17, 8, 0.05, 10, 0.1, 14},
}};
constexpr std::array<std::array<double, 6>, 4> kHartmannP = {{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381},
}};

double hartmann6(X x, Rng*)
{
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < 6; ++j) {
      const double d = x[j] - kHartmannP[i][j];
      inner += kHartmannA[i][j] * d * d;
    }
    sum -= kHartmannAlpha[i] * std::exp(-inner);
  }
  return sum;
}

double penalized1(X x, Rng*)
{
  const std::size_t n = x.size();
  auto y = [&](std::size_t k) { return 1.0 + (x[k] + 1.0) / 4.0; };
  const double s1 = std::sin(kPi * y(0));
  double body = 10.0 * s1 * s1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double d = y(k) - 1.0;
    const double s = std::sin(kPi * y(k + 1));
    body += d * d * (1.0 + 10.0 * s * s);
  }
  const double last = y(n - 1) - 1.0;
  body += last * last;
  double pen = 0.0;
  for (double v : x) {
    pen += u_penalty(v, 10.0, 100.0, 4.0);
  }
  return kPi / static_cast<double>(n) * body + pen;
}

double penalized2(X x, Rng*)
{
  const std::size_t n = x.size();
  const double s1 = std::sin(3.0 * kPi * x[0]);
  double body = s1 * s1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double d = x[k] - 1.0;
    const double s = std::sin(3.0 * kPi * x[k + 1]);
    body += d * d * (1.0 + s * s);
  }
  const double last = x[n - 1] - 1.0;
  const double sl = std::sin(2.0 * kPi * x[n - 1]);
  body += last * last * (1.0 + sl * sl);
  double pen = 0.0;
  for (double v : x) {
    pen += u_penalty(v, 5.0, 100.0, 4.0);
  }
  return 0.1 * body + pen;
}

struct Row
{
  std::string_view name;
  double (*fn)(X, Rng*);
  double lo;
  double hi;
  std::size_t fixed_dim;  // 0 = follows the requested dimension
};

constexpr std::array<Row, kBenchmarkCount> kRows = {{
    {"ackley", ackley, -30.0, 30.0, 0},
    {"griewank", griewank, -600.0, 600.0, 0},
    {"floor_sum", floor_sum, -5.12, 5.12, 0},
    {"sin_log", sin_log, 0.25, 10.0, 0},
    {"quintic", quintic, -10.0, 10.0, 0},
    {"sphere", sphere, -100.0, 100.0, 0},
    {"schwefel_1_2", schwefel_1_2, -100.0, 100.0, 0},
    {"step", step, -10.0, 10.0, 0},
    {"sine_root", sine_root, -5.12, 5.12, 0},
    {"rastrigin", rastrigin, -200.0, 200.0, 0},
    {"six_hump_camel", six_hump_camel, -5.0, 5.0, 2},
    {"goldstein_price", goldstein_price, -3.0, 3.0, 2},
    {"shekel", shekel, 0.0, 20.0, 4},
    {"quartic_noise", quartic_noise, -1.28, 1.28, 0},
    {"schwefel_2_26", schwefel_2_26, -500.0, 500.0, 0},
    {"max_abs", max_abs, -600.0, 600.0, 0},
    {"rosenbrock", rosenbrock, -30.0, 30.0, 0},
    {"hartmann6", hartmann6, 0.0, 1.0, 6},
    {"penalized1", penalized1, -50.0, 50.0, 0},
    {"penalized2", penalized2, -50.0, 50.0, 0},
}};

// Known optimum for the given dimension; nullopt where none is established.
std::optional<double> reference_of(std::size_t index, std::size_t dim)
{
  const double d = static_cast<double>(dim);
  switch (index) {
    case 3: return 30.0 - 6.0 * d;
    case 4: return -d;
    case 9: return d * (-5.12 * std::sin(std::sqrt(5.12)));
    case 11: return -1.0316284534898774;
    case 12: return 3.0;
    case 13: return -10.536409816692046;
    case 15: return -418.98288727243379 * d;
    case 18: return -3.3223680114155156;
    default: return 0.0;
  }
}

std::optional<double> published_of(std::size_t index, std::size_t dim)
{
  const double d = static_cast<double>(dim);
  switch (index) {
    case 3: return -6.0 * d + 30.0;
    case 4: return -d;
    case 8: return -3.214;
    case 11: return -1.6428;
    case 12: return 3.0;
    case 13: return -10.4673;
    case 16: return 1.0;
    case 17: return -209.0;
    case 18: return -3.33;
    default: return 0.0;
  }
}

}  // namespace

BenchmarkId::BenchmarkId(std::size_t index) : index_(index)
{
  if (index < 1 || index > kBenchmarkCount) {
    std::ostringstream msg;
    msg << "benchmark index " << index << " outside 1.." << kBenchmarkCount;
    throw Error(ErrorKind::ConfigError, msg.str());
  }
}

std::string_view name_of(BenchmarkId id) noexcept
{
  return kRows[id.index() - 1].name;
}

std::optional<BenchmarkId> parse_benchmark(std::string_view name) noexcept
{
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    if (kRows[i].name == name || "fn" + std::to_string(i + 1) == name) {
      return BenchmarkId(i + 1);
    }
  }
  return std::nullopt;
}

Problem make_benchmark(BenchmarkId id, std::size_t dim)
{
  const Row& row = kRows[id.index() - 1];
  const std::size_t n = row.fixed_dim != 0 ? row.fixed_dim : dim;
  if (n == 0) {
    throw Error(ErrorKind::ConfigError, "benchmark dimension must be positive");
  }
  Problem p;
  p.name = std::string(row.name);
  p.label = "fn" + std::to_string(id.index());
  p.bounds = Bounds::uniform(n, row.lo, row.hi);
  p.reference = reference_of(id.index(), n);
  p.published = published_of(id.index(), n);
  p.fixed_dim = row.fixed_dim != 0;
  p.noisy = id.index() == 14;
  p.objective = row.fn;
  return p;
}

std::vector<Problem> suite(std::size_t dim)
{
  std::vector<Problem> out;
  out.reserve(kBenchmarkCount);
  for (std::size_t i = 1; i <= kBenchmarkCount; ++i) {
    out.push_back(make_benchmark(BenchmarkId(i), dim));
  }
  return out;
}

Evaluation evaluate(BenchmarkId id, std::span<const double> x, Rng* noise)
{
  return make_benchmark(id, x.size()).evaluate(x, noise);
}

double u_penalty(double x, double a, double k, double m) noexcept
{
  if (x > a) {
    return k * std::pow(x - a, m);
  }
  if (x < -a) {
    return k * std::pow(-x - a, m);
  }
  return 0.0;
}

}  // namespace cscf::objectives
