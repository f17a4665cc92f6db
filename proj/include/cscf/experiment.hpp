#pragma once

/// Batch experiment execution and reporting behind the command-line tool.
///
/// Output layout under the run directory:
///   records/<stem>.jsonl   one RunRecord per file, one JSON line
///   curves/<stem>.csv      iteration,best_fitness
/// where <stem> is problem_d<dim>_<algo>[_<variant>_<map>]_r<replicate>.
/// Replicate r of every job uses seed base_seed + r.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cscf/chaos.hpp"
#include "cscf/optimizer.hpp"

namespace cscf::cli
{

/// Environment variable holding the default output root.
inline constexpr const char* kOutputEnv = "CSCF_OUT_DIR";

struct ExperimentSpec
{
  std::vector<std::string> problems;
  std::vector<Algorithm> algorithms = {Algorithm::Cscf};
  std::vector<Variant> variants = {Variant::AllChaotic};
  std::vector<chaos::MapKind> maps = {chaos::MapKind::Logistic};
  std::vector<std::size_t> dims = {20};
  std::size_t replicates = 1;
  std::uint64_t base_seed = 0;
  std::filesystem::path out_dir = "cscf-out";
  std::size_t jobs = 1;
  bool force = false;

  std::size_t population = 20;
  std::size_t max_iter = 500;
  std::size_t trial_limit = 10;
  firefly::FireflyParams firefly;
  sca::ScaParams sca;
  PenaltyParams penalty;
};

struct Job
{
  std::string problem;  // canonical name
  std::size_t dim = 0;
  OptimizerConfig config;
  std::size_t replicate = 0;

  [[nodiscard]] std::string stem() const;
};

/// Expands "fnA..fnB" ranges and "all" (the twenty benchmarks) and checks
/// every name. Throws Error{ConfigError}.
std::vector<std::string> expand_problem_selectors(const std::vector<std::string>& selectors);

/// Benchmark or engineering problem by name. Throws Error{ConfigError}.
Problem resolve_problem(const std::string& name, std::size_t dim);

/// Full cross product; fixed-dimension problems appear once per distinct
/// natural dimension. Throws Error{ConfigError}.
std::vector<Job> expand_jobs(const ExperimentSpec& spec);

struct RunSummary
{
  std::size_t written = 0;
  std::size_t skipped = 0;  // existing records kept because force was off
};

/// Runs every job, up to spec.jobs at a time. Throws Error on configuration
/// or I/O failure and propagates Error{NonFiniteResult}.
RunSummary cmd_run(const ExperimentSpec& spec, std::ostream& log);

struct ReportSummary
{
  std::size_t records = 0;
  std::size_t corrupt_lines = 0;
  bool wilcoxon_written = false;
  std::vector<std::filesystem::path> files;
};

/// Reads every records/*.jsonl (or *.jsonl directly in `input`) and writes
/// the comparison tables into `output`. Throws Error{EmptyInput} when no
/// record lines exist and Error{IoError} when every line is corrupt.
ReportSummary cmd_report(const std::filesystem::path& input, const std::filesystem::path& output,
                         std::ostream& log);

/// Reads an INI file with sections [problem], [algorithm], [variant],
/// [chaos], [penalty], [experiment] on top of `base`. Throws
/// Error{ConfigError} or Error{IoError}.
ExperimentSpec load_config(const std::filesystem::path& path, ExperimentSpec base = {});

/// Parses comma-separated selector lists. Throw Error{ConfigError}.
std::vector<Algorithm> parse_algorithms(const std::string& csv);
std::vector<Variant> parse_variants(const std::string& csv);
std::vector<chaos::MapKind> parse_maps(const std::string& csv);
std::vector<std::size_t> parse_dims(const std::string& csv);
PenaltyMode parse_penalty_mode(const std::string& s);

std::string list_problems();
std::string list_maps();

}  // namespace cscf::cli
