// Command-line front end: run experiments, build reports, list problems and maps.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cscf/error.hpp"
#include "cscf/experiment.hpp"

namespace
{

enum ExitCode : int
{
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kIo = 3,
  kFailure = 4,
  kEmpty = 5,
};

int exit_code_for(cscf::ErrorKind kind)
{
  switch (kind) {
    case cscf::ErrorKind::ConfigError:
    case cscf::ErrorKind::DimensionMismatch:
    case cscf::ErrorKind::SeedOutOfRange:
    case cscf::ErrorKind::FixedPointSeed:
      return kConfig;
    case cscf::ErrorKind::IoError:
      return kIo;
    case cscf::ErrorKind::EmptyInput:
      return kEmpty;
    default:
      return kFailure;
  }
}

std::string default_out_dir()
{
  if (const char* env = std::getenv(cscf::cli::kOutputEnv); env && *env) {
    return env;
  }
  return "cscf-out";
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Chaotic firefly / sine-cosine hybrid optimizer"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run optimizer jobs and write records");
  std::string config_path;
  std::vector<std::string> problems;
  std::string algos, variants, maps, dims;
  std::size_t pop = 0, iters = 0, trial_limit = 0, replicates = 0, jobs = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string penalty_mode;
  double penalty_weight = 0.0;
  bool force = false;

  run->add_option("--config", config_path, "INI file; flags given on the command line win")
      ->check(CLI::ExistingFile);
  auto* o_problem = run->add_option("--problem,--problems", problems,
                                    "Names, fnA..fnB ranges or 'all'")
                        ->delimiter(',');
  auto* o_algo = run->add_option("--algo", algos, "ff, iff, sca, cscf (comma list)");
  auto* o_variant = run->add_option("--variant", variants, "i, ii, iii, iv, v, all (comma list)");
  auto* o_map = run->add_option("--map", maps, "Chaotic map names or 'all'");
  auto* o_dim = run->add_option("--dim,--dims", dims, "Dimensions (comma list)");
  auto* o_pop = run->add_option("--pop", pop, "Population size");
  auto* o_iters = run->add_option("--iters", iters, "Iterations");
  auto* o_trial = run->add_option("--trial-limit", trial_limit, "Stagnation limit before SCA");
  auto* o_seed = run->add_option("--seed", seed, "Base seed; replicate r uses seed + r");
  auto* o_reps = run->add_option("--replicates", replicates, "Independent runs per cell");
  auto* o_jobs = run->add_option("--jobs", jobs, "Parallel jobs");
  auto* o_out = run->add_option("--out", out_dir, "Output directory (default $CSCF_OUT_DIR)");
  auto* o_penalty = run->add_option("--penalty", penalty_mode,
                                    "feasibility-rules or static-penalty");
  auto* o_weight = run->add_option("--penalty-weight", penalty_weight, "Static penalty weight");
  run->add_flag("--force", force, "Overwrite existing records");

  // report
  auto* report = app.add_subcommand("report", "Summarize records into comparison tables");
  std::string report_in, report_out;
  report->add_option("--in", report_in, "Run directory (default $CSCF_OUT_DIR)");
  report->add_option("--out", report_out, "Report directory (default <in>/report)");

  auto* list_problems = app.add_subcommand("list-problems", "List benchmark and design problems");
  auto* list_maps = app.add_subcommand("list-maps", "List chaotic maps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*list_problems) {
      std::cout << cscf::cli::list_problems();
      return kOk;
    }
    if (*list_maps) {
      std::cout << cscf::cli::list_maps();
      return kOk;
    }
    if (*report) {
      const std::filesystem::path in = report_in.empty() ? default_out_dir() : report_in;
      const std::filesystem::path out = report_out.empty() ? in / "report" : std::filesystem::path(report_out);
      const auto summary = cscf::cli::cmd_report(in, out, std::cerr);
      std::cerr << summary.records << " record(s), " << summary.corrupt_lines
                << " corrupt line(s), " << summary.files.size() << " file(s) in "
                << out.string() << "\n";
      return kOk;
    }

    cscf::cli::ExperimentSpec spec;
    spec.out_dir = default_out_dir();
    if (!config_path.empty()) {
      spec = cscf::cli::load_config(config_path, spec);
    }
    if (o_problem->count()) spec.problems = problems;
    if (o_algo->count()) spec.algorithms = cscf::cli::parse_algorithms(algos);
    if (o_variant->count()) spec.variants = cscf::cli::parse_variants(variants);
    if (o_map->count()) spec.maps = cscf::cli::parse_maps(maps);
    if (o_dim->count()) spec.dims = cscf::cli::parse_dims(dims);
    if (o_pop->count()) spec.population = pop;
    if (o_iters->count()) spec.max_iter = iters;
    if (o_trial->count()) spec.trial_limit = trial_limit;
    if (o_seed->count()) spec.base_seed = seed;
    if (o_reps->count()) spec.replicates = replicates;
    if (o_jobs->count()) spec.jobs = jobs;
    if (o_out->count()) spec.out_dir = out_dir;
    if (o_penalty->count()) spec.penalty.mode = cscf::cli::parse_penalty_mode(penalty_mode);
    if (o_weight->count()) spec.penalty.weight = penalty_weight;
    if (force) spec.force = true;

    const auto summary = cscf::cli::cmd_run(spec, std::cerr);
    std::cerr << summary.written << " written, " << summary.skipped << " skipped\n";
    return kOk;
  } catch (const cscf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
