#include "cscf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "cscf/analysis.hpp"
#include "cscf/engineering.hpp"
#include "cscf/error.hpp"
#include "cscf/objectives.hpp"
#include "cscf/record_io.hpp"

namespace cscf::cli
{
namespace fs = std::filesystem;

namespace
{

std::vector<std::string> split_csv(const std::string& csv)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) {
      out.push_back(item.substr(first, last - first + 1));
    }
  }
  return out;
}

std::size_t parse_count(const std::string& s, const char* what)
{
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) {
      throw std::invalid_argument(s);
    }
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigError, std::string("invalid ") + what + " '" + s + "'");
  }
}

double parse_real(const std::string& s, const char* what)
{
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigError, std::string("invalid ") + what + " '" + s + "'");
  }
}

bool parse_bool(const std::string& s)
{
  if (s == "true" || s == "1" || s == "yes") {
    return true;
  }
  if (s == "false" || s == "0" || s == "no") {
    return false;
  }
  throw Error(ErrorKind::ConfigError, "invalid boolean '" + s + "'");
}

std::string csv_row(std::initializer_list<std::string> cells)
{
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) {
      out += ',';
    }
    out += c;
    first = false;
  }
  out += '\n';
  return out;
}

std::string fmt(double v)
{
  return io::format_double(v);
}
std::string fmt(std::size_t v)
{
  return std::to_string(v);
}
std::string fmt(bool v)
{
  return v ? "yes" : "no";
}

}  // namespace

std::string Job::stem() const
{
  std::ostringstream s;
  s << problem << "_d" << dim << "_" << to_string(config.algorithm);
  if (config.algorithm == Algorithm::Cscf) {
    s << "_" << to_string(config.variant) << "_" << chaos::to_string(config.map);
  }
  s << "_r" << replicate;
  return s.str();
}

std::vector<std::string> expand_problem_selectors(const std::vector<std::string>& selectors)
{
  std::vector<std::string> out;
  auto push = [&](std::string name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(std::move(name));
    }
  };
  for (const auto& sel : selectors) {
    if (sel == "all") {
      for (std::size_t i = 1; i <= objectives::kBenchmarkCount; ++i) {
        push(std::string(objectives::name_of(objectives::BenchmarkId(i))));
      }
      continue;
    }
    if (const auto dots = sel.find(".."); dots != std::string::npos) {
      const auto lo = objectives::parse_benchmark(sel.substr(0, dots));
      const auto hi = objectives::parse_benchmark(sel.substr(dots + 2));
      if (!lo || !hi || lo->index() > hi->index()) {
        throw Error(ErrorKind::ConfigError, "invalid problem range '" + sel + "'");
      }
      for (std::size_t i = lo->index(); i <= hi->index(); ++i) {
        push(std::string(objectives::name_of(objectives::BenchmarkId(i))));
      }
      continue;
    }
    if (const auto id = objectives::parse_benchmark(sel)) {
      push(std::string(objectives::name_of(*id)));
    } else if (engineering::make_engineering(sel)) {
      push(sel);
    } else {
      throw Error(ErrorKind::ConfigError, "unknown problem '" + sel + "'");
    }
  }
  return out;
}

Problem resolve_problem(const std::string& name, std::size_t dim)
{
  if (const auto id = objectives::parse_benchmark(name)) {
    return objectives::make_benchmark(*id, dim);
  }
  if (auto p = engineering::make_engineering(name)) {
    return std::move(*p);
  }
  throw Error(ErrorKind::ConfigError, "unknown problem '" + name + "'");
}

std::vector<Job> expand_jobs(const ExperimentSpec& spec)
{
  if (spec.problems.empty()) {
    throw Error(ErrorKind::ConfigError, "no problem selected");
  }
  if (spec.algorithms.empty() || spec.dims.empty() || spec.replicates == 0) {
    throw Error(ErrorKind::ConfigError, "algorithms, dims and replicates must be non-empty");
  }
  OptimizerConfig base;
  base.population = spec.population;
  base.max_iter = spec.max_iter;
  base.trial_limit = spec.trial_limit;
  base.firefly = spec.firefly;
  base.sca = spec.sca;
  base.penalty = spec.penalty;
  base.validate();

  std::vector<Job> jobs;
  for (const auto& name : expand_problem_selectors(spec.problems)) {
    std::set<std::size_t> seen;
    for (std::size_t requested : spec.dims) {
      const Problem problem = resolve_problem(name, requested);
      if (!seen.insert(problem.dim()).second) {
        continue;
      }
      for (Algorithm algo : spec.algorithms) {
        std::vector<std::pair<Variant, chaos::MapKind>> arms;
        if (algo == Algorithm::Cscf) {
          if (spec.variants.empty() || spec.maps.empty()) {
            throw Error(ErrorKind::ConfigError, "cscf needs at least one variant and map");
          }
          for (Variant v : spec.variants) {
            for (chaos::MapKind m : spec.maps) {
              arms.emplace_back(v, m);
            }
          }
        } else {
          arms.emplace_back(Variant::AllChaotic, chaos::MapKind::Logistic);
        }
        for (const auto& [variant, map] : arms) {
          for (std::size_t r = 0; r < spec.replicates; ++r) {
            Job job;
            job.problem = name;
            job.dim = problem.dim();
            job.config = base;
            job.config.algorithm = algo;
            job.config.variant = variant;
            job.config.map = map;
            job.config.seed = spec.base_seed + r;
            job.replicate = r;
            jobs.push_back(std::move(job));
          }
        }
      }
    }
  }
  return jobs;
}

RunSummary cmd_run(const ExperimentSpec& spec, std::ostream& log)
{
  const std::vector<Job> jobs = expand_jobs(spec);
  const fs::path records = spec.out_dir / "records";
  const fs::path curves = spec.out_dir / "curves";

  RunSummary summary;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      {
        std::lock_guard lock(mu);
        if (failure) {
          return;
        }
      }
      const Job& job = jobs[i];
      const fs::path record_path = records / (job.stem() + ".jsonl");
      try {
        if (!spec.force && fs::exists(record_path)) {
          std::lock_guard lock(mu);
          ++summary.skipped;
          log << "skip " << job.stem() << " (exists; use --force to overwrite)\n";
          continue;
        }
        const RunRecord rec = optimize(resolve_problem(job.problem, job.dim), job.config);
        io::write_atomic(record_path, io::to_json_line(rec) + "\n");
        io::write_atomic(curves / (job.stem() + ".csv"), io::curve_csv(rec));
        std::lock_guard lock(mu);
        ++summary.written;
        log << "done " << job.stem() << " best=" << io::format_double(rec.best_fitness) << "\n";
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(spec.jobs, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return summary;
}

namespace
{

struct ProblemKey
{
  std::string problem;
  std::size_t dim;
  auto operator<=>(const ProblemKey&) const = default;
};

std::vector<RunRecord> read_records(const fs::path& input, std::size_t& corrupt, std::ostream& log)
{
  const fs::path dir = fs::is_directory(input / "records") ? input / "records" : input;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorKind::IoError, "not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<RunRecord> out;
  std::size_t lines = 0;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      ++lines;
      try {
        out.push_back(io::from_json_line(line));
      } catch (const Error& e) {
        ++corrupt;
        log << "warning: " << f.filename().string() << ":" << lineno << " skipped (" << e.what()
            << ")\n";
      }
    }
  }
  if (lines == 0) {
    throw Error(ErrorKind::EmptyInput, "no records found in " + dir.string());
  }
  if (out.empty()) {
    throw Error(ErrorKind::IoError, "all " + std::to_string(corrupt) + " record lines are corrupt");
  }
  if (corrupt > 0) {
    log << "warning: " << corrupt << " corrupt record line(s) skipped\n";
  }
  return out;
}

}  // namespace

ReportSummary cmd_report(const fs::path& input, const fs::path& output, std::ostream& log)
{
  ReportSummary summary;
  const std::vector<RunRecord> records = read_records(input, summary.corrupt_lines, log);
  summary.records = records.size();

  std::map<ProblemKey, std::map<std::string, std::vector<RunRecord>>> grouped;
  for (const auto& r : records) {
    grouped[{r.problem, r.dim}][r.algorithm_label()].push_back(r);
  }

  auto emit = [&](const std::string& name, const std::string& content) {
    const fs::path p = output / name;
    io::write_atomic(p, content);
    summary.files.push_back(p);
  };

  // Summary statistics (mean, std, best, worst) per problem and algorithm.
  std::string summary_csv = csv_row({"problem", "dim", "algorithm", "n", "mean", "std", "best",
                                     "worst", "mae", "mean_wall_time"});
  std::string summary_jsonl;
  for (const auto& [key, by_algo] : grouped) {
    for (const auto& [label, recs] : by_algo) {
      std::vector<double> vals;
      double wall = 0.0;
      for (const auto& r : recs) {
        vals.push_back(r.best_fitness);
        wall += r.wall_time;
      }
      const auto s = analysis::summarize(vals);
      const auto ref = recs.front().reference;
      const std::string mae = ref ? fmt(analysis::mae(vals, *ref)) : "";
      const double mean_wall = wall / static_cast<double>(recs.size());
      summary_csv += csv_row({key.problem, fmt(key.dim), label, fmt(s.n), fmt(s.mean), fmt(s.std),
                              fmt(s.best), fmt(s.worst), mae, fmt(mean_wall)});
      nlohmann::ordered_json j;
      j["problem"] = key.problem;
      j["dim"] = key.dim;
      j["algorithm"] = label;
      j["n"] = s.n;
      j["mean"] = fmt(s.mean);
      j["std"] = fmt(s.std);
      j["best"] = fmt(s.best);
      j["worst"] = fmt(s.worst);
      j["mean_wall_time"] = mean_wall;
      summary_jsonl += j.dump() + "\n";
    }
  }
  emit("summary.csv", summary_csv);
  emit("summary.jsonl", summary_jsonl);

  // Pairwise rank-sum per problem, then the multi-problem table.
  std::vector<analysis::ComparisonReport> reports;
  std::string rank_sum_csv =
      csv_row({"problem", "dim", "algorithm_a", "algorithm_b", "statistic", "r_plus", "r_minus",
               "p_value", "exact", "p<0.1", "p<0.05", "lower_mean"});
  std::string comparison_jsonl;
  std::size_t single_algorithm_groups = 0;
  for (const auto& [key, by_algo] : grouped) {
    if (by_algo.size() < 2) {
      ++single_algorithm_groups;
      continue;
    }
    auto rep = analysis::compare_report(by_algo, by_algo.begin()->second.front().reference);
    for (const auto& row : rep.pairs) {
      const std::string lower = row.winner < 0 ? row.a : (row.winner > 0 ? row.b : "tie");
      rank_sum_csv += csv_row({key.problem, fmt(key.dim), row.a, row.b, fmt(row.test.statistic),
                               fmt(row.test.r_plus), fmt(row.test.r_minus), fmt(row.test.p_value),
                               fmt(row.test.exact), fmt(row.test.significant_10),
                               fmt(row.test.significant_05), lower});
      nlohmann::ordered_json j;
      j["test"] = "rank_sum";
      j["problem"] = key.problem;
      j["dim"] = key.dim;
      j["algorithm_a"] = row.a;
      j["algorithm_b"] = row.b;
      j["statistic"] = row.test.statistic;
      j["r_plus"] = row.test.r_plus;
      j["r_minus"] = row.test.r_minus;
      j["p_value"] = row.test.p_value;
      j["lower_mean"] = lower;
      comparison_jsonl += j.dump() + "\n";
    }
    reports.push_back(std::move(rep));
  }
  if (reports.empty()) {
    log << "warning: fewer than two algorithms per problem; Wilcoxon tables skipped\n";
  } else {
    if (single_algorithm_groups > 0) {
      log << "warning: " << single_algorithm_groups
          << " problem(s) with a single algorithm left out of the Wilcoxon tables\n";
    }
    std::string multi_csv = csv_row({"algorithm_a", "algorithm_b", "better", "worse", "r_plus",
                                     "r_minus", "p_value", "p<0.1", "p<0.05"});
    for (const auto& row : analysis::compare_across_problems(reports)) {
      if (row.test) {
        multi_csv += csv_row({row.a, row.b, fmt(row.better), fmt(row.worse),
                              fmt(row.test->r_plus), fmt(row.test->r_minus),
                              fmt(row.test->p_value), fmt(row.test->significant_10),
                              fmt(row.test->significant_05)});
      } else {
        multi_csv += csv_row({row.a, row.b, fmt(row.better), fmt(row.worse), "", "", "", "", ""});
      }
      nlohmann::ordered_json j;
      j["test"] = "signed_rank";
      j["algorithm_a"] = row.a;
      j["algorithm_b"] = row.b;
      j["better"] = row.better;
      j["worse"] = row.worse;
      if (row.test) {
        j["r_plus"] = row.test->r_plus;
        j["r_minus"] = row.test->r_minus;
        j["p_value"] = row.test->p_value;
      }
      comparison_jsonl += j.dump() + "\n";
    }
    emit("wilcoxon_rank_sum.csv", rank_sum_csv);
    emit("wilcoxon_multi_problem.csv", multi_csv);
    emit("comparison.jsonl", comparison_jsonl);
    summary.wilcoxon_written = true;
  }

  // Variant x map MAE grid and mean wall time per variant (hybrid runs only).
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<double>> cells;
  std::map<std::string, std::optional<double>> references;
  std::map<std::string, std::pair<double, std::size_t>> wall_by_variant;
  for (const auto& r : records) {
    if (r.algorithm != "cscf") {
      continue;
    }
    auto& w = wall_by_variant[r.variant];
    w.first += r.wall_time;
    w.second += 1;
    if (r.variant != "all" && r.reference) {
      cells[{r.problem + "_d" + std::to_string(r.dim), r.map, r.variant}].push_back(r.best_fitness);
      references[r.problem + "_d" + std::to_string(r.dim)] = r.reference;
    }
  }
  if (!wall_by_variant.empty()) {
    std::string time_csv = csv_row({"variant", "runs", "mean_wall_time"});
    for (const auto& [v, w] : wall_by_variant) {
      time_csv += csv_row({v, fmt(w.second), fmt(w.first / static_cast<double>(w.second))});
    }
    emit("convergence_time.csv", time_csv);
  }
  if (!cells.empty()) {
    std::vector<SweepCell> sweep;
    std::string grid = csv_row({"problem", "map", "i", "ii", "iii", "iv", "v"});
    std::map<std::pair<std::string, std::string>, std::map<std::string, double>> rows;
    for (const auto& [k, vals] : cells) {
      const auto& [problem, map, variant] = k;
      const double m = analysis::mae(vals, *references[problem]);
      rows[{problem, map}][variant] = m;
      sweep.push_back({problem, *parse_variant(variant), *chaos::parse_map_kind(map), m, vals});
    }
    for (const auto& [pm, by_variant] : rows) {
      std::vector<std::string> line = {pm.first, pm.second};
      for (const char* v : {"i", "ii", "iii", "iv", "v"}) {
        const auto it = by_variant.find(v);
        line.push_back(it == by_variant.end() ? "" : fmt(it->second));
      }
      grid += csv_row({line[0], line[1], line[2], line[3], line[4], line[5], line[6]});
    }
    emit("mae_grid.csv", grid);
    std::string rank_csv = csv_row({"variant", "mean_rank", "best_map", "best_mae"});
    for (const auto& r : rank_variants(sweep)) {
      rank_csv += csv_row({std::string(to_string(r.variant)), fmt(r.mean_rank),
                           std::string(chaos::to_string(r.best_map)), fmt(r.best_mae)});
    }
    emit("variant_ranking.csv", rank_csv);
  }

  // Mean convergence curve per problem and algorithm.
  for (const auto& [key, by_algo] : grouped) {
    for (const auto& [label, recs] : by_algo) {
      std::size_t len = recs.front().best_curve.size();
      for (const auto& r : recs) {
        len = std::min(len, r.best_curve.size());
      }
      std::string csv = "iteration,mean_best_fitness\n";
      for (std::size_t t = 0; t < len; ++t) {
        double sum = 0.0;
        for (const auto& r : recs) {
          sum += r.best_curve[t];
        }
        csv += std::to_string(t) + "," + fmt(sum / static_cast<double>(recs.size())) + "\n";
      }
      emit("curves/" + key.problem + "_d" + std::to_string(key.dim) + "_" + label + ".csv", csv);
    }
  }
  return summary;
}

ExperimentSpec load_config(const fs::path& path, ExperimentSpec spec)
{
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorKind::IoError, std::string("cannot read config: ") + e.what());
  }
  static const std::set<std::string> known_sections = {"problem", "variant", "chaos",
                                                       "algorithm", "penalty", "experiment"};
  for (const auto& [section, body] : tree) {
    if (!known_sections.count(section) || body.empty()) {
      throw Error(ErrorKind::ConfigError, "unknown config section '" + section + "'");
    }
  }
  auto get = [&](const char* key) { return tree.get_optional<std::string>(key); };

  if (auto v = get("problem.problems")) spec.problems = split_csv(*v);
  if (auto v = get("problem.dims")) spec.dims = parse_dims(*v);
  if (auto v = get("algorithm.algos")) spec.algorithms = parse_algorithms(*v);
  if (auto v = get("algorithm.population")) spec.population = parse_count(*v, "population");
  if (auto v = get("algorithm.max_iter")) spec.max_iter = parse_count(*v, "max_iter");
  if (auto v = get("algorithm.trial_limit")) spec.trial_limit = parse_count(*v, "trial_limit");
  if (auto v = get("algorithm.alpha0")) spec.firefly.alpha0 = parse_real(*v, "alpha0");
  if (auto v = get("algorithm.beta")) spec.firefly.beta = parse_real(*v, "beta");
  if (auto v = get("algorithm.j_step")) spec.firefly.j_step = parse_real(*v, "j_step");
  if (auto v = get("algorithm.k_step")) spec.firefly.k_step = parse_real(*v, "k_step");
  if (auto v = get("algorithm.eta_scale")) spec.firefly.eta_scale = parse_real(*v, "eta_scale");
  if (auto v = get("algorithm.a_const")) spec.sca.a_const = parse_real(*v, "a_const");
  if (auto v = get("variant.variants")) spec.variants = parse_variants(*v);
  if (auto v = get("chaos.maps")) spec.maps = parse_maps(*v);
  if (auto v = get("penalty.mode")) spec.penalty.mode = parse_penalty_mode(*v);
  if (auto v = get("penalty.weight")) spec.penalty.weight = parse_real(*v, "penalty weight");
  if (auto v = get("experiment.replicates")) spec.replicates = parse_count(*v, "replicates");
  if (auto v = get("experiment.seed")) spec.base_seed = parse_count(*v, "seed");
  if (auto v = get("experiment.jobs")) spec.jobs = parse_count(*v, "jobs");
  if (auto v = get("experiment.out")) spec.out_dir = *v;
  if (auto v = get("experiment.force")) spec.force = parse_bool(*v);
  return spec;
}

std::vector<Algorithm> parse_algorithms(const std::string& csv)
{
  std::vector<Algorithm> out;
  for (const auto& s : split_csv(csv)) {
    const auto a = parse_algorithm(s);
    if (!a) {
      throw Error(ErrorKind::ConfigError, "unknown algorithm '" + s + "' (ff, iff, sca, cscf)");
    }
    out.push_back(*a);
  }
  return out;
}

std::vector<Variant> parse_variants(const std::string& csv)
{
  std::vector<Variant> out;
  for (const auto& s : split_csv(csv)) {
    const auto v = parse_variant(s);
    if (!v) {
      throw Error(ErrorKind::ConfigError, "unknown variant '" + s + "' (i, ii, iii, iv, v, all)");
    }
    out.push_back(*v);
  }
  return out;
}

std::vector<chaos::MapKind> parse_maps(const std::string& csv)
{
  std::vector<chaos::MapKind> out;
  for (const auto& s : split_csv(csv)) {
    if (s == "all") {
      const auto& kinds = chaos::all_map_kinds();
      out.insert(out.end(), kinds.begin(), kinds.end());
      continue;
    }
    const auto m = chaos::parse_map_kind(s);
    if (!m) {
      throw Error(ErrorKind::ConfigError, "unknown map '" + s + "'");
    }
    out.push_back(*m);
  }
  return out;
}

std::vector<std::size_t> parse_dims(const std::string& csv)
{
  std::vector<std::size_t> out;
  for (const auto& s : split_csv(csv)) {
    const std::size_t d = parse_count(s, "dimension");
    if (d == 0) {
      throw Error(ErrorKind::ConfigError, "dimension must be positive");
    }
    out.push_back(d);
  }
  return out;
}

PenaltyMode parse_penalty_mode(const std::string& s)
{
  if (s == "feasibility-rules") {
    return PenaltyMode::FeasibilityRules;
  }
  if (s == "static-penalty") {
    return PenaltyMode::StaticPenalty;
  }
  throw Error(ErrorKind::ConfigError,
              "unknown penalty mode '" + s + "' (feasibility-rules, static-penalty)");
}

std::string list_problems()
{
  std::ostringstream out;
  for (std::size_t i = 1; i <= objectives::kBenchmarkCount; ++i) {
    const auto p = objectives::make_benchmark(objectives::BenchmarkId(i));
    out << p.label << "\t" << p.name << "\tdim=" << p.dim() << (p.fixed_dim ? " (fixed)" : "")
        << "\t[" << io::format_double(p.bounds.lower[0]) << ", "
        << io::format_double(p.bounds.upper[0]) << "]\n";
  }
  for (auto name : engineering::engineering_names()) {
    const auto p = *engineering::make_engineering(name);
    out << p.label << "\t" << p.name << "\tdim=" << p.dim() << " (fixed)\tconstraints="
        << p.constraint_count << "\n";
  }
  return out.str();
}

std::string list_maps()
{
  std::ostringstream out;
  for (auto kind : chaos::all_map_kinds()) {
    const chaos::MapSpec spec(kind);
    const auto range = spec.attractor();
    out << chaos::to_string(kind) << "\tattractor=[" << io::format_double(range.lo) << ", "
        << io::format_double(range.hi) << "]\n";
  }
  return out.str();
}

}  // namespace cscf::cli
