#include "cscf/record_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "cscf/error.hpp"

namespace cscf::io
{
namespace
{

using Json = nlohmann::ordered_json;

Json score(double v)
{
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

double read_score(const Json& j)
{
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

Json scores(const std::vector<double>& v)
{
  Json arr = Json::array();
  for (double x : v) {
    arr.push_back(score(x));
  }
  return arr;
}

std::vector<double> read_scores(const Json& j)
{
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    out.push_back(read_score(x));
  }
  return out;
}

}  // namespace

std::string to_json_line(const RunRecord& r)
{
  Json j;
  j["problem"] = r.problem;
  j["dim"] = r.dim;
  j["algorithm"] = r.algorithm;
  j["variant"] = r.variant;
  j["map"] = r.map;
  j["seed"] = r.seed;
  j["population"] = r.population;
  j["max_iter"] = r.max_iter;
  j["evals"] = r.evals;
  j["best_fitness"] = score(r.best_fitness);
  j["best_objective"] = score(r.best_objective);
  j["best_violation"] = score(r.best_violation);
  j["reference"] = r.reference ? Json(*r.reference) : Json(nullptr);
  j["best_position"] = r.best_position;
  j["best_constraints"] = scores(r.best_constraints);
  j["best_curve"] = scores(r.best_curve);
  j["wall_time"] = r.wall_time;
  return j.dump();
}

RunRecord from_json_line(std::string_view line)
{
  try {
    const Json j = Json::parse(line);
    RunRecord r;
    r.problem = j.at("problem").get<std::string>();
    r.dim = j.at("dim").get<std::size_t>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    r.map = j.at("map").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.population = j.at("population").get<std::size_t>();
    r.max_iter = j.at("max_iter").get<std::size_t>();
    r.evals = j.at("evals").get<std::size_t>();
    r.best_fitness = read_score(j.at("best_fitness"));
    r.best_objective = read_score(j.at("best_objective"));
    r.best_violation = read_score(j.at("best_violation"));
    if (!j.at("reference").is_null()) {
      r.reference = j.at("reference").get<double>();
    }
    r.best_position = j.at("best_position").get<std::vector<double>>();
    r.best_constraints = read_scores(j.at("best_constraints"));
    r.best_curve = read_scores(j.at("best_curve"));
    r.wall_time = j.at("wall_time").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoError, std::string("malformed record: ") + e.what());
  }
}

std::string format_double(double v)
{
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string curve_csv(const RunRecord& record)
{
  std::string out = "iteration,best_fitness\n";
  for (std::size_t t = 0; t < record.best_curve.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_double(record.best_curve[t]);
    out += '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content)
{
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(ErrorKind::IoError, "cannot create " + path.parent_path().string() + ": " + ec.message());
    }
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorKind::IoError, "cannot rename " + tmp.string() + ": " + ec.message());
  }
}

}  // namespace cscf::io
