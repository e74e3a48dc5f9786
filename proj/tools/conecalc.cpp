#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "conecalc/fixtures.hpp"
#include "conecalc/job.hpp"

namespace {

int emit(const conecalc::JobOutcome& out, const std::string& out_path) {
  if (!out.summary.empty()) std::cerr << out.summary << "\n";
  if (out_path.empty()) {
    std::cout << out.report;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << out.report;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact cone calculus: normal cones, Segre classes, virtual classes"};
  app.require_subcommand(1);

  std::string job_path;
  std::string out_path;
  uint64_t seed = 0;

  CLI::App* run =
      app.add_subcommand("run", "run a job file and print its report");
  run->add_option("job", job_path, "job JSON file")->required();
  run->add_option("--out", out_path, "write the report here instead of stdout");
  CLI::Option* run_seed =
      run->add_option("--seed", seed, "override the job's seed");

  std::vector<std::string> suites;
  int count = 100;
  CLI::App* check = app.add_subcommand("check", "run the law suites");
  check->add_option("--suite", suites,
                    "suite to run (repeatable; default: all of them)");
  CLI::Option* check_seed = check->add_option("--seed", seed, "suite seed");
  check->add_option("--count", count, "instances per suite");

  CLI::App* fixtures =
      app.add_subcommand("fixtures", "list the built-in fixtures");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    std::ifstream f(job_path);
    if (!f) {
      std::cerr << "error: cannot read " << job_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    conecalc::JobOptions opt;
    if (run_seed->count()) opt.seed = seed;
    return emit(conecalc::run_job(buf.str(), opt), out_path);
  }

  if (check->parsed()) {
    nlohmann::ordered_json job;
    job["schema"] = "conecalc-job/1";
    job["task"] = "check";
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (!suites.empty()) params["suites"] = suites;
    if (check_seed->count()) params["seed"] = seed;
    params["count"] = count;
    job["params"] = params;
    return emit(conecalc::run_job(job.dump()), "");
  }

  if (fixtures->parsed()) {
    for (const auto& name : conecalc::fixture_names())
      std::cout << name << "\n";
  }
  return 0;
}
