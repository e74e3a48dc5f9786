#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conecalc/fixtures.hpp"
#include "conecalc/job.hpp"
#include "conecalc/suites.hpp"

namespace py = pybind11;
using namespace conecalc;

namespace {

py::dict outcome_dict(const JobOutcome& out) {
  py::dict d;
  d["exit_code"] = out.exit_code;
  d["report"] = out.report;
  d["summary"] = out.summary;
  d["dump_paths"] = out.dump_paths;
  return d;
}

py::dict suite_dict(const SuiteOutcome& so) {
  py::dict d;
  d["suite"] = so.suite;
  d["run"] = so.run;
  d["passed"] = so.passed;
  d["ok"] = so.ok();
  if (so.ok()) {
    d["failed_index"] = py::none();
  } else {
    d["failed_index"] = so.failed_index;
    d["note"] = so.note;
    py::dict inst;
    for (const auto& [k, v] : so.instance) inst[py::str(k)] = v;
    d["instance"] = inst;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact cone calculus: normal cones, Segre classes, virtual classes";
  m.attr("__version__") = "0.1.0";
  m.attr("SUITE_SEED") = kSuiteSeed;
  m.attr("CLASS_SEED") = kClassSeed;

  py::register_exception<conecalc_error>(m, "ConecalcError");
  py::register_exception<input_error>(m, "InputError");
  py::register_exception<applicability_error>(m, "ApplicabilityError");
  py::register_exception<genericity_error>(m, "GenericityError");

  m.def(
      "run_job",
      [](const std::string& job_text, std::optional<uint64_t> seed,
         const std::string& dump_dir) {
        JobOptions opt;
        opt.seed = seed;
        opt.dump_dir = dump_dir;
        return outcome_dict(run_job(job_text, opt));
      },
      py::arg("job_text"), py::arg("seed") = py::none(),
      py::arg("dump_dir") = ".",
      "Run one JSON job; returns exit_code, the JSON report text, the human "
      "summary, and any replay dump paths. Never raises for job failures: "
      "inspect exit_code.");

  m.def(
      "run_suite",
      [](const std::string& name, uint64_t seed, int count, int start_index,
         bool mutated) {
        SuiteOptions opt;
        opt.seed = seed;
        opt.count = count;
        opt.start_index = start_index;
        opt.mutated = mutated;
        return suite_dict(run_suite(name, opt));
      },
      py::arg("name"), py::arg("seed") = kSuiteSeed, py::arg("count") = 100,
      py::arg("start_index") = 0, py::arg("mutated") = false,
      "Run one randomized law suite and report the verdict per instance "
      "block.");

  m.def("fixture_names", &fixture_names,
        "Names of the built-in embedded-scheme fixtures.");
  m.def("suite_names", &suite_names, "Names of the randomized law suites.");
}
