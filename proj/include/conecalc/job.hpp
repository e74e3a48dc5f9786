#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conecalc {

struct JobOptions {
  std::optional<uint64_t> seed;  // overrides the job's own seed parameter
  std::string dump_dir = ".";    // where replay files for failed suites land
};

struct JobOutcome {
  // 0 done, 2 bad input, 3 not applicable (including suite failures),
  // 4 genericity exhausted, 1 internal fault.
  int exit_code = 0;
  std::string report;   // machine-readable JSON, one document
  std::string summary;  // human-readable lines for stderr
  std::vector<std::string> dump_paths;  // replay files written by check tasks
};

// Runs one job given as JSON text.  Computation and input failures are
// folded into the report and the exit code; this never throws.
JobOutcome run_job(const std::string& job_text, const JobOptions& opt = {});

}  // namespace conecalc
