#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace conecalc {

// Default seed for the randomized law suites.
inline constexpr uint64_t kSuiteSeed = 2027;

struct SuiteOptions {
  uint64_t seed = kSuiteSeed;
  int count = 100;       // instances to run
  int start_index = 0;   // index of the first instance; replays pick one out
  bool mutated = false;  // self-test hook: flips every verdict so the
                         // failure-reporting path can be exercised
};

// Result of one suite run.  The first failing instance is echoed field by
// field so it can be inspected alongside the seed and index that replay it.
struct SuiteOutcome {
  std::string suite;
  int run = 0;
  int passed = 0;
  int failed_index = -1;  // instance index of the first failure, -1 if none
  std::string note;
  std::vector<std::pair<std::string, std::string>> instance;

  bool ok() const { return failed_index < 0; }
};

const std::vector<std::string>& suite_names();

// Runs `opt.count` instances of the named law starting at `opt.start_index`.
// Instance i draws everything from a generator seeded with
// mix_seed(opt.seed, name, i), so seed and index alone reproduce it.
SuiteOutcome run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace conecalc
