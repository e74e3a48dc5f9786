#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace conecalc {

// Exact rational scalar. mpq_class does not canonicalize on construction,
// so every entry point that builds a Rat from raw integers goes through
// rat_make / rat_from_string, which do.
using Rat = mpq_class;
using Int = mpz_class;

struct conecalc_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input (bad polynomial syntax, ring mismatch, unknown variable, ...). CLI exit 2.
struct input_error : conecalc_error {
  using conecalc_error::conecalc_error;
};
// A precondition of a paper-level operation fails (going-down inapplicable,
// purity or certificate assertion violated, ...). CLI exit 3.
struct applicability_error : conecalc_error {
  using conecalc_error::conecalc_error;
};
// Randomized genericity could not be certified within the retry budget. CLI exit 4.
struct genericity_error : conecalc_error {
  using conecalc_error::conecalc_error;
};

inline Rat rat_make(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
  if (r.get_den() == 0) throw input_error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace conecalc
