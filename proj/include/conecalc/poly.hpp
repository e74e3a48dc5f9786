#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conecalc/ring.hpp"

namespace conecalc {

struct Term {
  Mono m;
  Rat c;
};

// Canonical form: terms sorted strictly descending in the ring's order,
// no zero coefficients. All arithmetic preserves this.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly zero(const RingPtr& r) { return Poly(r); }
  static Poly constant(const RingPtr& r, const Rat& c);
  static Poly variable(const RingPtr& r, int var, int exp = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || mono_total_deg(terms_[0].m) == 0; }
  bool is_one() const;

  const Term& lt() const;  // leading term; throws on zero

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Mono& m, const Rat& c) const;
  Poly mul_scalar(const Rat& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  int total_deg() const;  // -1 for zero
  int weighted_deg(bool cone_weights) const;
  bool homogeneous(bool cone_weights) const;  // zero counts as homogeneous
  // Splits into (base_deg, cone_deg)-bihomogeneous components.
  std::vector<Poly> bihomogeneous_components() const;

  Poly derivative(int var) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Grammar: integers, rationals p/q, identifiers, + - * ^, parentheses;
// ^ binds tightest, then unary minus, then *, then + -. Whitespace free.
Poly parse_poly(const RingPtr& r, const std::string& text);
std::string poly_str(const Poly& p);

// Transport by variable name into dst; every variable used by p must exist there.
Poly transport(const Poly& p, const RingPtr& dst);
// Substitute images[i] for variable i (indices into p's ring); images live in dst.
// Variables without an image must exist in dst under the same name.
Poly substitute(const Poly& p, const RingPtr& dst, const std::map<int, Poly>& images);

std::vector<Poly> parse_polys(const RingPtr& r, const std::vector<std::string>& texts);
std::vector<std::string> poly_strs(const std::vector<Poly>& ps);

}  // namespace conecalc
