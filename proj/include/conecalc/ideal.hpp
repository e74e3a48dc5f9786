#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conecalc/poly.hpp"

namespace conecalc {

// Reduced Groebner basis: monic, inter-reduced, sorted ascending by leading
// term. When requested, certificate[i][j] expresses elems[i] as a polynomial
// combination sum_j certificate[i][j] * gens[j] of the original generators.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> elems;
  std::vector<std::vector<Poly>> certificate;

  bool contains_one() const;
};

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Poly> gens, bool with_certificate = false);

// Full normal form: no term of the result is divisible by a leading term of gb.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

// Ideal with a lazily computed, shared Groebner basis cache. Value semantics;
// copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Poly> gens);  // transports gens, drops zeros

  static Ideal zero(const RingPtr& r) { return Ideal(r); }
  static Ideal from_strings(const RingPtr& r, const std::vector<std::string>& texts);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  const GroebnerBasis& groebner() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<const GroebnerBasis> gb_;
};

bool member(const Poly& p, const Ideal& I);
bool ideal_equal(const Ideal& a, const Ideal& b);  // rings must share variable names
bool is_unit_ideal(const Ideal& I);
bool is_zero_ideal(const Ideal& I);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k);  // k = 0 gives the unit ideal
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal quotient_poly(const Ideal& I, const Poly& f);  // I : <f>
Ideal quotient(const Ideal& I, const Ideal& J);      // I : J

inline constexpr int kSaturationCap = 50;
Ideal saturate(const Ideal& I, const Ideal& J, int cap = kSaturationCap);

// Contraction to the subring without `names`; the result lives in drop_vars(ring, names).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& names);

// Ring homomorphism src -> dst fixed by images of src variables (by index).
// Variables without an image must exist in dst under the same name.
struct RingMap {
  RingPtr src;
  RingPtr dst;
  std::map<int, Poly> images;
};
RingMap ring_map(RingPtr src, RingPtr dst, const std::map<std::string, Poly>& images_by_name);
Poly apply(const RingMap& f, const Poly& p);
Ideal apply(const RingMap& f, const Ideal& I);      // extension ideal in dst
Ideal preimage(const RingMap& f, const Ideal& J);   // contraction to src

// <all cone coordinates> (cone_coords = true) or <all ambient variables>.
// Tag variables with zero weights in both gradings belong to neither.
Ideal coordinate_ideal(const RingPtr& r, bool cone_coords);

// Projective closure: homogenize each generator termwise with hvar against the
// plain ambient degree (cone coordinates count zero), then saturate by <hvar>.
// dst must be I's ring extended by hvar.
Ideal homogenize_closure(const Ideal& I, const RingPtr& dst, const std::string& hvar);

struct DimDeg {
  int dim = 0;
  Int degree = 0;
};

// dim: Krull dimension of ring/I (combinatorial, from the leading-term ideal).
// degree: standard-graded degree for homogeneous input; vector-space dimension
// for zero-dimensional inhomogeneous input; input_error otherwise, and for the
// unit ideal.
DimDeg dimension_degree(const Ideal& I);
int krull_dimension(const Ideal& I);

// Number of standard monomials of the leading-term ideal; -1 when infinite.
long staircase_count(const GroebnerBasis& gb);
// dim_k ring/I; input_error when not finite.
long vs_dimension(const Ideal& I);

// q with q*f == h, when it exists.
std::optional<Poly> divide_exact(const Poly& h, const Poly& f);

}  // namespace conecalc
