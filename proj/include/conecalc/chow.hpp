#pragma once

#include <map>

#include "conecalc/ideal.hpp"

namespace conecalc {

// Rational equivalence class on P^n, stored by the coefficients of the
// linear-subspace classes [P^m]. Classes of affine inputs live on the
// projective closure and use the same container.
struct ChowClass {
  int ambient = 0;          // n
  std::vector<Rat> coeffs;  // coeffs[m] multiplies [P^m]; size ambient+1
};

ChowClass chow_zero(int ambient);
ChowClass chow_class(int ambient, const std::map<int, Rat>& coeffs);
bool chow_equal(const ChowClass& a, const ChowClass& b);
ChowClass chow_add(const ChowClass& a, const ChowClass& b);
ChowClass chow_scale(const Rat& c, const ChowClass& a);
// The [P^m] part alone (zero outside 0..ambient).
ChowClass chow_component(const ChowClass& a, int m);
// Human form, top dimension first: "2[P^1] - 4[P^0]".
std::string chow_str(const ChowClass& a);

// Total characteristic class sum_j c[j] h^j truncated at the ambient
// dimension, h the hyperplane class.
struct ChernPoly {
  int ambient = 0;
  std::vector<Rat> c;  // size ambient+1; c[0] is the rank-0 part
};

ChernPoly chern_one(int ambient);
// Total Chern class of a direct sum of line bundles O(d), d in twists.
ChernPoly chern_of_twists(int ambient, const std::vector<int>& twists);
ChernPoly chern_mul(const ChernPoly& a, const ChernPoly& b);
// Multiplicative inverse; the constant term must be nonzero.
ChernPoly chern_inverse(const ChernPoly& a);
// Tangent class of the ambient: (1+h)^(n+1) for P^n, 1 for affine space.
ChernPoly tangent_chern(int ambient, bool projective);

// Formal difference of sums of line bundles, recorded by twist lists.
struct VirtualBundle {
  std::vector<int> plus;
  std::vector<int> minus;

  int rank() const { return static_cast<int>(plus.size()) - static_cast<int>(minus.size()); }
};

ChernPoly chern_of_virtual(int ambient, const VirtualBundle& vb);

// c cap a, via h^j cap [P^m] = [P^(m-j)].
ChowClass cap(const ChernPoly& c, const ChowClass& a);

// Class of the subscheme Z cut out by the bihomogeneous ideal J inside
// P^n x P^k (standard-graded base block x cone-coordinate block, coordinate
// twists ignored): coefficients of [P^a x P^(d-a)] for a = 0..d, d = dim Z.
// Computed by counting points on generic linear slices with seeded random
// coefficients; two independent draws must agree, with up to three attempts
// before genericity_error.
std::vector<Int> multidegree(const Ideal& J, uint64_t seed);

}  // namespace conecalc
