#pragma once

#include "conecalc/cones.hpp"

namespace conecalc {

// Two-term complex of linear spaces [e0 -> e1] with differential d.
struct TwoTermComplex {
  LinearSpace e0, e1;
  LinSpaceHom d;
};

TwoTermComplex two_term_complex(LinearSpace e0, LinearSpace e1, LinSpaceHom d);

// Equality of morphisms as sheaf maps (entrywise difference lands in the
// relation span of the common source sheaf).
bool hom_equal(const LinSpaceHom& f, const LinSpaceHom& g);

// Commuting square phi: src -> dst of two-term complexes; construction
// rejects squares that do not commute on the sheaf level.
struct ComplexSquare {
  TwoTermComplex src, dst;
  LinSpaceHom phi0;  // src.e0 -> dst.e0
  LinSpaceHom phi1;  // src.e1 -> dst.e1
};

ComplexSquare complex_square(TwoTermComplex src, TwoTermComplex dst, LinSpaceHom phi0,
                             LinSpaceHom phi1);

// Cohomology of the induced map on sheaf complexes (degree 0: cokernels of
// the sheaf differentials; degree -1: kernels), with exactness bookkeeping.
struct SquareCohomology {
  ModuleMap h0;       // coker(dst sheaf differential) -> coker(src side)
  ModuleMap hminus1;  // kernel -> kernel
  bool h0_injective = false;
  bool h0_surjective = false;
  bool hminus1_injective = false;
  bool hminus1_surjective = false;

  bool h0_iso() const { return h0_injective && h0_surjective; }
  bool hminus1_iso() const { return hminus1_injective && hminus1_surjective; }
  bool cartesian() const { return h0_injective && hminus1_iso(); }
  bool cocartesian() const { return h0_iso() && hminus1_surjective; }
  bool quasi_iso() const { return h0_iso() && hminus1_iso(); }
};

SquareCohomology square_cohomology(const ComplexSquare& s);

// Exactness of the associated three-term sheaf sequence
//   0 -> E(-1) -> E(0) (+) F(-1) -> F(0) -> 0
// computed directly from kernels and images.
struct ExactnessFlags {
  bool at_source = false;
  bool at_middle = false;
  bool at_target = false;
};

ExactnessFlags associated_sequence_exactness(const ComplexSquare& s);

struct Applicability {
  bool applicable = false;
  std::string reason;
};

// Pushing cones forward along the square needs: an isomorphism in degree 0
// and a surjection in degree -1 of the sheaf cohomology, and a locally free
// sheaf at the source's degree-0 term.
Applicability going_down_applicability(const ComplexSquare& s);

// Pullback of a cone in dst.e1 to src.e1 through phi1.
Cone going_up(const ComplexSquare& s, const Cone& cbar);
// Pushforward of a cone in src.e1 to dst.e1; throws applicability_error when
// the square does not qualify or the defining property fails for this cone.
Cone going_down(const ComplexSquare& s, const Cone& c);

// Morphism in the derived sense: a target complex g together with a
// quasi-isomorphism theta: e -> g and an honest morphism psi: f -> g.
struct DerivedMorphism {
  TwoTermComplex g;
  ComplexSquare theta;  // e -> g, must be a quasi-isomorphism
  ComplexSquare psi;    // f -> g
};

Cone going_down_derived(const DerivedMorphism& dm, const Cone& c);

// Is c the preimage of a cone under the projection p (geometric map out of
// c's ambient space)? p's sheaf map must be injective.
struct DescendResult {
  bool descends = false;
  Cone candidate;
};

DescendResult descend_check(const LinSpaceHom& p, const Cone& c);

}  // namespace conecalc
