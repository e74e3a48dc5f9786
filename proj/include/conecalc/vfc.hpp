#pragma once

#include <optional>

#include "conecalc/segre.hpp"

namespace conecalc {

// X embedded in P^n or A^n together with the ambient tangent data its
// intrinsic classes need. Affine ambients contribute c(T) = 1.
struct EmbeddedScheme {
  BaseSpace space;
  ChernPoly tangent_chern;
  int ambient_dim = 0;
};

// Validates the embedding data (nonempty; saturated, and homogeneous over a
// projective ambient) and fills in the tangent class.
EmbeddedScheme make_embedded(const BaseSpace& space);

// How the normal data of X is presented:
//  - SmoothIdentity: X is the whole smooth ambient space and the presentation
//    is the identity on its tangent bundle, so the cone is the zero cone.
//  - SectionOfBundle: X is cut out by a section of (+) O(d_i); the cone is
//    the normal cone polarized inside that bundle.
//  - ExplicitCone: the cone is handed over as built elsewhere.
enum class NormalSpaceKind { SmoothIdentity, SectionOfBundle, ExplicitCone };

struct NormalSpaceData {
  NormalSpaceKind kind = NormalSpaceKind::SmoothIdentity;
  // Twists of the bundle the cone lives in. For ExplicitCone an empty list
  // defers to the coordinate twists of the cone's own ambient space.
  std::vector<int> twists;
  // SectionOfBundle: one component per twist, cutting out X.
  std::vector<Poly> section;
  // ExplicitCone: the cone itself.
  std::optional<Cone> cone;
};

NormalSpaceData smooth_identity();
NormalSpaceData section_of_bundle(std::vector<int> twists, std::vector<Poly> section);
NormalSpaceData explicit_cone(Cone cone, std::vector<int> f1_twists = {});

// The global normal cone of the presentation, living over X. Checked pure of
// the ambient dimension (the rank of the tangent term).
Cone global_normal_cone(const EmbeddedScheme& x, const NormalSpaceData& ns);

// The canonical class c(T_M|_X) cap s(C_{X|M}) in A_*(P^n), independent of
// the embedding data beyond X itself.
ChowClass fulton_class(const EmbeddedScheme& x, uint64_t seed = kClassSeed);
// The same class computed from a normal-space presentation via the tangent
// term of the presentation.
ChowClass fulton_via_normal_space(const EmbeddedScheme& x, const NormalSpaceData& ns,
                                  uint64_t seed = kClassSeed);

struct VfcResult {
  ChowClass vfc;
  int rank = 0;  // d = rk F0 - rk F1
  ChowClass fulton;
  int cone_dimension = 0;
};

// Virtual fundamental class, directly from the cone: the dimension-d part of
// c(F1) cap s(C). A negative d yields the zero class, not an error.
VfcResult vfc_direct(const EmbeddedScheme& x, const NormalSpaceData& ns,
                     uint64_t seed = kClassSeed);
// The same class through the canonical class: the dimension-d part of
// c(F1) c(F0)^{-1} cap c_F(X). The two routes agree exactly.
VfcResult vfc_closed_formula(const EmbeddedScheme& x, const NormalSpaceData& ns,
                             uint64_t seed = kClassSeed);

}  // namespace conecalc
