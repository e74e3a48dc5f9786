#pragma once

#include "conecalc/chow.hpp"
#include "conecalc/cones.hpp"

namespace conecalc {

inline constexpr uint64_t kClassSeed = 1729;

// Segre class of a cone over X, pushed forward to the Chow group of X's
// projective ambient space. Affine bases are first compactified by a fresh
// homogenizing variable, so the result always lives in some A_*(P^n).
//
// The computation runs on the projective completion P(C (+) 1): one fresh
// untwisted cone coordinate with no new relations, saturation by both
// irrelevant ideals, then generic-slice multidegrees. Coordinates that vanish
// identically on the cone are dropped first; the remaining coordinates must
// carry one common twist (a mixed polarization is accepted only when the
// correction it would feed vanishes). The slice data computes the class of
// the twist-normalized cone, and the common twist is then folded back in.
ChowClass segre_class(const Cone& c, uint64_t seed = kClassSeed);

}  // namespace conecalc
