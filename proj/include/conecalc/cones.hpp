#pragma once

#include "conecalc/linspace.hpp"

namespace conecalc {

// Closed subcone of a linear space. The ideal contains the ambient's and is
// homogeneous in the cone grading. By default construction saturates with
// respect to the coordinates, which normalizes the usual calculus results; a
// cone whose ideal lies inside the zero section is kept as given, since that
// saturation would empty it out. Pass saturate_coords = false to keep a
// reducible ideal (for example one with a zero-section component) verbatim.
struct Cone {
  LinearSpace ambient;
  Ideal ideal;
};

Cone make_cone(const LinearSpace& amb, const std::vector<Poly>& gens, bool saturate_coords = true);
Cone zero_section_cone(const LinearSpace& amb);
bool cone_equal(const Cone& a, const Cone& b);
// Dimension as a scheme: Krull dimension, minus one over a projective base.
int cone_dimension(const Cone& c);

// Normal cone of V(gens) inside the smooth ambient space of `base`, living in
// the linear space of the conormal sheaf presented on those generators. The
// twist of each coordinate is the degree of its generator.
Cone normal_cone(const BaseSpace& base, const std::vector<Poly>& gens,
                 const std::vector<std::string>& coord_names);

// Derivative action of the ambient coordinate vector fields on the normal
// cone's ambient space: the actor is free with one coordinate per ambient
// variable and the matrix is the Jacobian of the generators.
LinSpaceHom tangent_action(const BaseSpace& base, const std::vector<Poly>& gens, const Cone& cone,
                           const std::string& prefix = "d");

// Whether the translation action src x C -> ambient(C) of the given morphism
// maps C into C.
bool is_econe(const Cone& c, const LinSpaceHom& action);

}  // namespace conecalc
