#pragma once

#include "conecalc/module.hpp"

namespace conecalc {

// Base scheme X: the variables of its ambient affine or projective space
// together with its defining ideal.
struct BaseSpace {
  RingPtr ring;
  Ideal ideal;
  bool projective = false;
};

BaseSpace make_base(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                    bool projective = false);

// Linear space over X determined by a presented sheaf: one coordinate per
// sheaf generator, one linear relation form per sheaf relation.
struct LinearSpace {
  BaseSpace base;
  RingPtr ring;             // base variables followed by the coordinates
  std::vector<int> coords;  // indices of the coordinate variables in `ring`
  std::vector<int> twists;  // base degree carried by each coordinate
  PresentedModule sheaf;    // over the base ring, with X's ideal as base
  Ideal ideal;              // X's ideal + linear relation forms, in `ring`

  int rank() const { return static_cast<int>(coords.size()); }
  Poly coord(int i) const { return Poly::variable(ring, coords[i]); }
};

LinearSpace linear_space(const BaseSpace& base, const PresentedModule& sheaf,
                         const std::vector<std::string>& coord_names,
                         const std::vector<int>& twists);
LinearSpace free_space(const BaseSpace& base, const std::vector<std::string>& coord_names,
                       const std::vector<int>& twists);
// Coordinates of b are renamed where they collide with a's.
LinearSpace direct_sum(const LinearSpace& a, const LinearSpace& b);

// Rank if the sheaf is locally free on X (Fitting ideal test), else nullopt.
std::optional<int> locally_free_rank(const LinearSpace& e);

// Morphism of linear spaces src -> dst over the same base. matrix[i][j] is
// the coefficient of src coordinate j in the pullback of dst coordinate i;
// the same matrix gives the sheaf map sheaf(dst) -> sheaf(src).
struct LinSpaceHom {
  LinearSpace src;
  LinearSpace dst;
  std::vector<std::vector<Poly>> matrix;

  ModuleMap sheaf_map() const;  // sheaf(dst) -> sheaf(src)
};

LinSpaceHom linspace_hom(const LinearSpace& src, const LinearSpace& dst,
                         std::vector<std::vector<Poly>> matrix);
LinSpaceHom identity_hom(const LinearSpace& e);
LinSpaceHom zero_hom(const LinearSpace& src, const LinearSpace& dst);
LinSpaceHom compose(const LinSpaceHom& g, const LinSpaceHom& f);  // g after f
LinSpaceHom hom_add(const LinSpaceHom& f, const LinSpaceHom& g);

// Pullback substitution of the geometric map: images of dst's coordinate
// variables inside src.ring, keyed by their index in dst.ring.
std::map<int, Poly> pullback_images(const LinSpaceHom& f);
Poly pullback(const LinSpaceHom& f, const Poly& p);

// Properties of the underlying sheaf map sheaf(dst) -> sheaf(src). A
// surjection of linear spaces corresponds to an injective sheaf map.
bool sheaf_map_injective(const LinSpaceHom& f);
bool sheaf_map_surjective(const LinSpaceHom& f);

}  // namespace conecalc
