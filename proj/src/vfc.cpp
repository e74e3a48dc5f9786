#include "conecalc/vfc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace conecalc {
namespace {

Poly into(const Poly& p, const RingPtr& r) {
  if (p.is_zero()) return Poly::zero(r);
  return p.ring() == r ? p : transport(p, r);
}

std::vector<std::string> fresh_names(const RingPtr& ring, const std::string& stem, int k) {
  auto taken = [&](const std::string& n, const std::vector<std::string>& extra) {
    if (ring->index_of(n) >= 0) return true;
    for (const auto& e : extra)
      if (e == n) return true;
    return false;
  };
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) {
    std::string n = stem + std::to_string(i);
    while (taken(n, out)) n += "_2";
    out.push_back(n);
  }
  return out;
}

// Ideal-level homogeneity in the plain grading: graded ideals have graded
// reduced bases, so checking the basis elements decides it.
bool plainly_homogeneous(const Ideal& I) {
  for (const auto& g : I.groebner().elems)
    if (!g.homogeneous(false)) return false;
  return true;
}

int f1_rank(const NormalSpaceData& ns) {
  switch (ns.kind) {
    case NormalSpaceKind::SmoothIdentity:
      return 0;
    case NormalSpaceKind::SectionOfBundle:
      return static_cast<int>(ns.twists.size());
    case NormalSpaceKind::ExplicitCone:
      if (!ns.cone) throw input_error("explicit cone data is missing its cone");
      return ns.cone->ambient.rank();
  }
  throw input_error("unknown normal space kind");
}

std::vector<int> f1_twists(const NormalSpaceData& ns) {
  if (ns.kind == NormalSpaceKind::ExplicitCone && ns.twists.empty()) return ns.cone->ambient.twists;
  return ns.twists;
}

// c(F1), trivial over an affine ambient.
ChernPoly f1_chern(const EmbeddedScheme& x, const NormalSpaceData& ns) {
  if (!x.space.projective) return chern_one(x.ambient_dim);
  return chern_of_twists(x.ambient_dim, f1_twists(ns));
}

// vfc_direct and vfc_closed_formula need F1 to be an honest bundle; the two
// built-in presentations are bundles by construction, an explicit cone's
// ambient space is checked.
void require_f1_bundle(const NormalSpaceData& ns) {
  if (ns.kind != NormalSpaceKind::ExplicitCone) return;
  if (!ns.cone) throw input_error("explicit cone data is missing its cone");
  auto rank = locally_free_rank(ns.cone->ambient);
  if (!rank || *rank != ns.cone->ambient.rank())
    throw applicability_error("virtual class needs the cone's ambient space to be a bundle");
  if (!ns.twists.empty() && ns.twists != ns.cone->ambient.twists)
    throw input_error("declared bundle twists do not match the cone's ambient space");
}

}  // namespace

EmbeddedScheme make_embedded(const BaseSpace& space) {
  const RingPtr& r = space.ring;
  if (is_unit_ideal(space.ideal)) throw input_error("embedded scheme is empty");
  if (space.projective) {
    if (!plainly_homogeneous(space.ideal))
      throw input_error("projective embedding needs a homogeneous ideal");
    if (!ideal_equal(saturate(space.ideal, coordinate_ideal(r, false)), space.ideal))
      throw input_error("embedding ideal is not saturated");
  }
  EmbeddedScheme x;
  x.space = space;
  x.ambient_dim = space.projective ? r->nvars() - 1 : r->nvars();
  x.tangent_chern = tangent_chern(x.ambient_dim, space.projective);
  return x;
}

NormalSpaceData smooth_identity() { return NormalSpaceData{}; }

NormalSpaceData section_of_bundle(std::vector<int> twists, std::vector<Poly> section) {
  NormalSpaceData ns;
  ns.kind = NormalSpaceKind::SectionOfBundle;
  ns.twists = std::move(twists);
  ns.section = std::move(section);
  return ns;
}

NormalSpaceData explicit_cone(Cone cone, std::vector<int> f1_twists) {
  NormalSpaceData ns;
  ns.kind = NormalSpaceKind::ExplicitCone;
  ns.twists = std::move(f1_twists);
  ns.cone = std::move(cone);
  return ns;
}

Cone global_normal_cone(const EmbeddedScheme& x, const NormalSpaceData& ns) {
  const RingPtr& r = x.space.ring;
  Cone out{};

  switch (ns.kind) {
    case NormalSpaceKind::SmoothIdentity: {
      // The presentation is the identity on the ambient tangent bundle, which
      // only covers a scheme that is the whole smooth ambient space.
      if (!is_zero_ideal(x.space.ideal))
        throw input_error("smooth identity data needs the scheme to be the whole ambient space");
      out = zero_section_cone(free_space(x.space, {}, {}));
      break;
    }
    case NormalSpaceKind::SectionOfBundle: {
      const int k = static_cast<int>(ns.twists.size());
      if (static_cast<int>(ns.section.size()) != k)
        throw input_error("section needs one component per bundle twist");
      std::vector<Poly> comps;
      std::vector<int> zero_slots;
      for (int i = 0; i < k; ++i) {
        Poly s = into(ns.section[i], r);
        if (s.is_zero()) {
          zero_slots.push_back(i);
          continue;
        }
        if (x.space.projective &&
            (!s.homogeneous(false) || s.weighted_deg(false) != ns.twists[i]))
          throw input_error("section component is not homogeneous of its declared twist");
        comps.push_back(s);
      }

      // The section must cut out exactly the scheme: the same subscheme in
      // the affine case, the same saturation in the projective case.
      Ideal cut(r, comps);
      if (x.space.projective) cut = saturate(cut, coordinate_ideal(r, false));
      if (!ideal_equal(cut, x.space.ideal))
        throw input_error("section does not cut out the scheme");

      std::vector<std::string> names = fresh_names(r, "N", k);
      std::vector<std::string> live_names;
      for (int i = 0, j = 0; i < k; ++i)
        if (j < static_cast<int>(zero_slots.size()) && zero_slots[j] == i)
          ++j;
        else
          live_names.push_back(names[i]);

      BaseSpace carrier{r, Ideal(r, comps), x.space.projective};
      Cone core = normal_cone(carrier, comps, live_names);

      // Polarize inside the full declared bundle: zero components contribute
      // coordinates the cone does not leave the zero section of.
      LinearSpace f1 = free_space(x.space, names, ns.twists);
      std::vector<Poly> gens;
      for (const auto& g : core.ideal.gens()) gens.push_back(into(g, f1.ring));
      for (int i : zero_slots) gens.push_back(f1.coord(i));
      out = make_cone(f1, gens, false);
      break;
    }
    case NormalSpaceKind::ExplicitCone: {
      if (!ns.cone) throw input_error("explicit cone data is missing its cone");
      const Cone& c = *ns.cone;
      if (!c.ambient.base.ring->compatible(*r) || !ideal_equal(c.ambient.base.ideal, x.space.ideal) ||
          c.ambient.base.projective != x.space.projective)
        throw input_error("explicit cone does not live over the scheme");
      out = make_cone(c.ambient, c.ideal.gens());
      break;
    }
  }

  if (cone_dimension(out) != x.ambient_dim)
    throw applicability_error("global normal cone is not pure of the ambient dimension");
  return out;
}

ChowClass fulton_class(const EmbeddedScheme& x, uint64_t seed) {
  const std::vector<Poly>& gens = x.space.ideal.gens();
  std::vector<std::string> names = fresh_names(x.space.ring, "N", static_cast<int>(gens.size()));
  Cone c = normal_cone(x.space, gens, names);
  return cap(x.tangent_chern, segre_class(c, seed));
}

ChowClass fulton_via_normal_space(const EmbeddedScheme& x, const NormalSpaceData& ns,
                                  uint64_t seed) {
  // The tangent term is the restricted ambient tangent bundle for a section
  // presentation, and the tangent bundle of X itself in the smooth identity
  // case; the latter only arises with X the whole ambient space, so one
  // Chern class serves every variant.
  Cone c = global_normal_cone(x, ns);
  return cap(x.tangent_chern, segre_class(c, seed));
}

VfcResult vfc_direct(const EmbeddedScheme& x, const NormalSpaceData& ns, uint64_t seed) {
  require_f1_bundle(ns);
  Cone c = global_normal_cone(x, ns);
  ChowClass s = segre_class(c, seed);

  VfcResult out;
  out.rank = x.ambient_dim - f1_rank(ns);
  out.cone_dimension = cone_dimension(c);
  out.vfc = chow_component(cap(f1_chern(x, ns), s), out.rank);
  // For the built-in presentations the cone is the normal cone of X itself,
  // so the canonical class falls out of the same Segre data.
  out.fulton = ns.kind == NormalSpaceKind::ExplicitCone ? fulton_class(x, seed)
                                                        : cap(x.tangent_chern, s);
  return out;
}

VfcResult vfc_closed_formula(const EmbeddedScheme& x, const NormalSpaceData& ns, uint64_t seed) {
  require_f1_bundle(ns);
  Cone c = global_normal_cone(x, ns);

  VfcResult out;
  out.rank = x.ambient_dim - f1_rank(ns);
  out.cone_dimension = cone_dimension(c);
  out.fulton = fulton_class(x, seed);
  ChernPoly virt = chern_mul(f1_chern(x, ns), chern_inverse(x.tangent_chern));
  out.vfc = chow_component(cap(virt, out.fulton), out.rank);
  return out;
}

}  // namespace conecalc
