#include "conecalc/cones.hpp"

#include <algorithm>

namespace conecalc {
namespace {

Poly into(const Poly& p, const RingPtr& r) {
  if (p.is_zero()) return Poly::zero(r);
  return p.ring() == r ? p : transport(p, r);
}

std::string unique_name(const std::vector<VarDecl>& taken, std::string stem) {
  auto used = [&](const std::string& n) {
    for (const auto& v : taken)
      if (v.name == n) return true;
    return false;
  };
  std::string name = std::move(stem);
  while (used(name)) name += "_2";
  return name;
}

}  // namespace

Cone make_cone(const LinearSpace& amb, const std::vector<Poly>& gens, bool saturate_coords) {
  std::vector<Poly> all = amb.ideal.gens();
  for (const auto& g : gens) {
    Poly p = into(g, amb.ring);
    if (!p.homogeneous(true))
      throw input_error("cone generators must be homogeneous in the cone grading");
    all.push_back(std::move(p));
  }
  Ideal J(amb.ring, std::move(all));
  if (saturate_coords) {
    Ideal sat = saturate(J, coordinate_ideal(amb.ring, true));
    // A cone contained in the zero section would saturate to the unit ideal;
    // keep the honest ideal in that case.
    if (!(is_unit_ideal(sat) && !is_unit_ideal(J))) J = sat;
  }
  if (amb.base.projective) J = saturate(J, coordinate_ideal(amb.ring, false));
  return Cone{amb, std::move(J)};
}

Cone zero_section_cone(const LinearSpace& amb) {
  std::vector<Poly> gens;
  for (int i = 0; i < amb.rank(); ++i) gens.push_back(amb.coord(i));
  return make_cone(amb, gens);
}

bool cone_equal(const Cone& a, const Cone& b) {
  if (!a.ambient.ring->compatible(*b.ambient.ring)) return false;
  return ideal_equal(a.ideal, b.ideal);
}

int cone_dimension(const Cone& c) {
  int dim = krull_dimension(c.ideal);
  if (dim < 0) return dim;  // empty
  return c.ambient.base.projective ? dim - 1 : dim;
}

Cone normal_cone(const BaseSpace& base, const std::vector<Poly>& gens,
                 const std::vector<std::string>& coord_names) {
  const RingPtr& br = base.ring;
  const int k = static_cast<int>(gens.size());
  if (static_cast<int>(coord_names.size()) != k)
    throw input_error("normal cone needs one coordinate name per generator");
  std::vector<Poly> fs;
  std::vector<int> twists;
  for (const auto& g : gens) {
    Poly f = into(g, br);
    if (f.is_zero()) throw input_error("normal cone generators must be nonzero");
    if (base.projective && !f.homogeneous(false))
      throw input_error("generators over a projective base must be homogeneous");
    twists.push_back(f.weighted_deg(false));
    fs.push_back(std::move(f));
  }
  if (!ideal_equal(Ideal(br, fs), base.ideal))
    throw input_error("generators do not generate the base ideal");

  // Presentation of the conormal sheaf on these generators: syzygies of the
  // generators modulo the square of the ideal.
  Ideal I(br, fs);
  Ideal I2 = ideal_product(I, I);
  std::vector<ModVec> fcols;
  for (const auto& f : fs) fcols.push_back(ModVec{f});
  PresentedModule scalar{br, I2, 1, {}};
  PresentedModule conormal{br, I, k, syzygies_mod(scalar, fcols)};
  LinearSpace amb = linear_space(base, conormal, coord_names, twists);

  // Rees kernel: eliminate t from <Y_i - t*f_i>; adding the base ideal then
  // cuts the cone out of the ambient space.
  std::string tname = unique_name(amb.ring->vars, "t");
  RingPtr work = extend_ring(amb.ring, {VarDecl{tname, 0, 0, 1}}, amb.ring->order);
  int tidx = work->index_of(tname);
  std::vector<Poly> rees;
  for (int i = 0; i < k; ++i)
    rees.push_back(into(amb.coord(i), work) -
                   Poly::variable(work, tidx) * into(fs[i], work));
  Ideal elim = eliminate(Ideal(work, std::move(rees)), {tname});
  std::vector<Poly> cgens;
  for (const auto& g : elim.gens()) cgens.push_back(into(g, amb.ring));
  return make_cone(amb, cgens);
}

LinSpaceHom tangent_action(const BaseSpace& base, const std::vector<Poly>& gens, const Cone& cone,
                           const std::string& prefix) {
  const RingPtr& br = base.ring;
  std::vector<std::string> names;
  std::vector<int> twists;
  std::vector<VarDecl> taken = cone.ambient.ring->vars;
  for (const auto& v : br->vars) {
    std::string n = unique_name(taken, prefix + v.name);
    taken.push_back(VarDecl{n, 1, 0, 1});
    names.push_back(n);
    twists.push_back(v.base_weight);
  }
  LinearSpace actor = free_space(base, names, twists);
  std::vector<std::vector<Poly>> jac;
  for (const auto& g : gens) {
    Poly f = into(g, br);
    std::vector<Poly> row;
    for (int j = 0; j < br->nvars(); ++j) row.push_back(f.derivative(j));
    jac.push_back(std::move(row));
  }
  return linspace_hom(actor, cone.ambient, std::move(jac));
}

bool is_econe(const Cone& c, const LinSpaceHom& action) {
  if (!action.dst.ring->compatible(*c.ambient.ring))
    throw input_error("action does not target the cone's ambient space");
  const LinearSpace& actor = action.src;
  const RingPtr& ring = c.ambient.ring;

  // Extend by fresh copies of the actor coordinates.
  std::vector<VarDecl> taken = ring->vars;
  std::vector<VarDecl> fresh;
  for (int j = 0; j < actor.rank(); ++j) {
    std::string n = unique_name(taken, actor.ring->vars[actor.coords[j]].name);
    VarDecl d{n, 1, actor.twists[j], 1};
    taken.push_back(d);
    fresh.push_back(d);
  }
  RingPtr ext = extend_ring(ring, fresh, ring->order);
  std::vector<int> widx;
  for (const auto& d : fresh) widx.push_back(ext->index_of(d.name));

  // Translated coordinates: Y_i + sum_j m[i][j] * W_j.
  std::map<int, Poly> images;
  for (int i = 0; i < c.ambient.rank(); ++i) {
    Poly img = into(c.ambient.coord(i), ext);
    for (int j = 0; j < actor.rank(); ++j)
      if (!action.matrix[i][j].is_zero())
        img = img + into(action.matrix[i][j], ext) * Poly::variable(ext, widx[j]);
    images[c.ambient.coords[i]] = std::move(img);
  }

  // Target: the cone's ideal plus the actor's linear relations in the fresh
  // coordinates.
  std::vector<Poly> tgens;
  for (const auto& g : c.ideal.gens()) tgens.push_back(into(g, ext));
  for (const auto& rel : actor.sheaf.relations) {
    Poly form = Poly::zero(ext);
    for (int j = 0; j < actor.rank(); ++j)
      if (!rel[j].is_zero()) form = form + into(rel[j], ext) * Poly::variable(ext, widx[j]);
    if (!form.is_zero()) tgens.push_back(std::move(form));
  }
  Ideal target(ext, std::move(tgens));
  for (const auto& g : c.ideal.gens()) {
    Poly moved = substitute(into(g, ext), ext, images);
    if (!member(moved, target)) return false;
  }
  return true;
}

}  // namespace conecalc
