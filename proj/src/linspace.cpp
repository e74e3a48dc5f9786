#include "conecalc/linspace.hpp"

#include <algorithm>
#include <set>

namespace conecalc {
namespace {

std::string unique_name(const std::vector<VarDecl>& taken, std::string stem) {
  auto used = [&](const std::string& n) {
    for (const auto& v : taken)
      if (v.name == n) return true;
    return false;
  };
  std::string name = stem;
  while (used(name)) name += "_2";
  return name;
}

// Transport a polynomial's coefficients into r when needed.
Poly into(const Poly& p, const RingPtr& r) {
  if (p.is_zero()) return Poly::zero(r);
  return p.ring() == r ? p : transport(p, r);
}

// Determinant of a square matrix of polynomials by first-column expansion.
Poly poly_det(const RingPtr& r, const std::vector<std::vector<Poly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(r, Rat(1));
  if (n == 1) return m[0][0];
  Poly det = Poly::zero(r);
  for (int i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    sub.reserve(n - 1);
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      sub.emplace_back(m[k].begin() + 1, m[k].end());
    }
    Poly cof = m[i][0] * poly_det(r, sub);
    det = (i % 2 == 0) ? det + cof : det - cof;
  }
  return det;
}

// All size-k minors of an n x s matrix.
std::vector<Poly> minors(const RingPtr& r, const std::vector<std::vector<Poly>>& m, int k) {
  const int n = static_cast<int>(m.size());
  const int s = n == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<Poly> out;
  if (k == 0) {
    out.push_back(Poly::constant(r, Rat(1)));
    return out;
  }
  if (k > n || k > s) return out;
  std::vector<int> rows(k), cols(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  auto next = [&](std::vector<int>& idx, int bound) {
    int i = k - 1;
    while (i >= 0 && idx[i] == bound - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    for (int i = 0; i < k; ++i) cols[i] = i;
    do {
      std::vector<std::vector<Poly>> sub(k, std::vector<Poly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
      Poly d = poly_det(r, sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    } while (next(cols, s));
  } while (next(rows, n));
  return out;
}

}  // namespace

BaseSpace make_base(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                    bool projective) {
  RingPtr r = base_ring(vars);
  return BaseSpace{r, Ideal::from_strings(r, gens), projective};
}

LinearSpace linear_space(const BaseSpace& base, const PresentedModule& sheaf,
                         const std::vector<std::string>& coord_names,
                         const std::vector<int>& twists) {
  const int k = sheaf.rank;
  if (static_cast<int>(coord_names.size()) != k || static_cast<int>(twists.size()) != k)
    throw input_error("linear space needs one coordinate name and twist per sheaf generator");
  std::vector<VarDecl> decls = base.ring->vars;
  for (int i = 0; i < k; ++i) {
    for (const auto& v : decls)
      if (v.name == coord_names[i]) throw input_error("coordinate name already taken: " + v.name);
    decls.push_back(VarDecl{coord_names[i], 1, twists[i], 1});
  }
  RingPtr ring = make_ring(decls, base.ring->order);

  LinearSpace e;
  e.base = base;
  e.ring = ring;
  for (int i = 0; i < k; ++i) e.coords.push_back(ring->index_of(coord_names[i]));
  e.twists = twists;
  e.sheaf = PresentedModule{base.ring, base.ideal, k, {}};
  std::vector<Poly> forms;
  for (const auto& g : base.ideal.gens()) forms.push_back(into(g, ring));
  for (const auto& rel : sheaf.relations) {
    ModVec v;
    for (const auto& p : rel) v.push_back(into(p, base.ring));
    e.sheaf.relations.push_back(v);
    Poly form = Poly::zero(ring);
    for (int i = 0; i < k; ++i)
      if (!v[i].is_zero()) form = form + into(v[i], ring) * Poly::variable(ring, e.coords[i]);
    if (!form.is_zero()) forms.push_back(std::move(form));
  }
  e.ideal = Ideal(ring, std::move(forms));
  return e;
}

LinearSpace free_space(const BaseSpace& base, const std::vector<std::string>& coord_names,
                       const std::vector<int>& twists) {
  return linear_space(base, free_module(base.ring, base.ideal, coord_names.size()), coord_names,
                      twists);
}

LinearSpace direct_sum(const LinearSpace& a, const LinearSpace& b) {
  if (!a.base.ring->compatible(*b.base.ring) || !ideal_equal(a.base.ideal, b.base.ideal))
    throw input_error("direct sum needs a common base");
  std::vector<std::string> names;
  std::vector<int> twists;
  std::vector<VarDecl> taken = a.ring->vars;
  for (int i = 0; i < a.rank(); ++i) {
    names.push_back(a.ring->vars[a.coords[i]].name);
    twists.push_back(a.twists[i]);
  }
  for (int i = 0; i < b.rank(); ++i) {
    std::string n = unique_name(taken, b.ring->vars[b.coords[i]].name);
    taken.push_back(VarDecl{n, 1, 0, 1});
    names.push_back(n);
    twists.push_back(b.twists[i]);
  }
  PresentedModule sum{a.base.ring, a.base.ideal, a.rank() + b.rank(), {}};
  for (const auto& rel : a.sheaf.relations) {
    ModVec v = rel;
    v.resize(sum.rank, Poly::zero(a.base.ring));
    sum.relations.push_back(std::move(v));
  }
  for (const auto& rel : b.sheaf.relations) {
    ModVec v = modvec_zero(a.base.ring, sum.rank);
    for (int i = 0; i < b.rank(); ++i) v[a.rank() + i] = into(rel[i], a.base.ring);
    sum.relations.push_back(std::move(v));
  }
  return linear_space(a.base, sum, names, twists);
}

std::optional<int> locally_free_rank(const LinearSpace& e) {
  const RingPtr& br = e.base.ring;
  const Ideal& I = e.base.ideal;
  Ideal on_x = e.base.projective ? saturate(I, coordinate_ideal(br, false)) : I;
  auto vanishes = [&](const std::vector<Poly>& ps) {
    for (const auto& p : ps)
      if (!member(p, on_x)) return false;
    return true;
  };
  auto is_all_of_x = [&](std::vector<Poly> ps) {
    for (const auto& g : I.gens()) ps.push_back(g);
    Ideal J(br, std::move(ps));
    if (e.base.projective) J = saturate(J, coordinate_ideal(br, false));
    return is_unit_ideal(J);
  };

  // Presentation matrix over the base ring: one column per sheaf relation,
  // entries reduced modulo X's ideal, zero columns dropped.
  const int n = e.sheaf.rank;
  std::vector<std::vector<Poly>> m(n);
  for (const auto& rel : e.sheaf.relations) {
    std::vector<Poly> col;
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
      Poly p = normal_form(into(rel[i], br), I.groebner());
      all_zero = all_zero && p.is_zero();
      col.push_back(std::move(p));
    }
    if (all_zero) continue;
    for (int i = 0; i < n; ++i) m[i].push_back(col[i]);
  }

  for (int rho = n; rho >= 0; --rho) {
    if (!vanishes(minors(br, m, n - rho + 1))) continue;
    if (!is_all_of_x(minors(br, m, n - rho))) continue;
    return rho;
  }
  return std::nullopt;
}

ModuleMap LinSpaceHom::sheaf_map() const {
  std::vector<ModVec> cols;
  for (const auto& row : matrix) cols.push_back(row);
  return module_map(dst.sheaf, src.sheaf, std::move(cols));
}

LinSpaceHom linspace_hom(const LinearSpace& src, const LinearSpace& dst,
                         std::vector<std::vector<Poly>> matrix) {
  if (!src.base.ring->compatible(*dst.base.ring) ||
      !ideal_equal(src.base.ideal, dst.base.ideal))
    throw input_error("linear space morphism needs a common base");
  if (static_cast<int>(matrix.size()) != dst.rank())
    throw input_error("morphism matrix needs one row per target coordinate");
  for (auto& row : matrix) {
    if (static_cast<int>(row.size()) != src.rank())
      throw input_error("morphism matrix needs one column per source coordinate");
    for (auto& p : row) p = into(p, src.base.ring);
  }
  LinSpaceHom f{src, dst, std::move(matrix)};
  f.sheaf_map();  // validates against the sheaf relations
  return f;
}

LinSpaceHom identity_hom(const LinearSpace& e) {
  std::vector<std::vector<Poly>> m(e.rank(), std::vector<Poly>(e.rank(), Poly::zero(e.base.ring)));
  for (int i = 0; i < e.rank(); ++i) m[i][i] = Poly::constant(e.base.ring, Rat(1));
  return linspace_hom(e, e, std::move(m));
}

LinSpaceHom zero_hom(const LinearSpace& src, const LinearSpace& dst) {
  std::vector<std::vector<Poly>> m(dst.rank(),
                                   std::vector<Poly>(src.rank(), Poly::zero(src.base.ring)));
  return linspace_hom(src, dst, std::move(m));
}

LinSpaceHom compose(const LinSpaceHom& g, const LinSpaceHom& f) {
  if (!f.dst.ring->compatible(*g.src.ring))
    throw input_error("composition endpoints do not match");
  const RingPtr& br = f.src.base.ring;
  std::vector<std::vector<Poly>> m(g.dst.rank(),
                                   std::vector<Poly>(f.src.rank(), Poly::zero(br)));
  for (int i = 0; i < g.dst.rank(); ++i)
    for (int j = 0; j < f.src.rank(); ++j)
      for (int k = 0; k < f.dst.rank(); ++k)
        m[i][j] = m[i][j] + into(g.matrix[i][k], br) * f.matrix[k][j];
  return linspace_hom(f.src, g.dst, std::move(m));
}

LinSpaceHom hom_add(const LinSpaceHom& f, const LinSpaceHom& g) {
  if (!f.src.ring->compatible(*g.src.ring) || !f.dst.ring->compatible(*g.dst.ring))
    throw input_error("sum endpoints do not match");
  std::vector<std::vector<Poly>> m = f.matrix;
  for (int i = 0; i < f.dst.rank(); ++i)
    for (int j = 0; j < f.src.rank(); ++j)
      m[i][j] = m[i][j] + into(g.matrix[i][j], f.src.base.ring);
  return linspace_hom(f.src, f.dst, std::move(m));
}

std::map<int, Poly> pullback_images(const LinSpaceHom& f) {
  std::map<int, Poly> images;
  for (int i = 0; i < f.dst.rank(); ++i) {
    Poly img = Poly::zero(f.src.ring);
    for (int j = 0; j < f.src.rank(); ++j)
      if (!f.matrix[i][j].is_zero())
        img = img + into(f.matrix[i][j], f.src.ring) * f.src.coord(j);
    images[f.dst.coords[i]] = std::move(img);
  }
  return images;
}

Poly pullback(const LinSpaceHom& f, const Poly& p) {
  return substitute(p, f.src.ring, pullback_images(f));
}

bool sheaf_map_injective(const LinSpaceHom& f) { return map_diagnostics(f.sheaf_map()).injective; }

bool sheaf_map_surjective(const LinSpaceHom& f) {
  return map_diagnostics(f.sheaf_map()).surjective;
}

}  // namespace conecalc
