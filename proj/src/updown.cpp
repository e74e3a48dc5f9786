#include "conecalc/updown.hpp"

#include <utility>

namespace conecalc {
namespace {

Poly into(const Poly& p, const RingPtr& r) {
  if (p.is_zero()) return Poly::zero(r);
  return p.ring() == r ? p : transport(p, r);
}

// Presented module of a sheaf differential's cokernel.
PresentedModule coker_module(const TwoTermComplex& c) {
  PresentedModule m = c.e0.sheaf;
  for (const auto& row : c.d.matrix) m.relations.push_back(row);
  return m;
}

// Ring map realizing a geometric hom out of `from`: coordinate images as
// produced by pullback_images, base variables fixed.
RingMap coordinate_map(const LinearSpace& from, const RingPtr& dst,
                       const std::map<int, Poly>& images) {
  std::map<std::string, Poly> by_name;
  for (const auto& [idx, img] : images) by_name[from.ring->vars[idx].name] = img;
  return ring_map(from.ring, dst, by_name);
}

}  // namespace

TwoTermComplex two_term_complex(LinearSpace e0, LinearSpace e1, LinSpaceHom d) {
  if (!d.src.ring->compatible(*e0.ring) || !d.dst.ring->compatible(*e1.ring))
    throw input_error("differential endpoints do not match the complex terms");
  return TwoTermComplex{std::move(e0), std::move(e1), std::move(d)};
}

bool hom_equal(const LinSpaceHom& f, const LinSpaceHom& g) {
  if (!f.src.ring->compatible(*g.src.ring) || !f.dst.ring->compatible(*g.dst.ring)) return false;
  const PresentedModule& m = f.src.sheaf;
  std::vector<ModVec> rel_basis = span_basis(m, {});
  for (int i = 0; i < f.dst.rank(); ++i) {
    ModVec diff(m.rank);
    for (int j = 0; j < m.rank; ++j)
      diff[j] = into(f.matrix[i][j], m.ring) - into(g.matrix[i][j], m.ring);
    if (!span_contains(rel_basis, diff)) return false;
  }
  return true;
}

ComplexSquare complex_square(TwoTermComplex src, TwoTermComplex dst, LinSpaceHom phi0,
                             LinSpaceHom phi1) {
  if (!phi0.src.ring->compatible(*src.e0.ring) || !phi0.dst.ring->compatible(*dst.e0.ring) ||
      !phi1.src.ring->compatible(*src.e1.ring) || !phi1.dst.ring->compatible(*dst.e1.ring))
    throw input_error("square morphisms do not match the complex terms");
  if (!hom_equal(compose(dst.d, phi0), compose(phi1, src.d)))
    throw input_error("square does not commute");
  return ComplexSquare{std::move(src), std::move(dst), std::move(phi0), std::move(phi1)};
}

SquareCohomology square_cohomology(const ComplexSquare& s) {
  SquareCohomology out;

  // Degree 0: cokernels of the sheaf differentials, mapped by phi0's rows.
  PresentedModule coker_e = coker_module(s.dst);
  PresentedModule coker_f = coker_module(s.src);
  std::vector<ModVec> h0_cols;
  for (const auto& row : s.phi0.matrix) h0_cols.push_back(row);
  out.h0 = module_map(coker_e, coker_f, std::move(h0_cols));
  MapDiagnostics d0 = map_diagnostics(out.h0);
  out.h0_injective = d0.injective;
  out.h0_surjective = d0.surjective;

  // Degree -1: kernels of the sheaf differentials. Kernel generators of the
  // target side map into the kernel span of the source side because the
  // square commutes; express them over the computed kernel generators.
  ModuleMap de = s.dst.d.sheaf_map();
  ModuleMap df = s.src.d.sheaf_map();
  MapDiagnostics ke = map_diagnostics(de);
  MapDiagnostics kf = map_diagnostics(df);
  ModuleMap phi1_sheaf = s.phi1.sheaf_map();
  std::vector<ModVec> h1_cols;
  for (const auto& k : ke.kernel_gens) {
    ModVec w = map_apply(phi1_sheaf, k);
    auto coeffs = express_in_span(s.src.e1.sheaf, kf.kernel_gens, w);
    if (!coeffs)
      throw conecalc_error("cohomology image misses the kernel; square data inconsistent");
    h1_cols.push_back(std::move(*coeffs));
  }
  out.hminus1 = module_map(ke.kernel, kf.kernel, std::move(h1_cols));
  MapDiagnostics d1 = map_diagnostics(out.hminus1);
  out.hminus1_injective = d1.injective;
  out.hminus1_surjective = d1.surjective;
  return out;
}

ExactnessFlags associated_sequence_exactness(const ComplexSquare& s) {
  const PresentedModule& se0 = s.dst.e0.sheaf;  // E(0)
  const PresentedModule& se1 = s.dst.e1.sheaf;  // E(-1)
  const PresentedModule& sf0 = s.src.e0.sheaf;  // F(0)
  const PresentedModule& sf1 = s.src.e1.sheaf;  // F(-1)
  const RingPtr& r = se0.ring;

  // Middle term E(0) (+) F(-1).
  PresentedModule mid{r, se0.base, se0.rank + sf1.rank, {}};
  for (const auto& rel : se0.relations) {
    ModVec v = rel;
    v.resize(mid.rank, Poly::zero(r));
    mid.relations.push_back(std::move(v));
  }
  for (const auto& rel : sf1.relations) {
    ModVec v = modvec_zero(r, mid.rank);
    for (int i = 0; i < sf1.rank; ++i) v[se0.rank + i] = into(rel[i], r);
    mid.relations.push_back(std::move(v));
  }

  // First map E(-1) -> mid: (differential, phi in degree -1).
  std::vector<ModVec> a_cols;
  for (int i = 0; i < se1.rank; ++i) {
    ModVec v = modvec_zero(r, mid.rank);
    for (int j = 0; j < se0.rank; ++j) v[j] = into(s.dst.d.matrix[i][j], r);
    for (int j = 0; j < sf1.rank; ++j) v[se0.rank + j] = into(s.phi1.matrix[i][j], r);
    a_cols.push_back(std::move(v));
  }
  ModuleMap a = module_map(se1, mid, a_cols);

  // Second map mid -> F(0): phi in degree 0 minus the source differential.
  std::vector<ModVec> b_cols;
  for (int j = 0; j < se0.rank; ++j) b_cols.push_back(s.phi0.matrix[j]);
  for (int j = 0; j < sf1.rank; ++j) {
    ModVec v;
    for (const auto& p : s.src.d.matrix[j]) v.push_back(-into(p, r));
    b_cols.push_back(std::move(v));
  }
  ModuleMap b = module_map(mid, sf0, b_cols);

  ExactnessFlags flags;
  MapDiagnostics da = map_diagnostics(a);
  MapDiagnostics db = map_diagnostics(b);
  flags.at_source = da.injective;
  flags.at_target = db.surjective;
  std::vector<ModVec> image = span_basis(mid, a_cols);
  flags.at_middle = true;
  for (const auto& k : db.kernel_gens)
    if (!span_contains(image, k)) {
      flags.at_middle = false;
      break;
    }
  return flags;
}

Applicability going_down_applicability(const ComplexSquare& s) {
  SquareCohomology coh = square_cohomology(s);
  if (!coh.h0_iso())
    return {false, "degree-0 cohomology of the sheaf map is not an isomorphism"};
  if (!coh.hminus1_surjective)
    return {false, "degree--1 cohomology of the sheaf map is not surjective"};
  if (!locally_free_rank(s.src.e0).has_value())
    return {false, "degree-0 term of the source complex is not locally free"};
  return {true, ""};
}

Cone going_up(const ComplexSquare& s, const Cone& cbar) {
  if (!cbar.ambient.ring->compatible(*s.dst.e1.ring))
    throw input_error("cone does not live in the target complex's degree-1 term");
  RingMap rm = coordinate_map(s.dst.e1, s.src.e1.ring, pullback_images(s.phi1));
  Ideal moved = apply(rm, cbar.ideal);
  return make_cone(s.src.e1, moved.gens());
}

Cone going_down(const ComplexSquare& s, const Cone& c) {
  if (!c.ambient.ring->compatible(*s.src.e1.ring))
    throw input_error("cone does not live in the source complex's degree-1 term");
  Applicability ok = going_down_applicability(s);
  if (!ok.applicable) throw applicability_error("going down not applicable: " + ok.reason);

  const LinearSpace& e0 = s.dst.e0;
  const LinearSpace& e1 = s.dst.e1;
  const LinearSpace& f1 = s.src.e1;
  LinearSpace big = direct_sum(e0, f1);

  // q : e0 (+) f1 -> e1 combines the differential with phi1.
  std::vector<std::vector<Poly>> qm;
  for (int i = 0; i < e1.rank(); ++i) {
    std::vector<Poly> row;
    for (int j = 0; j < e0.rank(); ++j) row.push_back(s.dst.d.matrix[i][j]);
    for (int j = 0; j < f1.rank(); ++j) row.push_back(s.phi1.matrix[i][j]);
    qm.push_back(std::move(row));
  }
  LinSpaceHom q = linspace_hom(big, e1, std::move(qm));

  // Ideal of e0 (+) c inside big (the f1 block may have been renamed).
  std::map<int, Poly> embed;
  for (int j = 0; j < f1.rank(); ++j) embed[f1.coords[j]] = big.coord(e0.rank() + j);
  std::vector<Poly> bc_gens = big.ideal.gens();
  for (const auto& g : c.ideal.gens())
    bc_gens.push_back(substitute(into(g, f1.ring), big.ring, embed));
  Ideal bc(big.ring, bc_gens);

  // The pushed cone is the scheme-theoretic image of e0 (+) c under q.
  RingMap rm = coordinate_map(e1, big.ring, pullback_images(q));
  Ideal pre = preimage(rm, bc);
  Cone cbar = make_cone(e1, pre.gens());

  // Defining property: the preimage of the result must be e0 (+) c.
  Cone lifted = make_cone(big, apply(rm, cbar.ideal).gens());
  Cone expected = make_cone(big, bc.gens());
  if (!cone_equal(lifted, expected))
    throw applicability_error("cone does not push forward along this square");
  return cbar;
}

Cone going_down_derived(const DerivedMorphism& dm, const Cone& c) {
  if (!square_cohomology(dm.theta).quasi_iso())
    throw applicability_error("comparison square is not a quasi-isomorphism");
  Cone mid = going_down(dm.psi, c);
  return going_up(dm.theta, mid);
}

DescendResult descend_check(const LinSpaceHom& p, const Cone& c) {
  if (!p.src.ring->compatible(*c.ambient.ring))
    throw input_error("projection does not start at the cone's ambient space");
  if (!sheaf_map_injective(p))
    throw input_error("descent projection must have an injective sheaf map");

  RingMap rm = coordinate_map(p.dst, c.ambient.ring, pullback_images(p));
  Ideal candidate_ideal = preimage(rm, c.ideal);
  DescendResult out;
  out.candidate = make_cone(p.dst, candidate_ideal.gens());
  Cone extension = make_cone(c.ambient, apply(rm, out.candidate.ideal).gens());
  Cone reference = make_cone(c.ambient, c.ideal.gens());
  out.descends = cone_equal(extension, reference);
  return out;
}

}  // namespace conecalc
