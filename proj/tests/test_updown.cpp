#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conecalc/updown.hpp"

using namespace conecalc;

namespace {

Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

ModVec V(const RingPtr& r, std::vector<std::string> entries) {
  ModVec v;
  for (const auto& s : entries) v.push_back(parse_poly(r, s));
  return v;
}

std::vector<std::vector<Poly>> M(const RingPtr& r,
                                 std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<Poly>> m;
  for (auto& row : rows) {
    std::vector<Poly> out;
    for (auto& s : row) out.push_back(parse_poly(r, s));
    m.push_back(std::move(out));
  }
  return m;
}

// One-variable base with the complex [V --t--> U]; the degree-1 term of the
// target complex gains a trivial summand W, so phi1 is the inclusion.
struct SplitInclusion {
  BaseSpace line;
  LinearSpace f0, f1, e1;
  TwoTermComplex src, dst;
  ComplexSquare sq;

  SplitInclusion()
      : line(make_base({"t"}, {})),
        f0(free_space(line, {"V"}, {0})),
        f1(free_space(line, {"U"}, {0})),
        e1(direct_sum(f1, free_space(line, {"W"}, {0}))),
        src(two_term_complex(f0, f1, linspace_hom(f0, f1, M(line.ring, {{"t"}})))),
        dst(two_term_complex(f0, e1, linspace_hom(f0, e1, M(line.ring, {{"t"}, {"0"}})))),
        sq(complex_square(src, dst, identity_hom(f0),
                          linspace_hom(f1, e1, M(line.ring, {{"1"}, {"0"}})))) {}
};

}  // namespace

TEST_CASE("squares must commute") {
  BaseSpace line = make_base({"u"}, {});
  LinearSpace e0 = free_space(line, {"Y"}, {0});
  LinearSpace e1 = free_space(line, {"Z"}, {0});
  LinSpaceHom d = linspace_hom(e0, e1, M(line.ring, {{"u"}}));
  TwoTermComplex c = two_term_complex(e0, e1, d);

  CHECK_THROWS_AS(two_term_complex(e0, e1, identity_hom(e0)), input_error);
  CHECK_NOTHROW(complex_square(c, c, identity_hom(e0), identity_hom(e1)));
  // Doubling only one leg breaks the square: d*1 != 2*d on the sheaf.
  CHECK_THROWS_AS(
      complex_square(c, c, identity_hom(e0), linspace_hom(e1, e1, M(line.ring, {{"2"}}))),
      input_error);
}

TEST_CASE("morphism equality is computed on the sheaf") {
  BaseSpace line = make_base({"u"}, {});
  PresentedModule torsion{line.ring, Ideal::zero(line.ring), 1, {V(line.ring, {"u"})}};
  LinearSpace t = linear_space(line, torsion, {"Z"}, {0});

  // 1 and 1+u agree on the structure sheaf of the origin; 1 and 2 do not.
  CHECK(hom_equal(identity_hom(t), linspace_hom(t, t, M(line.ring, {{"1 + u"}}))));
  CHECK_FALSE(hom_equal(identity_hom(t), linspace_hom(t, t, M(line.ring, {{"2"}}))));
}

TEST_CASE("homotopy shears are quasi-isomorphisms") {
  BaseSpace line = make_base({"u"}, {});
  LinearSpace e0 = free_space(line, {"Y"}, {0});
  LinearSpace e1 = free_space(line, {"Z"}, {0});
  TwoTermComplex c = two_term_complex(e0, e1, linspace_hom(e0, e1, M(line.ring, {{"u"}})));

  // Shear of the identity by the homotopy Z -> Y sending Z to Y: both legs
  // become 1+u, and the square stays commutative.
  ComplexSquare shear =
      complex_square(c, c, linspace_hom(e0, e0, M(line.ring, {{"1 + u"}})),
                     linspace_hom(e1, e1, M(line.ring, {{"1 + u"}})));
  SquareCohomology coh = square_cohomology(shear);
  CHECK(coh.h0_iso());
  CHECK(coh.hminus1_iso());
  CHECK(coh.quasi_iso());
  CHECK(coh.cartesian());
  CHECK(coh.cocartesian());

  ExactnessFlags fl = associated_sequence_exactness(shear);
  CHECK(fl.at_source);
  CHECK(fl.at_middle);
  CHECK(fl.at_target);
}

TEST_CASE("going down and up along a split inclusion") {
  SplitInclusion s;
  const RingPtr& r1 = s.f1.ring;
  const RingPtr& rb = s.e1.ring;

  CHECK(going_down_applicability(s.sq).applicable);

  // The fiber of F1 over the origin pushes down to the fiber of E1 = F1 (+) W
  // crossed with the zero section of the trivial summand.
  Cone c = make_cone(s.f1, {P(r1, "t")});
  Cone down = going_down(s.sq, c);
  CHECK(ideal_equal(down.ideal, Ideal::from_strings(rb, {"t", "W"})));
  CHECK(cone_equal(going_up(s.sq, down), c));

  // Pull-then-push is not the identity: the trivial factor collapses.
  Cone cfull = make_cone(s.e1, {P(rb, "t")});
  Cone up = going_up(s.sq, cfull);
  CHECK(cone_equal(up, c));
  Cone back = going_down(s.sq, up);
  CHECK(ideal_equal(back.ideal, down.ideal));
  CHECK_FALSE(cone_equal(back, cfull));

  // The zero section of F1 is not invariant under translation by t*V, so the
  // preimage certificate rejects it.
  CHECK_THROWS_AS(going_down(s.sq, zero_section_cone(s.f1)), applicability_error);

  SquareCohomology coh = square_cohomology(s.sq);
  CHECK(coh.h0_iso());
  CHECK(coh.hminus1_surjective);
  CHECK_FALSE(coh.hminus1_injective);
  CHECK(coh.cocartesian());
  CHECK_FALSE(coh.cartesian());

  // The associated sequence sees exactly the same defect, term by term.
  ExactnessFlags fl = associated_sequence_exactness(s.sq);
  CHECK_FALSE(fl.at_source);
  CHECK(fl.at_middle);
  CHECK(fl.at_target);
  CHECK(fl.at_target == coh.h0_surjective);
  CHECK(fl.at_middle == (coh.h0_injective && coh.hminus1_surjective));
  CHECK(fl.at_source == coh.hminus1_injective);

  // cfull is the preimage of c under the projection onto F1; down is not a
  // preimage of anything.
  LinSpaceHom proj = linspace_hom(s.e1, s.f1, M(s.line.ring, {{"1", "0"}}));
  DescendResult dr = descend_check(proj, cfull);
  CHECK(dr.descends);
  CHECK(cone_equal(dr.candidate, c));
  CHECK_FALSE(descend_check(proj, down).descends);
}

TEST_CASE("going down needs the right cohomology") {
  BaseSpace line = make_base({"t"}, {});
  LinearSpace z = free_space(line, {}, {});
  LinearSpace ff = free_space(line, {"UF"}, {0});
  LinearSpace fe = free_space(line, {"UE"}, {0});
  TwoTermComplex src = two_term_complex(z, ff, linspace_hom(z, ff, {{}}));
  TwoTermComplex dst = two_term_complex(z, fe, linspace_hom(z, fe, {{}}));

  // Zero phi1 between complexes with no differential: degree -1 cohomology is
  // the zero map onto a free rank-1 module.
  ComplexSquare bad = complex_square(src, dst, identity_hom(z),
                                     linspace_hom(ff, fe, M(line.ring, {{"0"}})));
  Applicability ap = going_down_applicability(bad);
  CHECK_FALSE(ap.applicable);
  CHECK(ap.reason.find("surjective") != std::string::npos);
  CHECK_THROWS_AS(going_down(bad, make_cone(ff, {})), applicability_error);

  // With phi1 = 1 the square is a quasi-isomorphism and cones transport.
  ComplexSquare good = complex_square(src, dst, identity_hom(z),
                                      linspace_hom(ff, fe, M(line.ring, {{"1"}})));
  CHECK(square_cohomology(good).quasi_iso());
  CHECK(going_down_applicability(good).applicable);
  CHECK(cone_equal(going_down(good, zero_section_cone(ff)), zero_section_cone(fe)));

  // A source whose degree-0 term is not locally free is rejected even when
  // the cohomology looks right.
  BaseSpace fp = make_base({"x", "y"}, {"x^2", "x*y", "y^2"});
  Cone nc = normal_cone(
      fp, {P(fp.ring, "x^2"), P(fp.ring, "x*y"), P(fp.ring, "y^2")}, {"A", "B", "C"});
  LinearSpace zfp = free_space(fp, {}, {});
  TwoTermComplex stub =
      two_term_complex(nc.ambient, zfp, linspace_hom(nc.ambient, zfp, {}));
  ComplexSquare id_stub =
      complex_square(stub, stub, identity_hom(nc.ambient), identity_hom(zfp));
  Applicability ap2 = going_down_applicability(id_stub);
  CHECK_FALSE(ap2.applicable);
  CHECK(ap2.reason.find("locally free") != std::string::npos);
}

TEST_CASE("derived pushforward goes through a comparison square") {
  SplitInclusion s;
  Cone c = make_cone(s.f1, {P(s.f1.ring, "t")});
  Ideal want = Ideal::from_strings(s.e1.ring, {"t", "W"});

  // Identity comparison square reduces to the plain pushforward.
  ComplexSquare theta_id =
      complex_square(s.dst, s.dst, identity_hom(s.f0), identity_hom(s.e1));
  CHECK(ideal_equal(going_down_derived({s.dst, theta_id, s.sq}, c).ideal, want));

  // Shear comparison square (homotopy E1 -> E0 picking out the U leg).
  ComplexSquare theta_shear = complex_square(
      s.dst, s.dst, linspace_hom(s.f0, s.f0, M(s.line.ring, {{"1 + t"}})),
      linspace_hom(s.e1, s.e1, M(s.line.ring, {{"1 + t", "0"}, {"0", "1"}})));
  CHECK(square_cohomology(theta_shear).quasi_iso());
  CHECK(ideal_equal(going_down_derived({s.dst, theta_shear, s.sq}, c).ideal, want));

  // A comparison square that is not a quasi-isomorphism is refused.
  BaseSpace line = make_base({"t"}, {});
  LinearSpace z = free_space(line, {}, {});
  LinearSpace ff = free_space(line, {"UF"}, {0});
  LinearSpace fe = free_space(line, {"UE"}, {0});
  TwoTermComplex esrc = two_term_complex(z, ff, linspace_hom(z, ff, {{}}));
  TwoTermComplex g = two_term_complex(z, fe, linspace_hom(z, fe, {{}}));
  ComplexSquare theta_bad = complex_square(esrc, g, identity_hom(z),
                                           linspace_hom(ff, fe, M(line.ring, {{"0"}})));
  ComplexSquare psi_id = complex_square(g, g, identity_hom(z), identity_hom(fe));
  CHECK_THROWS_AS(going_down_derived({g, theta_bad, psi_id}, make_cone(fe, {})),
                  applicability_error);
}

TEST_CASE("the fat point cone does not descend") {
  BaseSpace fp = make_base({"x", "y"}, {"x^2", "x*y", "y^2"});
  std::vector<Poly> gens = {P(fp.ring, "x^2"), P(fp.ring, "x*y"), P(fp.ring, "y^2")};
  Cone nc = normal_cone(fp, gens, {"A", "B", "C"});

  CHECK(descend_check(identity_hom(nc.ambient), nc).descends);

  // The kernel of the conormal differential is spanned by the coordinate
  // multiples below; Q is the linear space of that kernel sheaf.
  const PresentedModule& conormal = nc.ambient.sheaf;
  std::vector<ModVec> six = {
      V(fp.ring, {"x", "0", "0"}), V(fp.ring, {"y", "0", "0"}),
      V(fp.ring, {"0", "x", "0"}), V(fp.ring, {"0", "y", "0"}),
      V(fp.ring, {"0", "0", "x"}), V(fp.ring, {"0", "0", "y"})};
  PresentedModule qsheaf{fp.ring, fp.ideal, 6, syzygies_mod(conormal, six)};
  LinearSpace q = linear_space(fp, qsheaf, {"K0", "K1", "K2", "K3", "K4", "K5"},
                               {3, 3, 3, 3, 3, 3});
  LinSpaceHom p = linspace_hom(nc.ambient, q,
                               M(fp.ring, {{"x", "0", "0"},
                                           {"y", "0", "0"},
                                           {"0", "x", "0"},
                                           {"0", "y", "0"},
                                           {"0", "0", "x"},
                                           {"0", "0", "y"}}));
  CHECK(sheaf_map_injective(p));
  CHECK_FALSE(descend_check(p, nc).descends);

  // Projections without injective sheaf maps are rejected outright.
  CHECK_THROWS_AS(descend_check(zero_hom(nc.ambient, q), nc), input_error);
}
