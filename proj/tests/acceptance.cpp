// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
// Every value checked here is exact; the budgets are generous wall-clock
// ceilings for a laptop-class machine, and blowing one fails the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conecalc/fixtures.hpp"
#include "conecalc/job.hpp"
#include "conecalc/suites.hpp"
#include "conecalc/updown.hpp"
#include "conecalc/vfc.hpp"

using namespace conecalc;

namespace {

struct check_failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw check_failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

std::vector<Poly> V(const RingPtr& r, std::vector<std::string> texts) {
  std::vector<Poly> out;
  for (const auto& s : texts) out.push_back(parse_poly(r, s));
  return out;
}

ChowClass C(int ambient, std::map<int, long> coeffs) {
  std::map<int, Rat> exact;
  for (auto [m, c] : coeffs) exact[m] = rat_make(c);
  return chow_class(ambient, exact);
}

void expect_chow(const ChowClass& got, const ChowClass& want,
                 const std::string& what) {
  expect(chow_equal(got, want),
         what + ": got " + chow_str(got) + ", want " + chow_str(want));
}

BaseSpace conic() { return make_base({"x0", "x1", "x2"}, {"x0*x2 - x1^2"}, true); }
BaseSpace fat_point() { return make_base({"x", "y"}, {"x^2", "x*y", "y^2"}); }

Cone normal_cone_of(const BaseSpace& base, const std::vector<std::string>& gens,
                    const std::vector<std::string>& names) {
  return normal_cone(base, V(base.ring, gens), names);
}

// --- criterion bodies ------------------------------------------------------

void c1_normal_cone() {
  BaseSpace fp = fat_point();
  Cone nc = normal_cone_of(fp, {"x^2", "x*y", "y^2"}, {"A", "B", "C"});
  Ideal want = Ideal::from_strings(
      nc.ambient.ring,
      {"B^2 - A*C", "x*C - y*B", "x*B - y*A", "x^2", "x*y", "y^2"});
  expect(ideal_equal(nc.ideal, want), "normal cone ideal mismatch");
}

void c2_descend_obstruction() {
  BaseSpace fp = fat_point();
  std::vector<Poly> gens = V(fp.ring, {"x^2", "x*y", "y^2"});
  Cone nc = normal_cone(fp, gens, {"A", "B", "C"});

  // Kernel of the conormal differential A dx^2.., i.e. of
  // (A,B,C) -> (2xA + yB, xB + 2yC), must be every coordinate multiple of
  // the two base variables.
  PresentedModule omega = free_module(fp.ring, fp.ideal, 2);
  ModuleMap diff = module_map(
      nc.ambient.sheaf, omega,
      {V(fp.ring, {"2*x", "0"}), V(fp.ring, {"y", "x"}), V(fp.ring, {"0", "2*y"})});
  MapDiagnostics md = map_diagnostics(diff);
  expect(!md.injective, "conormal differential should have a kernel");
  std::vector<ModVec> multiples = {
      V(fp.ring, {"x", "0", "0"}), V(fp.ring, {"y", "0", "0"}),
      V(fp.ring, {"0", "x", "0"}), V(fp.ring, {"0", "y", "0"}),
      V(fp.ring, {"0", "0", "x"}), V(fp.ring, {"0", "0", "y"})};
  expect(span_equal(nc.ambient.sheaf, md.kernel_gens, multiples),
         "kernel module is not (x,y)*(A,B,C)");

  // The projection onto the linear space of that kernel sheaf is exactly the
  // map the cone would have to descend along, and it does not.
  PresentedModule qsheaf{fp.ring, fp.ideal, 6,
                         syzygies_mod(nc.ambient.sheaf, multiples)};
  LinearSpace q = linear_space(fp, qsheaf, {"K0", "K1", "K2", "K3", "K4", "K5"},
                               {3, 3, 3, 3, 3, 3});
  LinSpaceHom p = linspace_hom(nc.ambient, q,
                               {V(fp.ring, {"x", "0", "0"}),
                                V(fp.ring, {"y", "0", "0"}),
                                V(fp.ring, {"0", "x", "0"}),
                                V(fp.ring, {"0", "y", "0"}),
                                V(fp.ring, {"0", "0", "x"}),
                                V(fp.ring, {"0", "0", "y"})});
  expect(sheaf_map_injective(p), "projection must have an injective sheaf map");
  expect(!descend_check(p, nc).descends, "fat point cone must not descend");
}

void c3_segre() {
  struct Case {
    const char* label;
    BaseSpace base;
    std::vector<std::string> gens;
    std::vector<std::string> names;
    ChowClass want;
  };
  std::vector<Case> cases;
  cases.push_back({"conic", conic(), {"x0*x2 - x1^2"}, {"A"}, C(2, {{1, 2}, {0, -4}})});
  cases.push_back({"fat point", fat_point(), {"x^2", "x*y", "y^2"},
                   {"A", "B", "C"}, C(2, {{0, 4}})});
  cases.push_back({"cube point",
                   make_base({"x", "y"}, {"x^3", "x^2*y", "x*y^2", "y^3"}),
                   {"x^3", "x^2*y", "x*y^2", "y^3"}, {"A", "B", "C", "D"},
                   C(2, {{0, 9}})});
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    ChowClass s = segre_class(normal_cone_of(c.base, c.gens, c.names));
    expect_chow(s, c.want, std::string("segre of ") + c.label);
    expect(seconds_since(t0) < 10.0, std::string(c.label) + " over 10s budget");
  }
}

void c4_fulton() {
  EmbeddedScheme p2 = make_embedded(make_base({"x0", "x1", "x2"}, {}, true));
  expect_chow(fulton_class(p2), C(2, {{2, 1}, {1, 3}, {0, 3}}), "plane");

  ChowClass fc = fulton_class(make_embedded(conic()));
  expect_chow(fc, C(2, {{1, 2}, {0, 2}}), "conic");

  // Embedding invariance of the degree-zero part: the conic and the twisted
  // cubic are the same abstract curve, the fat points the same thick point.
  ChowClass fcubic = fulton_class(make_embedded(
      make_base({"x0", "x1", "x2", "x3"},
                {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, true)));
  expect(fcubic.coeffs[0] == fc.coeffs[0] && fc.coeffs[0] == rat_make(2),
         "conic and twisted cubic degree-0 parts must both be 2");

  ChowClass ffp = fulton_class(make_embedded(fat_point()));
  ChowClass ffp3 = fulton_class(
      make_embedded(make_base({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z"})));
  expect(ffp.coeffs[0] == rat_make(4) && ffp3.coeffs[0] == rat_make(4),
         "fat point multiplicity must be 4 in both ambient spaces");
}

NormalSpaceData conic_section(const BaseSpace& b) {
  return section_of_bundle({2}, {P(b.ring, "x0*x2 - x1^2")});
}

void c5_vfc() {
  RingPtr p2r = make_base({"x0", "x1", "x2"}, {}, true).ring;
  Ideal cut = Ideal::from_strings(p2r, {"x0*x2 - x1^2", "x0^2 + x1^2 + x2^2"});
  EmbeddedScheme pts = make_embedded(BaseSpace{p2r, cut, true});
  VfcResult four = vfc_direct(
      pts, section_of_bundle(
               {2, 2}, V(p2r, {"x0*x2 - x1^2", "x0^2 + x1^2 + x2^2"})));
  expect(four.rank == 0, "regular (2,2) section has virtual dimension 0");
  expect_chow(four.vfc, C(2, {{0, 4}}), "(2,2) section count");

  EmbeddedScheme dbl = make_embedded(make_base({"x0", "x1", "x2"}, {"x0^2"}, true));
  VfcResult line = vfc_direct(dbl, section_of_bundle({2}, {P(dbl.space.ring, "x0^2")}));
  expect(line.rank == 1, "double line has virtual dimension 1");
  expect_chow(line.vfc, C(2, {{1, 2}}), "double line class");

  EmbeddedScheme p2 = make_embedded(make_base({"x0", "x1", "x2"}, {}, true));
  VfcResult smooth = vfc_direct(p2, smooth_identity());
  expect(smooth.rank == 2, "smooth plane has virtual dimension 2");
  expect_chow(smooth.vfc, C(2, {{2, 1}}), "smooth plane class");
}

void c6_closed_formula() {
  RingPtr p2r = make_base({"x0", "x1", "x2"}, {}, true).ring;
  Ideal cut = Ideal::from_strings(p2r, {"x0*x2 - x1^2", "x0^2 + x1^2 + x2^2"});
  std::vector<std::pair<EmbeddedScheme, NormalSpaceData>> cases;
  cases.emplace_back(
      make_embedded(BaseSpace{p2r, cut, true}),
      section_of_bundle({2, 2}, V(p2r, {"x0*x2 - x1^2", "x0^2 + x1^2 + x2^2"})));
  EmbeddedScheme dbl = make_embedded(make_base({"x0", "x1", "x2"}, {"x0^2"}, true));
  cases.emplace_back(dbl, section_of_bundle({2}, {P(dbl.space.ring, "x0^2")}));
  cases.emplace_back(make_embedded(make_base({"x0", "x1", "x2"}, {}, true)),
                     smooth_identity());
  EmbeddedScheme con = make_embedded(conic());
  cases.emplace_back(con, conic_section(con.space));

  for (size_t i = 0; i < cases.size(); ++i) {
    VfcResult direct = vfc_direct(cases[i].first, cases[i].second);
    VfcResult closed = vfc_closed_formula(cases[i].first, cases[i].second);
    std::string tag = "case " + std::to_string(i);
    expect(direct.rank == closed.rank, tag + ": ranks disagree");
    expect(chow_equal(direct.vfc, closed.vfc), tag + ": classes disagree");
    expect(chow_equal(direct.fulton, closed.fulton),
           tag + ": canonical classes disagree");
  }
}

void c7_trivial_factor() {
  EmbeddedScheme dbl = make_embedded(make_base({"x0", "x1", "x2"}, {"x0^2"}, true));
  NormalSpaceData padded = section_of_bundle(
      {2, 0}, {P(dbl.space.ring, "x0^2"), Poly::zero(dbl.space.ring)});
  VfcResult direct = vfc_direct(dbl, padded);
  expect(direct.rank == 0, "trivial factor must drop the rank to 0");
  expect_chow(direct.vfc, chow_zero(2), "padded class must vanish");
  expect_chow(vfc_closed_formula(dbl, padded).vfc, chow_zero(2),
              "closed-form padded class must vanish");
}

void c8_purity() {
  for (const auto& name : fixture_names()) {
    Fixture f = fixture(name);
    Cone c = global_normal_cone(f.scheme, f.normal);
    expect(cone_dimension(c) == f.scheme.ambient_dim,
           name + ": cone dimension " + std::to_string(cone_dimension(c)) +
               " != " + std::to_string(f.scheme.ambient_dim));
  }
  SuiteOptions opt;
  opt.count = 50;
  SuiteOutcome so = run_suite("purity-sections", opt);
  expect(so.ok(), "random sections: failed at instance " +
                      std::to_string(so.failed_index) + " (" + so.note + ")");
}

void c9_law_suites() {
  for (const auto& name : suite_names()) {
    if (name == "purity-sections") continue;  // covered by the purity gate
    SuiteOutcome so = run_suite(name, SuiteOptions{});
    expect(so.ok(), name + ": failed at instance " +
                        std::to_string(so.failed_index) + " (" + so.note + ")");
    expect(so.run == 100, name + ": expected 100 instances");
  }
}

void c10_econe_fixtures() {
  for (const auto& name : fixture_names()) {
    Fixture f = fixture(name);
    const std::vector<Poly>& gens = f.scheme.space.ideal.gens();
    std::vector<std::string> names;
    for (size_t i = 0; i < gens.size(); ++i)
      names.push_back("N" + std::to_string(i));
    Cone nc = normal_cone(f.scheme.space, gens, names);
    LinSpaceHom act = tangent_action(f.scheme.space, gens, nc);
    expect(is_econe(nc, act), name + ": normal cone must be invariant");
  }

  // V(T*U) with the translation U -> U + T*V: the unsaturated cone keeps the
  // zero section, the translated generator does not reduce to zero, and the
  // verdict is negative; saturating leaves the invariant fiber.
  BaseSpace line = make_base({"T"}, {});
  LinearSpace e1 = free_space(line, {"U"}, {0});
  LinearSpace e0 = free_space(line, {"V"}, {0});
  LinSpaceHom d = linspace_hom(e0, e1, {{P(line.ring, "T")}});
  expect(!is_econe(make_cone(e1, {P(e1.ring, "T*U")}, false), d),
         "both components of V(T*U) kept: must not be invariant");
  expect(is_econe(make_cone(e1, {P(e1.ring, "T*U")}), d),
         "saturated V(T*U) must be invariant");
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;  // 0 means no stated budget
  std::function<void()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "fat point normal cone ideal", 1.0, c1_normal_cone},
      {2, "descend obstruction and kernel module", 2.0, c2_descend_obstruction},
      {3, "segre classes of the named cones", 30.0, c3_segre},
      {4, "canonical classes and embedding invariance", 30.0, c4_fulton},
      {5, "virtual classes of the named data", 30.0, c5_vfc},
      {6, "direct and closed-form virtual classes agree", 60.0, c6_closed_formula},
      {7, "trivial bundle factor kills the class", 0.0, c7_trivial_factor},
      {8, "normal cone purity, fixtures and random sections", 120.0, c8_purity},
      {9, "transport law suites, 100 instances each", 300.0, c9_law_suites},
      {10, "invariance of normal cone fixtures", 1.0, c10_econe_fixtures},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string note;
    try {
      c.body();
    } catch (const check_failure& f) {
      verdict = "FAIL";
      note = f.what;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      note = std::string("unexpected error: ") + e.what();
    }
    double dt = seconds_since(t0);
    if (verdict == "PASS" && c.budget_s > 0 && dt > c.budget_s) {
      verdict = "FAIL";
      note = "over budget";
    }
    if (verdict == "FAIL") ++failed;
    if (c.budget_s > 0)
      std::printf("%s  %2d  %-48s  %7.2fs (budget %.0fs)%s%s\n", verdict.c_str(),
                  c.id, c.label, dt, c.budget_s, note.empty() ? "" : "  -- ",
                  note.c_str());
    else
      std::printf("%s  %2d  %-48s  %7.2fs%s%s\n", verdict.c_str(), c.id, c.label,
                  dt, note.empty() ? "" : "  -- ", note.c_str());
  }
  if (failed) std::printf("acceptance: %d criterion(s) failed\n", failed);
  else std::printf("acceptance: all criteria passed\n");
  return failed ? 1 : 0;
}
