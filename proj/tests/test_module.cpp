#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conecalc/module.hpp"

using namespace conecalc;

namespace {

RingPtr xy() { return base_ring({"x", "y"}); }

Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }
Ideal I(const RingPtr& r, std::vector<std::string> gens) { return Ideal::from_strings(r, gens); }

ModVec V(const RingPtr& r, std::vector<std::string> entries) {
  ModVec v;
  for (const auto& s : entries) v.push_back(parse_poly(r, s));
  return v;
}

}  // namespace

TEST_CASE("modvec arithmetic") {
  auto r = xy();
  ModVec a = V(r, {"x", "y"});
  ModVec b = V(r, {"y", "x"});
  CHECK(modvec_is_zero(modvec_sub(a, a)));
  CHECK(modvec_add(a, b) == V(r, {"x + y", "x + y"}));
  CHECK(modvec_scale(a, P(r, "y")) == V(r, {"x*y", "y^2"}));
  CHECK(modvec_unit(r, 3, 1) == V(r, {"0", "1", "0"}));
}

TEST_CASE("module groebner and normal form") {
  auto r = xy();
  // Span of (x,0), (y,0), (0,1): normal forms strip component 0 down to
  // constants and kill component 1 entirely.
  auto basis = module_groebner(r, 2, {V(r, {"x", "0"}), V(r, {"y", "0"}), V(r, {"0", "1"})});
  CHECK(module_normal_form(V(r, {"x^2 + x*y + 3", "x*y"}), basis) == V(r, {"3", "0"}));
  CHECK(span_contains(basis, V(r, {"x^3 - 2*y", "x + y"})));
  CHECK_FALSE(span_contains(basis, V(r, {"1", "0"})));
}

TEST_CASE("koszul syzygies") {
  auto r = xy();
  std::vector<ModVec> gens = {V(r, {"x"}), V(r, {"y"})};
  auto syz = syzygies(r, 1, gens);
  REQUIRE(syz.size() == 1);
  // The syzygy module of (x, y) is generated by (y, -x), up to sign/scale.
  PresentedModule amb = free_module(r, Ideal::zero(r), 2);
  CHECK(span_equal(amb, syz, {V(r, {"y", "-x"})}));
  for (const auto& s : syz)
    CHECK((s[0] * P(r, "x") + s[1] * P(r, "y")).is_zero());

  auto r3 = base_ring({"x", "y", "z"});
  std::vector<ModVec> g3 = {V(r3, {"x"}), V(r3, {"y"}), V(r3, {"z"})};
  auto syz3 = syzygies(r3, 1, g3);
  PresentedModule amb3 = free_module(r3, Ideal::zero(r3), 3);
  CHECK(span_equal(amb3, syz3,
                   {V(r3, {"y", "-x", "0"}), V(r3, {"z", "0", "-x"}), V(r3, {"0", "z", "-y"})}));
}

TEST_CASE("express in span") {
  auto r = xy();
  PresentedModule amb = free_module(r, Ideal::zero(r), 2);
  std::vector<ModVec> gens = {V(r, {"x", "0"}), V(r, {"0", "y"})};
  ModVec v = V(r, {"x*y", "y^2"});
  auto coeffs = express_in_span(amb, gens, v);
  REQUIRE(coeffs.has_value());
  ModVec rebuilt = modvec_zero(r, 2);
  for (size_t i = 0; i < gens.size(); ++i)
    rebuilt = modvec_add(rebuilt, modvec_scale(gens[i], (*coeffs)[i]));
  CHECK(rebuilt == v);
  CHECK_FALSE(express_in_span(amb, gens, V(r, {"y", "0"})).has_value());

  // Modulo relations the coefficients only need to work up to the base ideal.
  PresentedModule ambq{r, I(r, {"x^2", "x*y", "y^2"}), 2, {}};
  auto cq = express_in_span(ambq, gens, V(r, {"x + x^2", "y^2"}));
  CHECK(cq.has_value());
}

TEST_CASE("presented module basics") {
  auto r = xy();
  PresentedModule zero{r, I(r, {"1"}), 2, {}};
  CHECK(is_zero_module(zero));
  PresentedModule line{r, Ideal::zero(r), 1, {V(r, {"x"})}};
  CHECK_FALSE(is_zero_module(line));
  CHECK(is_zero_module(free_module(r, Ideal::zero(r), 0)));
  // rank 1 with a unit relation collapses
  PresentedModule unit{r, Ideal::zero(r), 1, {V(r, {"x + 1"}), V(r, {"x"})}};
  CHECK(is_zero_module(unit));
}

TEST_CASE("module map validation") {
  auto r = xy();
  PresentedModule src{r, Ideal::zero(r), 1, {V(r, {"x"})}};
  PresentedModule dst = free_module(r, Ideal::zero(r), 1);
  // x * e0 must map to x * col which is nonzero in the free target
  CHECK_THROWS_AS(module_map(src, dst, {V(r, {"1"})}), input_error);
  // scaling the column by y still violates the relation; x*y is not 0
  CHECK_THROWS_AS(module_map(src, dst, {V(r, {"y"})}), input_error);
  // mapping into R/(x) works
  PresentedModule dstq{r, I(r, {"x"}), 1, {}};
  CHECK_NOTHROW(module_map(src, dstq, {V(r, {"1"})}));
  CHECK_THROWS_AS(module_map(src, dst, {V(r, {"1"}), V(r, {"1"})}), input_error);
}

TEST_CASE("kernel and cokernel of a free map") {
  auto r = xy();
  PresentedModule src = free_module(r, Ideal::zero(r), 2);
  PresentedModule dst = free_module(r, Ideal::zero(r), 1);
  // (a, b) -> a*x + b*y
  ModuleMap f = module_map(src, dst, {V(r, {"x"}), V(r, {"y"})});
  CHECK(map_apply(f, V(r, {"y", "-x"})) == V(r, {"0"}));
  MapDiagnostics d = map_diagnostics(f);
  CHECK_FALSE(d.injective);
  CHECK_FALSE(d.surjective);
  CHECK(span_equal(src, d.kernel_gens, {V(r, {"y", "-x"})}));
  // cokernel is R/(x,y), not zero
  CHECK_FALSE(is_zero_module(d.cokernel));

  ModuleMap id = module_map(dst, dst, {V(r, {"1"})});
  MapDiagnostics di = map_diagnostics(id);
  CHECK(di.injective);
  CHECK(di.surjective);
  CHECK(is_zero_module(di.kernel));
  CHECK(is_zero_module(di.cokernel));
}

TEST_CASE("diagnostics respect relations") {
  auto r = xy();
  // src = R/(y) e0, dst = R, col = x: kernel is y*e0 which is already a
  // relation, so the map is injective.
  PresentedModule src{r, Ideal::zero(r), 1, {V(r, {"y"})}};
  PresentedModule dst{r, Ideal::zero(r), 1, {V(r, {"x*y"})}};
  ModuleMap f = module_map(src, dst, {V(r, {"x"})});
  MapDiagnostics d = map_diagnostics(f);
  CHECK(d.injective);
  CHECK_FALSE(d.surjective);

  // Multiplication by x on R/(x^2): kernel generated by x*e0.
  PresentedModule rx2{r, I(r, {"x^2"}), 1, {}};
  ModuleMap g = module_map(rx2, rx2, {V(r, {"x"})});
  MapDiagnostics dg = map_diagnostics(g);
  CHECK_FALSE(dg.injective);
  CHECK_FALSE(dg.surjective);
  CHECK(span_equal(rx2, dg.kernel_gens, {V(r, {"x"})}));
}

TEST_CASE("conormal module of the fat point") {
  auto r = xy();
  Ideal m2 = I(r, {"x^2", "x*y", "y^2"});
  Ideal m4 = ideal_product(m2, m2);
  // Presentation of I/I^2 for I = (x^2, x*y, y^2) on its three generators:
  // the relations are syzygies of the generators taken modulo I^2.
  PresentedModule scalar{r, m4, 1, {}};
  auto rels = syzygies_mod(scalar, {V(r, {"x^2"}), V(r, {"x*y"}), V(r, {"y^2"})});
  PresentedModule conormal{r, m2, 3, rels};
  // Koszul-type relations hold modulo I^2.
  PresentedModule free3 = free_module(r, m4, 3);
  auto basis = span_basis(free3, rels);
  CHECK(span_contains(basis, V(r, {"y", "-x", "0"})));
  CHECK(span_contains(basis, V(r, {"0", "y", "-x"})));
  CHECK_FALSE(is_zero_module(conormal));

  // Differential d: m2/m2^2 -> Omega|_X sends a generator to its gradient.
  PresentedModule omega{r, m2, 2, {}};
  ModuleMap d = module_map(conormal, omega,
                           {V(r, {"2*x", "0"}), V(r, {"y", "x"}), V(r, {"0", "2*y"})});
  MapDiagnostics dd = map_diagnostics(d);
  CHECK_FALSE(dd.injective);
  // Kernel is m * (e0, e1, e2): every generator times x and y.
  std::vector<ModVec> expected;
  for (int j = 0; j < 3; ++j)
    for (const std::string& v : {"x", "y"}) {
      ModVec w = modvec_zero(r, 3);
      w[j] = P(r, v);
      expected.push_back(w);
    }
  CHECK(span_equal(conormal, dd.kernel_gens, expected));
}
