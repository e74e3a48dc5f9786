#include "conecalc/chow.hpp"

#include <optional>

#include "conecalc/rng.hpp"

namespace conecalc {

ChowClass chow_zero(int ambient) {
  if (ambient < 0) throw input_error("negative ambient dimension");
  return ChowClass{ambient, std::vector<Rat>(ambient + 1, Rat(0))};
}

ChowClass chow_class(int ambient, const std::map<int, Rat>& coeffs) {
  ChowClass a = chow_zero(ambient);
  for (const auto& [m, c] : coeffs) {
    if (m < 0 || m > ambient)
      throw input_error("class component [P^" + std::to_string(m) + "] outside the ambient");
    a.coeffs[m] = c;
  }
  return a;
}

bool chow_equal(const ChowClass& a, const ChowClass& b) {
  return a.ambient == b.ambient && a.coeffs == b.coeffs;
}

ChowClass chow_add(const ChowClass& a, const ChowClass& b) {
  if (a.ambient != b.ambient) throw input_error("ambient mismatch in class sum");
  ChowClass out = a;
  for (int m = 0; m <= a.ambient; ++m) out.coeffs[m] += b.coeffs[m];
  return out;
}

ChowClass chow_scale(const Rat& c, const ChowClass& a) {
  ChowClass out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

ChowClass chow_component(const ChowClass& a, int m) {
  ChowClass out = chow_zero(a.ambient);
  if (m >= 0 && m <= a.ambient) out.coeffs[m] = a.coeffs[m];
  return out;
}

std::string chow_str(const ChowClass& a) {
  std::string out;
  for (int m = a.ambient; m >= 0; --m) {
    const Rat& c = a.coeffs[m];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += rat_str(mag);
    out += "[P^" + std::to_string(m) + "]";
  }
  return out.empty() ? "0" : out;
}

ChernPoly chern_one(int ambient) {
  if (ambient < 0) throw input_error("negative ambient dimension");
  ChernPoly p{ambient, std::vector<Rat>(ambient + 1, Rat(0))};
  p.c[0] = 1;
  return p;
}

ChernPoly chern_of_twists(int ambient, const std::vector<int>& twists) {
  ChernPoly p = chern_one(ambient);
  for (int d : twists)
    for (int j = ambient; j >= 1; --j) p.c[j] += d * p.c[j - 1];
  return p;
}

ChernPoly chern_mul(const ChernPoly& a, const ChernPoly& b) {
  if (a.ambient != b.ambient) throw input_error("ambient mismatch in class product");
  ChernPoly p{a.ambient, std::vector<Rat>(a.ambient + 1, Rat(0))};
  for (int i = 0; i <= a.ambient; ++i)
    for (int j = 0; i + j <= a.ambient; ++j) p.c[i + j] += a.c[i] * b.c[j];
  return p;
}

ChernPoly chern_inverse(const ChernPoly& a) {
  if (a.c[0] == 0) throw input_error("class with zero rank-0 part is not invertible");
  ChernPoly b{a.ambient, std::vector<Rat>(a.ambient + 1, Rat(0))};
  Rat lead = 1 / a.c[0];
  lead.canonicalize();
  b.c[0] = lead;
  for (int m = 1; m <= a.ambient; ++m) {
    Rat acc(0);
    for (int j = 1; j <= m; ++j) acc += a.c[j] * b.c[m - j];
    Rat v = -acc / a.c[0];
    v.canonicalize();
    b.c[m] = v;
  }
  return b;
}

ChernPoly tangent_chern(int ambient, bool projective) {
  if (!projective) return chern_one(ambient);
  return chern_of_twists(ambient, std::vector<int>(ambient + 1, 1));
}

ChernPoly chern_of_virtual(int ambient, const VirtualBundle& vb) {
  return chern_mul(chern_of_twists(ambient, vb.plus),
                   chern_inverse(chern_of_twists(ambient, vb.minus)));
}

ChowClass cap(const ChernPoly& c, const ChowClass& a) {
  if (c.ambient != a.ambient) throw input_error("ambient mismatch in cap product");
  ChowClass out = chow_zero(a.ambient);
  for (int m = 0; m <= a.ambient; ++m)
    for (int j = 0; m + j <= a.ambient; ++j) out.coeffs[m] += c.c[j] * a.coeffs[m + j];
  return out;
}

namespace {

struct BiVars {
  std::vector<int> base;
  std::vector<int> cone;
};

BiVars classify(const RingPtr& r) {
  BiVars v;
  for (int i = 0; i < r->nvars(); ++i) {
    const VarDecl& d = r->vars[i];
    if (d.cone_weight > 0)
      v.cone.push_back(i);
    else if (d.base_weight == 1)
      v.base.push_back(i);
    else
      throw input_error("multidegree needs a standard-graded base: variable " + d.name);
  }
  if (v.base.empty() || v.cone.empty())
    throw input_error("multidegree needs a base block and a cone block");
  return v;
}

// Exponent counts of a monomial over the two blocks: the grading of the
// product embedding, with every variable counted at weight one.
std::pair<int, int> plain_bidegree(const Mono& m, const BiVars& v) {
  int a = 0;
  int b = 0;
  for (int i : v.base) a += m[i];
  for (int i : v.cone) b += m[i];
  return {a, b};
}

std::vector<Poly> plain_components(const Poly& g, const BiVars& v) {
  std::map<std::pair<int, int>, std::vector<Term>> buckets;
  for (const auto& t : g.terms()) buckets[plain_bidegree(t.m, v)].push_back(t);
  std::vector<Poly> out;
  for (auto& [deg, terms] : buckets) out.push_back(Poly(g.ring(), std::move(terms)));
  return out;
}

Poly random_form(const RingPtr& r, const std::vector<int>& vars, Rng& rng) {
  Poly f = Poly::zero(r);
  for (int i : vars)
    f = f + Poly::variable(r, i).mul_scalar(rat_make(rng.draw(-10000, 10000)));
  return f;
}

// Point count of Z sliced by `a` base and `b = dim-a` cone hyperplanes, for
// every a; nullopt when a slice fails to be finite (bad position).
std::optional<std::vector<Int>> slice_counts(const Ideal& J, int dim, const BiVars& v,
                                             uint64_t seed) {
  Rng rng(seed);
  const RingPtr& r = J.ring();
  int n = static_cast<int>(v.base.size()) - 1;
  int k = static_cast<int>(v.cone.size()) - 1;
  std::vector<Int> md(dim + 1, Int(0));
  for (int a = 0; a <= dim; ++a) {
    int b = dim - a;
    if (a > n || b > k) continue;
    std::vector<Poly> gens = J.gens();
    for (int i = 0; i < a; ++i) gens.push_back(random_form(r, v.base, rng));
    for (int i = 0; i < b; ++i) gens.push_back(random_form(r, v.cone, rng));
    // Both gradings are dehomogenized on a random chart; that also removes
    // anything supported on the irrelevant loci, which satisfy every slice.
    gens.push_back(random_form(r, v.base, rng) - Poly::constant(r, rat_make(1)));
    gens.push_back(random_form(r, v.cone, rng) - Poly::constant(r, rat_make(1)));
    try {
      md[a] = vs_dimension(Ideal(r, gens));
    } catch (const input_error&) {
      return std::nullopt;
    }
  }
  return md;
}

}  // namespace

std::vector<Int> multidegree(const Ideal& J, uint64_t seed) {
  if (is_unit_ideal(J)) throw input_error("multidegree of the empty scheme");
  BiVars v = classify(J.ring());

  // The ideal generated by all bihomogeneous components of the generators
  // must not be bigger, or J cuts nothing out of P^n x P^k.
  std::vector<Poly> closure;
  bool split = false;
  for (const auto& g : J.gens()) {
    auto parts = plain_components(g, v);
    if (parts.size() > 1) split = true;
    for (auto& p : parts) closure.push_back(std::move(p));
  }
  if (split && !ideal_equal(J, Ideal(J.ring(), closure)))
    throw input_error("ideal does not define a subscheme of P^n x P^k");

  DimDeg dd = dimension_degree(J);
  int dim = dd.dim - 2;
  if (dim < 0) throw input_error("scheme is supported on the irrelevant loci");

  // The slices only ever see top-dimensional components away from the
  // irrelevant loci. Summing the counts and comparing against the degree of
  // the underlying standard-graded scheme certifies that nothing hides: a
  // stable shortfall means unsaturated or non-pure-dimensional input.
  bool shortfall = false;
  for (uint64_t attempt = 0; attempt < 3; ++attempt) {
    auto one = slice_counts(J, dim, v, mix_seed(seed, "multidegree", 2 * attempt));
    auto two = slice_counts(J, dim, v, mix_seed(seed, "multidegree", 2 * attempt + 1));
    if (!one || !two || *one != *two) continue;
    Int total = 0;
    for (const auto& c : *one) total += c;
    if (total == dd.degree) return *one;
    shortfall = true;
  }
  if (shortfall)
    throw applicability_error(
        "generic slices miss part of the scheme: the ideal is unsaturated or not pure-dimensional");
  throw genericity_error("slice point counts failed to stabilize");
}

}  // namespace conecalc
