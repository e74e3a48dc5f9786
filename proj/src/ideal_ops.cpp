#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "conecalc/ideal.hpp"

namespace conecalc {

namespace {

// Total degree over plain ambient variables (cone coordinates and order tags
// count zero), with every ambient variable weighing 1.
int naive_base_deg(const PolyRing& r, const Mono& m) {
  int d = 0;
  for (int i = 0; i < r.nvars(); ++i)
    if (r.vars[i].cone_weight == 0 && r.vars[i].base_weight > 0) d += m[i];
  return d;
}

std::string fresh_name(const PolyRing& r, const std::string& stem,
                       const std::vector<std::string>& also_taken = {}) {
  auto taken = [&](const std::string& s) {
    if (r.index_of(s) >= 0) return true;
    return std::find(also_taken.begin(), also_taken.end(), s) != also_taken.end();
  };
  if (!taken(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string s = stem + std::to_string(i);
    if (!taken(s)) return s;
  }
}

// Rebuild p in dst given an explicit source-index -> dst-index map.
Poly remap_poly(const Poly& p, const RingPtr& dst, const std::vector<int>& to_dst) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Mono m(dst->nvars(), 0);
    for (size_t i = 0; i < t.m.size(); ++i) {
      if (t.m[i] == 0) continue;
      if (to_dst[i] < 0) throw input_error("remap: variable has no image");
      m[to_dst[i]] = t.m[i];
    }
    out.push_back({std::move(m), t.c});
  }
  return Poly(dst, std::move(out));
}

bool touches_vars(const Poly& p, const std::vector<int>& flagged) {
  for (const auto& t : p.terms())
    for (size_t i = 0; i < t.m.size(); ++i)
      if (t.m[i] > 0 && flagged[i]) return true;
  return false;
}

}  // namespace

bool member(const Poly& p, const Ideal& I) { return normal_form(p, I.groebner()).is_zero(); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  const Ideal bt = (b.ring() == a.ring()) ? b : Ideal(a.ring(), b.gens());
  const auto& ga = a.groebner().elems;
  const auto& gb = bt.groebner().elems;
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

bool is_unit_ideal(const Ideal& I) { return I.groebner().contains_one(); }

bool is_zero_ideal(const Ideal& I) { return I.gens().empty(); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) {
    Poly ft = f.ring() == a.ring() ? f : transport(f, a.ring());
    for (const auto& g : b.gens()) gens.push_back(ft * transport(g, a.ring()));
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int k) {
  if (k < 0) throw input_error("ideal_power: negative exponent");
  Ideal acc(a.ring(), {Poly::constant(a.ring(), Rat(1))});
  for (int i = 0; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& names) {
  const RingPtr& r = I.ring();
  std::vector<VarDecl> vars = r->vars;
  for (auto& v : vars)
    v.block = std::find(names.begin(), names.end(), v.name) != names.end() ? 1 : 0;
  RingPtr work = make_ring(std::move(vars), Order::Block, 1);
  GroebnerBasis gb = buchberger(work, I.gens());
  std::vector<int> flagged(work->nvars(), 0);
  for (int i = 0; i < work->nvars(); ++i) flagged[i] = work->vars[i].block == 1;
  RingPtr out_ring = drop_vars(r, names);
  std::vector<Poly> kept;
  for (const auto& g : gb.elems)
    if (!touches_vars(g, flagged)) kept.push_back(transport(g, out_ring));
  return Ideal(out_ring, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& r = a.ring();
  std::string tag = fresh_name(*r, "t");
  RingPtr work = extend_ring(r, {{tag, 1, 0, 0}});
  Poly t = Poly::variable(work, work->index_of(tag));
  Poly one_minus_t = Poly::constant(work, Rat(1)) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(t * transport(f, work));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * transport(g, work));
  Ideal mixed(work, std::move(gens));
  Ideal elim = eliminate(mixed, {tag});
  return Ideal(r, elim.gens());
}

std::optional<Poly> divide_exact(const Poly& h, const Poly& f) {
  if (f.is_zero()) {
    if (h.is_zero()) return Poly::zero(h.ring());
    return std::nullopt;
  }
  Poly q = Poly::zero(h.ring());
  Poly rem = h;
  while (!rem.is_zero()) {
    const Term& t = rem.lt();
    if (!mono_divides(f.lt().m, t.m)) return std::nullopt;
    Rat c = t.c / f.lt().c;
    c.canonicalize();
    Mono u = mono_div(t.m, f.lt().m);
    q = q + Poly(h.ring(), {{u, c}});
    rem = rem - f.mul_term(u, c);
  }
  return q;
}

Ideal quotient_poly(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return Ideal(I.ring(), {Poly::constant(I.ring(), Rat(1))});
  Poly ft = f.ring() == I.ring() ? f : transport(f, I.ring());
  Ideal cut = intersect(I, Ideal(I.ring(), {ft}));
  std::vector<Poly> gens;
  for (const auto& g : cut.gens()) {
    auto q = divide_exact(g, ft);
    if (!q) throw conecalc_error("quotient: inexact division");
    if (!q->is_zero()) gens.push_back(*q);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (J.gens().empty()) return Ideal(I.ring(), {Poly::constant(I.ring(), Rat(1))});
  Ideal acc = quotient_poly(I, J.gens()[0]);
  for (size_t i = 1; i < J.gens().size(); ++i) acc = intersect(acc, quotient_poly(I, J.gens()[i]));
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J, int cap) {
  Ideal prev = I;
  for (int it = 0; it < cap; ++it) {
    Ideal next = quotient(prev, J);
    if (ideal_equal(next, prev)) return next;
    prev = std::move(next);
  }
  throw applicability_error("saturation did not stabilize within " + std::to_string(cap) +
                            " iterations");
}

RingMap ring_map(RingPtr src, RingPtr dst, const std::map<std::string, Poly>& images_by_name) {
  RingMap f{std::move(src), std::move(dst), {}};
  for (const auto& [name, img] : images_by_name) {
    int i = f.src->index_of(name);
    if (i < 0) throw input_error("ring_map: unknown source variable " + name);
    f.images[i] = img.ring() == f.dst ? img : transport(img, f.dst);
  }
  for (int i = 0; i < f.src->nvars(); ++i)
    if (!f.images.count(i) && f.dst->index_of(f.src->vars[i].name) < 0)
      throw input_error("ring_map: variable " + f.src->vars[i].name + " has no image");
  return f;
}

Poly apply(const RingMap& f, const Poly& p) {
  Poly q = p.ring() == f.src ? p : transport(p, f.src);
  return substitute(q, f.dst, f.images);
}

Ideal apply(const RingMap& f, const Ideal& I) {
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(apply(f, g));
  return Ideal(f.dst, std::move(gens));
}

Ideal preimage(const RingMap& f, const Ideal& J) {
  const RingPtr& src = f.src;
  const RingPtr& dst = f.dst;
  // Source variables mapping identically to a same-named dst variable stay
  // shared; the rest get primed copies tied to their images by graph relations.
  std::vector<int> identity(src->nvars(), 0);
  for (int i = 0; i < src->nvars(); ++i) {
    auto it = f.images.find(i);
    if (it == f.images.end()) {
      identity[i] = 1;
      continue;
    }
    const Poly& img = it->second;
    int di = dst->index_of(src->vars[i].name);
    if (di >= 0 && img == Poly::variable(dst, di)) identity[i] = 1;
  }
  std::vector<VarDecl> vars;
  std::vector<std::string> prime_names;
  std::vector<int> primed_src;  // source index per primed variable
  for (const auto& v : dst->vars) {
    VarDecl w = v;
    bool shared = false;
    int si = src->index_of(v.name);
    if (si >= 0 && identity[si]) shared = true;
    w.block = shared ? 0 : 1;
    vars.push_back(w);
  }
  for (int i = 0; i < src->nvars(); ++i) {
    if (identity[i]) continue;
    VarDecl w = src->vars[i];
    w.block = 0;
    w.name = fresh_name(*dst, src->vars[i].name + "_pre", prime_names);
    prime_names.push_back(w.name);
    primed_src.push_back(i);
    vars.push_back(w);
  }
  RingPtr work = make_ring(std::move(vars), Order::Block, 1);

  std::vector<Poly> gens;
  for (const auto& g : J.gens()) gens.push_back(transport(g, work));
  for (size_t p = 0; p < primed_src.size(); ++p) {
    int i = primed_src[p];
    Poly prime = Poly::variable(work, work->index_of(prime_names[p]));
    gens.push_back(prime - transport(f.images.at(i), work));
  }
  GroebnerBasis gb = buchberger(work, std::move(gens));

  std::vector<int> flagged(work->nvars(), 0);
  for (int i = 0; i < work->nvars(); ++i) flagged[i] = work->vars[i].block == 1;
  std::vector<int> to_src(work->nvars(), -1);
  for (int i = 0; i < work->nvars(); ++i) {
    if (flagged[i]) continue;
    int si = src->index_of(work->vars[i].name);
    if (si >= 0 && identity[si]) {
      to_src[i] = si;
      continue;
    }
    for (size_t p = 0; p < prime_names.size(); ++p)
      if (work->vars[i].name == prime_names[p]) to_src[i] = primed_src[p];
  }
  std::vector<Poly> kept;
  for (const auto& g : gb.elems)
    if (!touches_vars(g, flagged)) kept.push_back(remap_poly(g, src, to_src));
  return Ideal(src, std::move(kept));
}

Ideal coordinate_ideal(const RingPtr& r, bool cone_coords) {
  std::vector<Poly> gens;
  for (int i = 0; i < r->nvars(); ++i) {
    const VarDecl& v = r->vars[i];
    bool pick = cone_coords ? v.cone_weight > 0 : (v.cone_weight == 0 && v.base_weight > 0);
    if (pick) gens.push_back(Poly::variable(r, i));
  }
  return Ideal(r, std::move(gens));
}

Ideal homogenize_closure(const Ideal& I, const RingPtr& dst, const std::string& hvar) {
  int hv = dst->index_of(hvar);
  if (hv < 0) throw input_error("homogenize_closure: missing variable " + hvar);
  if (I.ring()->index_of(hvar) >= 0)
    throw input_error("homogenize_closure: source already contains " + hvar);
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) {
    Poly gt = transport(g, dst);
    int top = 0;
    for (const auto& t : gt.terms()) top = std::max(top, naive_base_deg(*dst, t.m));
    std::vector<Term> out;
    for (const auto& t : gt.terms()) {
      Mono m = t.m;
      m[hv] += top - naive_base_deg(*dst, t.m);
      out.push_back({std::move(m), t.c});
    }
    gens.push_back(Poly(dst, std::move(out)));
  }
  Ideal closed(dst, std::move(gens));
  return saturate(closed, Ideal(dst, {Poly::variable(dst, hv)}));
}

}  // namespace conecalc
