#include "conecalc/module.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace conecalc {
namespace {

struct MLead {
  int comp = -1;  // -1: zero vector
  Term t;
};

MLead mlead(const ModVec& v) {
  for (int c = 0; c < static_cast<int>(v.size()); ++c)
    if (!v[c].is_zero()) return MLead{c, v[c].lt()};
  return {};
}

ModVec normalize_vec(const RingPtr& r, int rank, const ModVec& v) {
  if (static_cast<int>(v.size()) != rank)
    throw conecalc_error("module vector has wrong length");
  ModVec out;
  out.reserve(v.size());
  for (const auto& p : v) {
    if (p.is_zero())
      out.push_back(Poly::zero(r));
    else
      out.push_back(p.ring() == r ? p : transport(p, r));
  }
  return out;
}

ModVec monic_vec(ModVec v) {
  MLead l = mlead(v);
  if (l.comp < 0) return v;
  Rat inv = Rat(1) / l.t.c;
  inv.canonicalize();
  for (auto& p : v) p = p.mul_scalar(inv);
  return v;
}

// Full normal form, position-over-term: lower component index dominates,
// ring order inside a component. Basis element `skip` is ignored.
ModVec reduce_vec(const RingPtr& r, ModVec v, const std::vector<ModVec>& basis, int skip = -1) {
  ModVec out = modvec_zero(r, static_cast<int>(v.size()));
  for (;;) {
    MLead lv = mlead(v);
    if (lv.comp < 0) break;
    int reducer = -1;
    MLead lg;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == skip) continue;
      MLead l = mlead(basis[k]);
      if (l.comp == lv.comp && mono_divides(l.t.m, lv.t.m)) {
        reducer = k;
        lg = l;
        break;
      }
    }
    if (reducer < 0) {
      out[lv.comp] = out[lv.comp] + Poly(r, {lv.t});
      v[lv.comp] = v[lv.comp] - Poly(r, {lv.t});
      continue;
    }
    Mono u = mono_div(lv.t.m, lg.t.m);
    Rat c = lv.t.c / lg.t.c;
    c.canonicalize();
    const ModVec& g = basis[reducer];
    for (int i = lv.comp; i < static_cast<int>(v.size()); ++i)
      v[i] = v[i] - g[i].mul_term(u, c);
  }
  return out;
}

struct MPair {
  int deg;
  Mono lcm;
  int comp;
  int i, j;
};

struct MPairLess {
  const PolyRing* ring;
  bool operator()(const MPair& a, const MPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ring->cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// True if lead of a comes before lead of b in the final deterministic order
// (ascending: higher component first, then ring order on the monomial).
bool lead_less(const PolyRing* ring, const ModVec& a, const ModVec& b) {
  MLead la = mlead(a), lb = mlead(b);
  if (la.comp != lb.comp) return la.comp > lb.comp;
  return ring->cmp(la.t.m, lb.t.m) < 0;
}

}  // namespace

ModVec modvec_zero(const RingPtr& r, int rank) {
  return ModVec(static_cast<size_t>(rank), Poly::zero(r));
}

ModVec modvec_unit(const RingPtr& r, int rank, int i) {
  ModVec v = modvec_zero(r, rank);
  v[i] = Poly::constant(r, Rat(1));
  return v;
}

bool modvec_is_zero(const ModVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

ModVec modvec_add(const ModVec& a, const ModVec& b) {
  ModVec out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

ModVec modvec_sub(const ModVec& a, const ModVec& b) {
  ModVec out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

ModVec modvec_scale(const ModVec& a, const Poly& c) {
  ModVec out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(p * c);
  return out;
}

std::vector<ModVec> PresentedModule::all_relations() const {
  std::vector<ModVec> out;
  for (const auto& rel : relations) out.push_back(normalize_vec(ring, rank, rel));
  for (const auto& b : base.gens()) {
    Poly bb = b.ring() == ring ? b : transport(b, ring);
    for (int j = 0; j < rank; ++j) {
      ModVec v = modvec_zero(ring, rank);
      v[j] = bb;
      out.push_back(std::move(v));
    }
  }
  return out;
}

PresentedModule free_module(RingPtr ring, Ideal base, int rank) {
  return PresentedModule{std::move(ring), std::move(base), rank, {}};
}

std::vector<ModVec> module_groebner(const RingPtr& r, int rank, std::vector<ModVec> gens) {
  std::vector<ModVec> basis;
  for (const auto& g : gens) {
    ModVec v = normalize_vec(r, rank, g);
    if (!modvec_is_zero(v)) basis.push_back(monic_vec(std::move(v)));
  }
  if (basis.empty()) return {};

  std::set<MPair, MPairLess> pairs(MPairLess{r.get()});
  std::set<std::pair<int, int>> done;
  auto add_pairs = [&](int t) {
    MLead lt_ = mlead(basis[t]);
    for (int i = 0; i < t; ++i) {
      MLead li = mlead(basis[i]);
      if (li.comp != lt_.comp) continue;
      Mono l = mono_lcm(li.t.m, lt_.t.m);
      pairs.insert(MPair{mono_total_deg(l), l, li.comp, i, t});
    }
  };
  for (int t = 1; t < static_cast<int>(basis.size()); ++t) add_pairs(t);

  while (!pairs.empty()) {
    MPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    done.insert({p.i, p.j});

    // The coprime criterion is not valid for pairs inside one component, so
    // only the chain criterion applies (companion pairs already treated,
    // witness in the same component).
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      MLead lk = mlead(basis[k]);
      if (lk.comp != p.comp || !mono_divides(lk.t.m, p.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chained = true;
    }
    if (chained) continue;

    Mono ui = mono_div(p.lcm, mlead(basis[p.i]).t.m);
    Mono uj = mono_div(p.lcm, mlead(basis[p.j]).t.m);
    ModVec s = modvec_zero(r, rank);
    for (int c = 0; c < rank; ++c)
      s[c] = basis[p.i][c].mul_term(ui, Rat(1)) - basis[p.j][c].mul_term(uj, Rat(1));
    ModVec nf = reduce_vec(r, std::move(s), basis);
    if (modvec_is_zero(nf)) continue;
    basis.push_back(monic_vec(std::move(nf)));
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop elements whose lead another element's lead divides;
  // ties on equal leads keep the earlier element.
  const int n = static_cast<int>(basis.size());
  std::vector<int> dropped(n, 0);
  for (int i = 0; i < n; ++i) {
    MLead li = mlead(basis[i]);
    for (int j = 0; j < n && !dropped[i]; ++j) {
      if (j == i || dropped[j]) continue;
      MLead lj = mlead(basis[j]);
      if (lj.comp != li.comp || !mono_divides(lj.t.m, li.t.m)) continue;
      if (lj.t.m == li.t.m && j > i) continue;
      dropped[i] = 1;
    }
  }
  std::vector<ModVec> minimal;
  for (int i = 0; i < n; ++i)
    if (!dropped[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce; leads survive because the basis is minimal.
  std::vector<ModVec> reduced = minimal;
  for (int i = 0; i < static_cast<int>(minimal.size()); ++i)
    reduced[i] = reduce_vec(r, minimal[i], minimal, i);

  std::sort(reduced.begin(), reduced.end(),
            [&](const ModVec& a, const ModVec& b) { return lead_less(r.get(), a, b); });
  return reduced;
}

ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& basis) {
  if (v.empty()) return v;
  RingPtr r;  // the basis's ring is authoritative; fall back to v's
  for (const auto& b : basis) {
    for (const auto& p : b)
      if (p.ring()) {
        r = p.ring();
        break;
      }
    if (r) break;
  }
  if (!r)
    for (const auto& p : v)
      if (p.ring()) {
        r = p.ring();
        break;
      }
  if (!r) return v;
  return reduce_vec(r, normalize_vec(r, static_cast<int>(v.size()), v), basis);
}

std::vector<ModVec> syzygies(const RingPtr& r, int rank, const std::vector<ModVec>& gens) {
  const int n = static_cast<int>(gens.size());
  if (n == 0) return {};
  const int big = rank + n;
  std::vector<ModVec> ext;
  ext.reserve(n);
  for (int i = 0; i < n; ++i) {
    ModVec v = normalize_vec(r, rank, gens[i]);
    v.resize(big, Poly::zero(r));
    v[rank + i] = Poly::constant(r, Rat(1));
    ext.push_back(std::move(v));
  }
  // Main components dominate the tags, so basis elements with zero main part
  // are exactly a generating set of the syzygy module.
  std::vector<ModVec> basis = module_groebner(r, big, std::move(ext));
  std::vector<ModVec> out;
  for (const auto& b : basis) {
    bool main_zero = true;
    for (int c = 0; c < rank && main_zero; ++c) main_zero = b[c].is_zero();
    if (!main_zero) continue;
    out.emplace_back(b.begin() + rank, b.end());
  }
  return out;
}

std::vector<ModVec> syzygies_mod(const PresentedModule& amb, const std::vector<ModVec>& gens) {
  std::vector<ModVec> ext = gens;
  for (auto& rel : amb.all_relations()) ext.push_back(std::move(rel));
  std::vector<ModVec> syz = syzygies(amb.ring, amb.rank, ext);
  std::vector<ModVec> out;
  for (const auto& s : syz) {
    ModVec head(s.begin(), s.begin() + gens.size());
    if (!modvec_is_zero(head)) out.push_back(std::move(head));
  }
  return out;
}

std::vector<ModVec> span_basis(const PresentedModule& amb, std::vector<ModVec> gens) {
  for (auto& rel : amb.all_relations()) gens.push_back(std::move(rel));
  return module_groebner(amb.ring, amb.rank, std::move(gens));
}

bool span_contains(const std::vector<ModVec>& basis, const ModVec& v) {
  return modvec_is_zero(module_normal_form(v, basis));
}

bool span_equal(const PresentedModule& amb, const std::vector<ModVec>& a,
                const std::vector<ModVec>& b) {
  std::vector<ModVec> ba = span_basis(amb, a);
  std::vector<ModVec> bb = span_basis(amb, b);
  for (const auto& v : a)
    if (!span_contains(bb, normalize_vec(amb.ring, amb.rank, v))) return false;
  for (const auto& v : b)
    if (!span_contains(ba, normalize_vec(amb.ring, amb.rank, v))) return false;
  return true;
}

std::optional<std::vector<Poly>> express_in_span(const PresentedModule& amb,
                                                 const std::vector<ModVec>& gens,
                                                 const ModVec& v) {
  const RingPtr& r = amb.ring;
  std::vector<ModVec> ext = gens;
  for (auto& rel : amb.all_relations()) ext.push_back(std::move(rel));
  const int n = static_cast<int>(ext.size());
  const int rank = amb.rank;
  const int big = rank + n;
  std::vector<ModVec> tagged;
  tagged.reserve(n);
  for (int i = 0; i < n; ++i) {
    ModVec w = normalize_vec(r, rank, ext[i]);
    w.resize(big, Poly::zero(r));
    w[rank + i] = Poly::constant(r, Rat(1));
    tagged.push_back(std::move(w));
  }
  std::vector<ModVec> basis = module_groebner(r, big, std::move(tagged));
  ModVec w = normalize_vec(r, rank, v);
  w.resize(big, Poly::zero(r));
  ModVec nf = reduce_vec(r, std::move(w), basis);
  for (int c = 0; c < rank; ++c)
    if (!nf[c].is_zero()) return std::nullopt;
  // Every span element (m, t) satisfies m = sum t_i * ext_i, so the negated
  // tag part of the normal form expresses v over ext; keep the gens part.
  std::vector<Poly> coeffs;
  coeffs.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) coeffs.push_back(-nf[rank + i]);
  return coeffs;
}

bool is_zero_module(const PresentedModule& m) {
  if (m.rank == 0) return true;
  std::vector<ModVec> basis = module_groebner(m.ring, m.rank, m.all_relations());
  for (int j = 0; j < m.rank; ++j)
    if (!span_contains(basis, modvec_unit(m.ring, m.rank, j))) return false;
  return true;
}

ModuleMap module_map(PresentedModule src, PresentedModule dst, std::vector<ModVec> cols) {
  if (static_cast<int>(cols.size()) != src.rank)
    throw input_error("module map needs one column per source generator");
  if (!src.ring->compatible(*dst.ring))
    throw input_error("module map endpoints live in incompatible rings");
  for (auto& col : cols) col = normalize_vec(dst.ring, dst.rank, col);
  std::vector<ModVec> dbasis = span_basis(dst, {});
  for (const auto& rel : src.all_relations()) {
    ModVec image = modvec_zero(dst.ring, dst.rank);
    for (int i = 0; i < src.rank; ++i) {
      Poly c = rel[i].is_zero() || rel[i].ring() == dst.ring ? rel[i] : transport(rel[i], dst.ring);
      if (!c.is_zero()) image = modvec_add(image, modvec_scale(cols[i], c));
    }
    if (!span_contains(dbasis, image))
      throw input_error("module map does not respect source relations");
  }
  return ModuleMap{std::move(src), std::move(dst), std::move(cols)};
}

ModVec map_apply(const ModuleMap& f, const ModVec& v) {
  ModVec w = normalize_vec(f.dst.ring, f.src.rank, v);
  ModVec image = modvec_zero(f.dst.ring, f.dst.rank);
  for (int i = 0; i < f.src.rank; ++i)
    if (!w[i].is_zero()) image = modvec_add(image, modvec_scale(f.cols[i], w[i]));
  return image;
}

MapDiagnostics map_diagnostics(const ModuleMap& f) {
  const RingPtr& r = f.dst.ring;
  const int n = f.src.rank;

  std::vector<ModVec> ext = f.cols;
  for (auto& rel : f.dst.all_relations()) ext.push_back(std::move(rel));
  std::vector<ModVec> syz = syzygies(r, f.dst.rank, ext);

  std::vector<ModVec> srel = module_groebner(f.src.ring, n, f.src.all_relations());
  std::vector<ModVec> kernel_gens;
  for (const auto& s : syz) {
    ModVec head = normalize_vec(f.src.ring, n, ModVec(s.begin(), s.begin() + n));
    if (modvec_is_zero(head)) continue;
    if (span_contains(srel, head)) continue;  // already trivial in src
    kernel_gens.push_back(std::move(head));
  }

  MapDiagnostics d;
  d.kernel_gens = kernel_gens;
  d.kernel = PresentedModule{f.src.ring, f.src.base, static_cast<int>(kernel_gens.size()),
                             syzygies_mod(f.src, kernel_gens)};
  d.injective = kernel_gens.empty();

  std::vector<ModVec> crel = f.dst.relations;
  for (const auto& c : f.cols) crel.push_back(c);
  d.cokernel = PresentedModule{f.dst.ring, f.dst.base, f.dst.rank, std::move(crel)};
  d.surjective = is_zero_module(d.cokernel);
  return d;
}

}  // namespace conecalc
