#include <algorithm>
#include <functional>
#include <optional>

#include "conecalc/ideal.hpp"

namespace conecalc {

namespace {

std::vector<Mono> minimal_monos(const std::vector<Mono>& gens) {
  std::vector<Mono> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (!mono_divides(gens[j], gens[i])) continue;
      if (gens[j] == gens[i] && j > i) continue;
      keep = false;
    }
    if (keep) out.push_back(gens[i]);
  }
  return out;
}

// Z[t] as a coefficient vector.
using ZPoly = std::vector<Int>;

void zp_add_shifted(ZPoly& a, const ZPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

ZPoly zp_mul_one_minus_power(const ZPoly& a, int d) {
  ZPoly out(a.size() + d, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  return out;
}

int support_size(const Mono& m) {
  int s = 0;
  for (int e : m) s += e > 0 ? 1 : 0;
  return s;
}

// Numerator of the Hilbert series of R/<gens> over (1-t)^n, by pivot recursion.
ZPoly hilbert_numerator(std::vector<Mono> gens) {
  gens = minimal_monos(gens);
  if (gens.empty()) return {Int(1)};
  ZPoly out = {Int(1)};
  bool pure = true;
  int mixed = -1;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (mono_total_deg(gens[i]) == 0) return {Int(0)};
    if (support_size(gens[i]) > 1) {
      pure = false;
      mixed = static_cast<int>(i);
    }
  }
  if (pure) {
    for (const auto& g : gens) out = zp_mul_one_minus_power(out, mono_total_deg(g));
    return out;
  }
  // Pivot on the variable of a mixed generator that appears most often overall.
  const int n = static_cast<int>(gens[0].size());
  std::vector<int> freq(n, 0);
  for (const auto& g : gens)
    for (int v = 0; v < n; ++v)
      if (g[v] > 0) ++freq[v];
  int pivot = -1;
  for (int v = 0; v < n; ++v)
    if (gens[mixed][v] > 0 && (pivot < 0 || freq[v] > freq[pivot])) pivot = v;

  std::vector<Mono> plus = gens;
  Mono pv(n, 0);
  pv[pivot] = 1;
  plus.push_back(pv);
  std::vector<Mono> colon;
  for (auto g : gens) {
    if (g[pivot] > 0) --g[pivot];
    colon.push_back(std::move(g));
  }
  ZPoly a = hilbert_numerator(std::move(plus));
  ZPoly b = hilbert_numerator(std::move(colon));
  zp_add_shifted(a, b, 1);
  return a;
}

Int zp_eval_one(const ZPoly& a) {
  Int s = 0;
  for (const auto& c : a) s += c;
  return s;
}

Int degree_from_numerator(ZPoly hn, int codim) {
  for (int r = 0; r < codim; ++r) {
    if (zp_eval_one(hn) != 0) throw conecalc_error("hilbert numerator not divisible by 1-t");
    // hn == (1-t) * b with b_i the prefix sums of hn.
    ZPoly b;
    Int acc = 0;
    for (size_t i = 0; i + 1 < hn.size(); ++i) {
      acc += hn[i];
      b.push_back(acc);
    }
    hn = std::move(b);
  }
  return zp_eval_one(hn);
}

std::vector<Mono> leading_monos(const GroebnerBasis& gb) {
  std::vector<Mono> lts;
  for (const auto& g : gb.elems) lts.push_back(g.lt().m);
  return lts;
}

int max_independent_set(const GroebnerBasis& gb) {
  const int n = gb.ring->nvars();
  if (n > 22) throw conecalc_error("dimension: too many variables");
  std::vector<unsigned> masks;
  for (const auto& g : gb.elems) {
    unsigned m = 0;
    for (int v = 0; v < n; ++v)
      if (g.lt().m[v] > 0) m |= 1u << v;
    masks.push_back(m);
  }
  int best = -1;
  for (unsigned s = 0; s < (1u << n); ++s) {
    int pc = __builtin_popcount(s);
    if (pc <= best) continue;
    bool indep = true;
    for (unsigned m : masks)
      if ((m & ~s) == 0) {
        indep = false;
        break;
      }
    if (indep) best = pc;
  }
  return best;
}

const GroebnerBasis& grevlex_basis(const Ideal& I, std::optional<Ideal>& holder) {
  if (I.ring()->order == Order::Grevlex) return I.groebner();
  holder = Ideal(with_order(I.ring(), Order::Grevlex), I.gens());
  return holder->groebner();
}

}  // namespace

long staircase_count(const GroebnerBasis& gb) {
  if (gb.contains_one()) return 0;
  const int n = gb.ring->nvars();
  std::vector<Mono> lts = minimal_monos(leading_monos(gb));
  std::vector<long> bound(n, -1);
  for (const auto& m : lts)
    if (support_size(m) == 1)
      for (int v = 0; v < n; ++v)
        if (m[v] > 0 && (bound[v] < 0 || m[v] < bound[v])) bound[v] = m[v];
  long box = 1;
  for (int v = 0; v < n; ++v) {
    if (bound[v] < 0) return -1;
    box *= bound[v];
    if (box > (1L << 22)) throw conecalc_error("staircase enumeration too large");
  }
  long count = 0;
  Mono e(n, 0);
  // Walk the bounding box, counting monomials outside the leading-term ideal.
  auto standard = [&]() {
    for (const auto& m : lts)
      if (mono_divides(m, e)) return false;
    return true;
  };
  std::function<void(int)> walk = [&](int v) {
    if (v == n) {
      if (standard()) ++count;
      return;
    }
    for (long x = 0; x < bound[v]; ++x) {
      e[v] = static_cast<int>(x);
      walk(v + 1);
    }
    e[v] = 0;
  };
  walk(0);
  return count;
}

long vs_dimension(const Ideal& I) {
  std::optional<Ideal> holder;
  const GroebnerBasis& gb = grevlex_basis(I, holder);
  long c = staircase_count(gb);
  if (c < 0) throw input_error("vs_dimension: quotient is not finite-dimensional");
  return c;
}

int krull_dimension(const Ideal& I) {
  std::optional<Ideal> holder;
  const GroebnerBasis& gb = grevlex_basis(I, holder);
  return max_independent_set(gb);
}

DimDeg dimension_degree(const Ideal& I) {
  std::optional<Ideal> holder;
  const GroebnerBasis& gb = grevlex_basis(I, holder);
  if (gb.contains_one()) throw input_error("dimension_degree: unit ideal");
  DimDeg out;
  out.dim = max_independent_set(gb);
  bool homogeneous = true;
  for (const auto& g : gb.elems) {
    int d = mono_total_deg(g.terms()[0].m);
    for (const auto& t : g.terms())
      if (mono_total_deg(t.m) != d) {
        homogeneous = false;
        break;
      }
    if (!homogeneous) break;
  }
  if (homogeneous) {
    ZPoly hn = hilbert_numerator(leading_monos(gb));
    out.degree = degree_from_numerator(std::move(hn), gb.ring->nvars() - out.dim);
  } else if (out.dim == 0) {
    out.degree = Int(staircase_count(gb));
  } else {
    throw input_error("dimension_degree: degree needs homogeneous or zero-dimensional input");
  }
  return out;
}

}  // namespace conecalc
