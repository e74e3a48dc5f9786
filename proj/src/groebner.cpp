#include <algorithm>
#include <set>
#include <utility>

#include "conecalc/ideal.hpp"

namespace conecalc {

bool GroebnerBasis::contains_one() const {
  return elems.size() == 1 && elems[0].is_one();
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    gens_.push_back(g.ring() == ring_ ? std::move(g) : transport(g, ring_));
  }
}

Ideal Ideal::from_strings(const RingPtr& r, const std::vector<std::string>& texts) {
  return Ideal(r, parse_polys(r, texts));
}

const GroebnerBasis& Ideal::groebner() const {
  if (!gb_) gb_ = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_));
  return *gb_;
}

namespace {

// Reduces p fully; when rows are tracked, subtracts the same combination from
// row so that p_in == result + sum_k (used multiples of gb[k]) stays encoded in
// row relative to the original generators.
Poly reduce_tracked(const Poly& p, const std::vector<Poly>& basis,
                    const std::vector<std::vector<Poly>>* basis_rows, std::vector<Poly>* row,
                    const std::vector<int>* skip = nullptr) {
  const RingPtr& ring = p.ring();
  std::vector<Term> out;
  Poly work = p;
  while (!work.is_zero()) {
    const Term& t = work.lt();
    int reducer = -1;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (skip && (*skip)[k]) continue;
      if (basis[k].is_zero()) continue;
      if (mono_divides(basis[k].lt().m, t.m)) {
        reducer = k;
        break;
      }
    }
    if (reducer < 0) {
      out.push_back(t);
      work = work - Poly(ring, {t});
      continue;
    }
    const Poly& g = basis[reducer];
    Mono u = mono_div(t.m, g.lt().m);
    Rat c = t.c / g.lt().c;
    c.canonicalize();
    work = work - g.mul_term(u, c);
    if (row) {
      const std::vector<Poly>& grow = (*basis_rows)[reducer];
      for (size_t j = 0; j < row->size(); ++j)
        (*row)[j] = (*row)[j] - grow[j].mul_term(u, c);
    }
  }
  return Poly(ring, std::move(out));
}

struct SPair {
  int deg;
  Mono lcm;
  int i, j;
};

struct SPairLess {
  const PolyRing* ring;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ring->cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Poly> gens, bool with_certificate) {
  const int m = static_cast<int>(gens.size());
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> rows;
  for (int i = 0; i < m; ++i) {
    Poly g = gens[i].ring() == ring ? gens[i] : transport(gens[i], ring);
    if (g.is_zero()) continue;
    std::vector<Poly> row;
    if (with_certificate) {
      row.assign(m, Poly::zero(ring));
      Rat inv = Rat(1) / g.lt().c;
      inv.canonicalize();
      row[i] = Poly::constant(ring, inv);
    }
    basis.push_back(g.mul_scalar(Rat(1) / g.lt().c));
    if (with_certificate) rows.push_back(std::move(row));
  }
  if (basis.empty()) return GroebnerBasis{ring, {}, {}};

  std::set<SPair, SPairLess> pairs(SPairLess{ring.get()});
  std::set<std::pair<int, int>> done;
  auto add_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      Mono l = mono_lcm(basis[i].lt().m, basis[t].lt().m);
      pairs.insert(SPair{mono_total_deg(l), l, i, t});
    }
  };
  for (int t = 1; t < static_cast<int>(basis.size()); ++t) add_pairs(t);

  while (!pairs.empty()) {
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    done.insert({p.i, p.j});

    // Buchberger's first criterion: coprime leading monomials.
    if (mono_coprime(basis[p.i].lt().m, basis[p.j].lt().m)) continue;
    // Chain criterion, in the form that requires both companion pairs to have
    // been treated already.
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!mono_divides(basis[k].lt().m, p.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chained = true;
    }
    if (chained) continue;

    Mono ui = mono_div(p.lcm, basis[p.i].lt().m);
    Mono uj = mono_div(p.lcm, basis[p.j].lt().m);
    Poly s = basis[p.i].mul_term(ui, Rat(1)) - basis[p.j].mul_term(uj, Rat(1));
    std::vector<Poly> row;
    if (with_certificate) {
      row.assign(m, Poly::zero(ring));
      for (int j = 0; j < m; ++j)
        row[j] = rows[p.i][j].mul_term(ui, Rat(1)) - rows[p.j][j].mul_term(uj, Rat(1));
    }
    Poly nf = reduce_tracked(s, basis, with_certificate ? &rows : nullptr,
                             with_certificate ? &row : nullptr);
    if (nf.is_zero()) continue;
    Rat inv = Rat(1) / nf.lt().c;
    inv.canonicalize();
    basis.push_back(nf.mul_scalar(inv));
    if (with_certificate) {
      for (auto& e : row) e = e.mul_scalar(inv);
      rows.push_back(std::move(row));
    }
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop elements whose leading term another element divides.
  const int n = static_cast<int>(basis.size());
  std::vector<int> dropped(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n && !dropped[i]; ++j) {
      if (i == j || dropped[j]) continue;
      if (mono_divides(basis[j].lt().m, basis[i].lt().m)) {
        // On equal leading monomials keep the earlier element.
        if (basis[i].lt().m == basis[j].lt().m && j > i) continue;
        dropped[i] = 1;
      }
    }
  }
  // Tail-reduce the survivors against each other.
  std::vector<Poly> reduced;
  std::vector<std::vector<Poly>> reduced_rows;
  for (int i = 0; i < n; ++i) {
    if (dropped[i]) continue;
    std::vector<int> skip = dropped;
    skip[i] = 1;
    std::vector<Poly> row = with_certificate ? rows[i] : std::vector<Poly>{};
    Poly nf = reduce_tracked(basis[i], basis, with_certificate ? &rows : nullptr,
                             with_certificate ? &row : nullptr, &skip);
    reduced.push_back(std::move(nf));
    if (with_certificate) reduced_rows.push_back(std::move(row));
  }
  std::vector<int> perm(reduced.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return ring->cmp(reduced[a].lt().m, reduced[b].lt().m) < 0;
  });
  GroebnerBasis out{ring, {}, {}};
  for (int i : perm) {
    out.elems.push_back(std::move(reduced[i]));
    if (with_certificate) out.certificate.push_back(std::move(reduced_rows[i]));
  }
  return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  Poly q = p.ring() == gb.ring ? p : transport(p, gb.ring);
  if (gb.elems.empty()) return q;
  return reduce_tracked(q, gb.elems, nullptr, nullptr);
}

}  // namespace conecalc
