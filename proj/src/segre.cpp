#include "conecalc/segre.hpp"

#include <algorithm>

#include "conecalc/rng.hpp"
#include <map>
#include <string>
#include <vector>

namespace conecalc {
namespace {

Poly into(const Poly& p, const RingPtr& r) {
  if (p.is_zero()) return Poly::zero(r);
  return p.ring() == r ? p : transport(p, r);
}

std::string unique_name(const std::vector<VarDecl>& taken, std::string stem) {
  auto used = [&](const std::string& n) {
    for (const auto& v : taken)
      if (v.name == n) return true;
    return false;
  };
  std::string name = std::move(stem);
  while (used(name)) name += "_2";
  return name;
}

// binom(n, j) for j >= 0; only the j = 0 term survives when n < 0.
Int binom(int n, int j) {
  if (j == 0) return Int(1);
  if (n < 0 || j > n) return Int(0);
  Int out = 1;
  for (int i = 1; i <= j; ++i) {
    out *= n - i + 1;
    out /= i;
  }
  return out;
}

}  // namespace

ChowClass segre_class(const Cone& c, uint64_t seed) {
  RingPtr ring = c.ambient.ring;
  Ideal J = c.ideal;

  // Compactify an affine base: homogenize the base directions only.
  if (!c.ambient.base.projective) {
    std::string h = unique_name(ring->vars, "h");
    RingPtr closed = extend_ring(ring, {VarDecl{h, 0, 1, 0}}, ring->order);
    J = homogenize_closure(J, closed, h);
    ring = closed;
  }

  // Coordinates that vanish identically on the cone polarize a trivial factor
  // and are dropped before the twist bookkeeping.
  std::vector<std::string> dead;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (ring->vars[i].cone_weight <= 0) continue;
    if (member(Poly::variable(ring, i), J)) dead.push_back(ring->vars[i].name);
  }
  if (!dead.empty()) {
    RingPtr pruned = drop_vars(ring, dead);
    std::map<std::string, Poly> zeros;
    for (const auto& n : dead) zeros[n] = Poly::zero(pruned);
    J = apply(ring_map(ring, pruned, zeros), J);
    ring = pruned;
  }

  // The slice data below computes the class of the cone with its polarization
  // twist normalized away, so a single twist must remain to fold back in.
  int d = 0;
  bool uniform = true;
  bool first = true;
  for (const auto& v : ring->vars) {
    if (v.cone_weight <= 0) continue;
    if (first) {
      d = v.base_weight;
      first = false;
    } else if (v.base_weight != d) {
      uniform = false;
    }
  }
  if (!uniform) d = 0;

  // P(C (+) 1): one fresh untwisted coordinate, no new relations.
  std::string tname = unique_name(ring->vars, "T");
  RingPtr pring = extend_ring(ring, {VarDecl{tname, 1, 0, 1}}, ring->order);
  std::vector<Poly> gens;
  for (const auto& g : J.gens()) gens.push_back(into(g, pring));
  Ideal P(pring, std::move(gens));

  P = saturate(P, coordinate_ideal(pring, false));
  P = saturate(P, coordinate_ideal(pring, true));
  if (is_unit_ideal(P)) throw applicability_error("cone has no points over the projective base");

  std::vector<Int> md;
  try {
    md = multidegree(P, mix_seed(seed, "segre", 0));
  } catch (const input_error&) {
    // A mixed polarization on a projective base breaks the product grading
    // the slice counts need; everything else is a genuine input problem.
    if (!uniform) throw applicability_error("segre class needs a uniform twist on the cone coordinates");
    throw;
  }
  const int delta = static_cast<int>(md.size()) - 1;

  // A mixed polarization is tolerated only where the twist correction has
  // nothing to act on.
  if (!uniform) {
    for (int m = 1; m <= delta; ++m)
      if (md[m] != 0)
        throw applicability_error("segre class needs a uniform twist on the cone coordinates");
  }

  int nbase = 0;
  for (const auto& v : pring->vars)
    if (v.cone_weight <= 0) ++nbase;
  const int n = nbase - 1;

  ChowClass out = chow_zero(n);
  for (int m = 0; m <= std::min(delta, n); ++m) {
    Int acc = 0;
    Int power = 1;
    for (int j = 0; m + j <= delta; ++j) {
      if (j > 0) power *= -d;
      Int b = binom(delta - 1 - m, j);
      if (b != 0) acc += b * power * md[m + j];
    }
    out.coeffs[m] = Rat(acc);
  }
  return out;
}

}  // namespace conecalc
