#include "conecalc/suites.hpp"

#include <map>
#include <string>
#include <vector>

#include "conecalc/module.hpp"
#include "conecalc/rng.hpp"
#include "conecalc/updown.hpp"
#include "conecalc/vfc.hpp"

namespace conecalc {
namespace {

using Echo = std::vector<std::pair<std::string, std::string>>;

Poly into(const Poly& p, const RingPtr& r) {
  if (p.is_zero()) return Poly::zero(r);
  return p.ring() == r ? p : transport(p, r);
}

std::string polys_str(const std::vector<Poly>& ps) {
  std::string out = "[";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += poly_str(ps[i]);
  }
  return out + "]";
}

std::string matrix_str(const std::vector<std::vector<Poly>>& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    out += polys_str(m[i]);
  }
  return out + "]";
}

std::vector<std::vector<Poly>> inclusion_matrix(const RingPtr& r, int rows,
                                                int cols) {
  std::vector<std::vector<Poly>> m(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m[i].push_back(i == j ? Poly::constant(r, rat_make(1)) : Poly::zero(r));
  return m;
}

// Which atoms a random square may be built from.  Up-squares allow anything,
// down-squares stay inside the applicability hypotheses of going down, and
// qi-squares are honest quasi-isomorphisms.
enum class Pool { up, down, qi };

// Deterministic instance generator.  Coordinate names are globally fresh per
// instance, so direct sums never have to rename anything.
struct Gen {
  Rng rng;
  int counter = 0;

  explicit Gen(uint64_t seed) : rng(seed) {}

  long small(long lo, long hi) { return rng.draw(lo, hi); }

  Rat coeff() { return rat_make(rng.draw(-2, 2)); }

  BaseSpace base() {
    switch (rng.draw(0, 3)) {
      case 0: return make_base({"t"}, {});
      case 1: return make_base({"t", "u"}, {});
      case 2: return make_base({"t"}, {"t^2"});
      default: return make_base({"t", "u"}, {"t*u"});
    }
  }

  // Polynomial of degree at most one in the base variables.
  Poly entry(const BaseSpace& b) {
    Poly p = Poly::constant(b.ring, coeff());
    for (int i = 0; i < b.ring->nvars(); ++i)
      p = p + Poly::variable(b.ring, i).mul_scalar(coeff());
    return p;
  }

  std::vector<std::vector<Poly>> matrix(const BaseSpace& b, int rows,
                                        int cols) {
    std::vector<std::vector<Poly>> m(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m[i].push_back(entry(b));
    return m;
  }

  LinearSpace space(const BaseSpace& b, int rank) {
    std::vector<std::string> names;
    std::vector<int> twists;
    for (int i = 0; i < rank; ++i) {
      names.push_back("Y" + std::to_string(counter++));
      twists.push_back(0);
    }
    return free_space(b, names, twists);
  }

  TwoTermComplex complex(const BaseSpace& b) {
    LinearSpace e0 = space(b, static_cast<int>(rng.draw(1, 2)));
    LinearSpace e1 = space(b, static_cast<int>(rng.draw(1, 2)));
    std::vector<std::vector<Poly>> d = matrix(b, e1.rank(), e0.rank());
    return two_term_complex(e0, e1, linspace_hom(e0, e1, std::move(d)));
  }

  // Self-square on c whose legs are the identity sheared by a random
  // homotopy K: e1 -> e0.  Always a quasi-isomorphism.
  ComplexSquare shear_square(const TwoTermComplex& c) {
    LinSpaceHom k =
        linspace_hom(c.e1, c.e0, matrix(c.e0.base, c.e0.rank(), c.e1.rank()));
    LinSpaceHom p0 = hom_add(identity_hom(c.e0), compose(k, c.d));
    LinSpaceHom p1 = hom_add(identity_hom(c.e1), compose(c.d, k));
    return complex_square(c, c, p0, p1);
  }

  // Pads c with an acyclic [A = A] summand; a quasi-isomorphism.
  ComplexSquare pad_square(const TwoTermComplex& c) {
    const BaseSpace& b = c.e0.base;
    LinearSpace f0 = direct_sum(c.e0, space(b, 1));
    LinearSpace f1 = direct_sum(c.e1, space(b, 1));
    int r0 = c.e0.rank(), r1 = c.e1.rank();
    std::vector<std::vector<Poly>> dm(r1 + 1);
    for (int i = 0; i <= r1; ++i)
      for (int j = 0; j <= r0; ++j) {
        Poly v = Poly::zero(b.ring);
        if (i < r1 && j < r0) v = c.d.matrix[i][j];
        if (i == r1 && j == r0) v = Poly::constant(b.ring, rat_make(1));
        dm[i].push_back(v);
      }
    TwoTermComplex f = two_term_complex(f0, f1, linspace_hom(f0, f1, dm));
    return complex_square(
        c, f, linspace_hom(c.e0, f0, inclusion_matrix(b.ring, r0 + 1, r0)),
        linspace_hom(c.e1, f1, inclusion_matrix(b.ring, r1 + 1, r1)));
  }

  // Adds a trivial summand to the degree-one term with a zero differential
  // row.  Not a quasi-isomorphism (the kernel side grows), but going down
  // still applies: the new factor simply collapses.
  ComplexSquare widen_square(const TwoTermComplex& c) {
    const BaseSpace& b = c.e0.base;
    LinearSpace f1 = direct_sum(c.e1, space(b, 1));
    int r0 = c.e0.rank(), r1 = c.e1.rank();
    std::vector<std::vector<Poly>> dm(r1 + 1);
    for (int i = 0; i <= r1; ++i)
      for (int j = 0; j < r0; ++j)
        dm[i].push_back(i < r1 ? c.d.matrix[i][j] : Poly::zero(b.ring));
    TwoTermComplex f = two_term_complex(c.e0, f1, linspace_hom(c.e0, f1, dm));
    return complex_square(
        c, f, identity_hom(c.e0),
        linspace_hom(c.e1, f1, inclusion_matrix(b.ring, r1 + 1, r1)));
  }

  // Adds a summand to the degree-zero term with a fresh differential column.
  // Generally neither a quasi-isomorphism nor down-applicable.
  ComplexSquare fatten_square(const TwoTermComplex& c) {
    const BaseSpace& b = c.e0.base;
    LinearSpace f0 = direct_sum(c.e0, space(b, 1));
    int r0 = c.e0.rank(), r1 = c.e1.rank();
    std::vector<std::vector<Poly>> dm(r1);
    for (int i = 0; i < r1; ++i) {
      for (int j = 0; j < r0; ++j) dm[i].push_back(c.d.matrix[i][j]);
      dm[i].push_back(entry(b));
    }
    TwoTermComplex f = two_term_complex(f0, c.e1, linspace_hom(f0, c.e1, dm));
    return complex_square(
        c, f, linspace_hom(c.e0, f0, inclusion_matrix(b.ring, r0 + 1, r0)),
        identity_hom(c.e1));
  }

  // outer after inner, revalidated.
  ComplexSquare chain(const ComplexSquare& outer, const ComplexSquare& inner) {
    return complex_square(inner.src, outer.dst,
                          compose(outer.phi0, inner.phi0),
                          compose(outer.phi1, inner.phi1));
  }

  // Random square out of `start`: one or two atoms composed, drawn from the
  // pool.  Growth atoms are skipped once the target gets rank three so the
  // Groebner work stays small.
  ComplexSquare square_from(const TwoTermComplex& start, Pool pool) {
    ComplexSquare s = complex_square(start, start, identity_hom(start.e0),
                                     identity_hom(start.e1));
    int steps = static_cast<int>(rng.draw(1, 2));
    for (int i = 0; i < steps; ++i) {
      int hi = pool == Pool::up ? 3 : pool == Pool::down ? 2 : 1;
      int kind = static_cast<int>(rng.draw(0, hi));
      if (kind > 0 && (s.dst.e0.rank() >= 3 || s.dst.e1.rank() >= 3)) kind = 0;
      ComplexSquare atom = kind == 0   ? shear_square(s.dst)
                           : kind == 1 ? pad_square(s.dst)
                           : kind == 2 ? widen_square(s.dst)
                                       : fatten_square(s.dst);
      s = chain(atom, s);
    }
    return s;
  }

  // Same square with both legs sheared by a random homotopy
  // K: src.e1 -> dst.e0.
  ComplexSquare sheared(const ComplexSquare& s) {
    LinSpaceHom k =
        linspace_hom(s.src.e1, s.dst.e0,
                     matrix(s.src.e0.base, s.dst.e0.rank(), s.src.e1.rank()));
    LinSpaceHom p0 = hom_add(s.phi0, compose(k, s.src.d));
    LinSpaceHom p1 = hom_add(s.phi1, compose(s.dst.d, k));
    return complex_square(s.src, s.dst, p0, p1);
  }

  // Invariant cone inside the degree-one term of c.  The transport laws are
  // about cones stable under translation by the image of the differential,
  // and the linear forms cutting out such cones are exactly the kernel of
  // the dual differential, i.e. the syzygies of its rows.  Generators are
  // random combinations of those syzygies of cone degree one or two, plus
  // pullbacks from the base; the result is certified with is_econe and the
  // rare degenerate draw falls back to the whole space.
  Cone econe_in(const TwoTermComplex& c) {
    const BaseSpace& b = c.e0.base;
    PresentedModule amb = free_module(b.ring, b.ideal, c.e0.rank());
    std::vector<ModVec> rows;
    for (int i = 0; i < c.e1.rank(); ++i) {
      ModVec row;
      for (const Poly& p : c.d.matrix[i]) row.push_back(into(p, b.ring));
      rows.push_back(std::move(row));
    }
    std::vector<ModVec> syz = syzygies_mod(amb, rows);

    auto invariant_linear = [&]() {
      Poly f = Poly::zero(c.e1.ring);
      for (const auto& a : syz) {
        Rat w = coeff();
        if (w == 0) continue;
        for (int i = 0; i < c.e1.rank(); ++i) {
          if (a[i].is_zero()) continue;
          f = f + c.e1.coord(i) * into(a[i], c.e1.ring).mul_scalar(w);
        }
      }
      return f;
    };

    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<Poly> gens;
      int n = static_cast<int>(rng.draw(1, 2));
      for (int i = 0; i < n; ++i) {
        Poly f = invariant_linear();
        long kind = rng.draw(0, 2);
        if (kind == 1) {
          f = f * invariant_linear();
        } else if (kind == 2) {
          Poly base_part = into(entry(b), c.e1.ring);
          f = f.is_zero() ? base_part : base_part * f;
        }
        if (!f.is_zero()) gens.push_back(f);
      }
      Cone cand = make_cone(c.e1, gens);
      if (is_econe(cand, c.d)) return cand;
    }
    return make_cone(c.e1, {});
  }

  // Nonzero homogeneous form of the given degree in up to three variables.
  Poly form(const RingPtr& r, int deg) {
    while (true) {
      Poly p = Poly::zero(r);
      for (int i = 0; i < r->nvars(); ++i) {
        if (deg == 1) {
          p = p + Poly::variable(r, i).mul_scalar(coeff());
        } else {
          for (int j = i; j < r->nvars(); ++j)
            p = p + (Poly::variable(r, i) * Poly::variable(r, j))
                        .mul_scalar(coeff());
        }
      }
      if (!p.is_zero()) return p;
    }
  }
};

void echo_base(Echo& echo, const BaseSpace& b) {
  std::string vars;
  for (int i = 0; i < b.ring->nvars(); ++i) {
    if (i) vars += ", ";
    vars += b.ring->vars[i].name;
  }
  echo.emplace_back("base.vars", vars);
  echo.emplace_back("base.ideal", polys_str(b.ideal.gens()));
}

void echo_space(Echo& echo, const std::string& tag, const LinearSpace& e) {
  std::string names;
  for (int i = 0; i < e.rank(); ++i) {
    if (i) names += ", ";
    names += poly_str(e.coord(i));
  }
  echo.emplace_back(tag, names.empty() ? "(rank 0)" : names);
}

void echo_square(Echo& echo, const std::string& tag, const ComplexSquare& s) {
  echo_space(echo, tag + ".src.e0", s.src.e0);
  echo_space(echo, tag + ".src.e1", s.src.e1);
  echo.emplace_back(tag + ".src.d", matrix_str(s.src.d.matrix));
  echo_space(echo, tag + ".dst.e0", s.dst.e0);
  echo_space(echo, tag + ".dst.e1", s.dst.e1);
  echo.emplace_back(tag + ".dst.d", matrix_str(s.dst.d.matrix));
  echo.emplace_back(tag + ".phi0", matrix_str(s.phi0.matrix));
  echo.emplace_back(tag + ".phi1", matrix_str(s.phi1.matrix));
}

void echo_cone(Echo& echo, const std::string& tag, const Cone& c) {
  echo.emplace_back(tag, polys_str(c.ideal.gens()));
}

struct Instance {
  bool pass = false;
  std::string note;
};

Instance law_up_homotopy(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  ComplexSquare s = g.square_from(g.complex(b), Pool::up);
  ComplexSquare sh = g.sheared(s);
  Cone cbar = g.econe_in(s.dst);
  echo_base(echo, b);
  echo_square(echo, "square", s);
  echo_square(echo, "sheared", sh);
  echo_cone(echo, "cone", cbar);
  bool ok = cone_equal(going_up(s, cbar), going_up(sh, cbar));
  return {ok, ok ? "" : "pullbacks differ after a homotopy shear"};
}

Instance law_down_homotopy(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  ComplexSquare s = g.square_from(g.complex(b), Pool::down);
  ComplexSquare sh = g.sheared(s);
  Cone c = going_up(s, g.econe_in(s.dst));
  echo_base(echo, b);
  echo_square(echo, "square", s);
  echo_square(echo, "sheared", sh);
  echo_cone(echo, "cone", c);
  bool ok = cone_equal(going_down(s, c), going_down(sh, c));
  return {ok, ok ? "" : "pushforwards differ after a homotopy shear"};
}

Instance law_up_functorial(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  TwoTermComplex a = g.complex(b);
  ComplexSquare s1 = g.square_from(a, Pool::up);
  ComplexSquare s2 = g.square_from(s1.dst, Pool::up);
  ComplexSquare s12 = g.chain(s2, s1);
  Cone cbar = g.econe_in(s2.dst);
  echo_base(echo, b);
  echo_square(echo, "first", s1);
  echo_square(echo, "second", s2);
  echo_cone(echo, "cone", cbar);
  bool ok = cone_equal(going_up(s1, going_up(s2, cbar)), going_up(s12, cbar));
  return {ok, ok ? "" : "pullback along the composite differs"};
}

Instance law_down_functorial(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  TwoTermComplex a = g.complex(b);
  ComplexSquare s1 = g.square_from(a, Pool::down);
  ComplexSquare s2 = g.square_from(s1.dst, Pool::down);
  ComplexSquare s12 = g.chain(s2, s1);
  Cone c = going_up(s12, g.econe_in(s2.dst));
  echo_base(echo, b);
  echo_square(echo, "first", s1);
  echo_square(echo, "second", s2);
  echo_cone(echo, "cone", c);
  bool ok =
      cone_equal(going_down(s2, going_down(s1, c)), going_down(s12, c));
  return {ok, ok ? "" : "pushforward along the composite differs"};
}

Instance law_left_inverse(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  ComplexSquare s = g.square_from(g.complex(b), Pool::down);
  Cone c = going_up(s, g.econe_in(s.dst));
  echo_base(echo, b);
  echo_square(echo, "square", s);
  echo_cone(echo, "cone", c);
  bool ok = cone_equal(going_up(s, going_down(s, c)), c);
  return {ok, ok ? "" : "pull after push does not restore the cone"};
}

Instance law_roundtrip(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  ComplexSquare s = g.square_from(g.complex(b), Pool::qi);
  Cone cbar = g.econe_in(s.dst);
  Cone c = going_up(s, cbar);
  echo_base(echo, b);
  echo_square(echo, "square", s);
  echo_cone(echo, "cone.down", cbar);
  echo_cone(echo, "cone.up", c);
  if (!square_cohomology(s).quasi_iso())
    return {false, "generator produced a square that is not a quasi-iso"};
  Cone down = going_down(s, c);
  bool ok = cone_equal(down, cbar) && cone_equal(going_up(s, down), c);
  return {ok, ok ? "" : "round trips do not restore both cones"};
}

Instance law_exact_sequence(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  ComplexSquare s = g.square_from(g.complex(b), Pool::down);
  Cone c = going_up(s, g.econe_in(s.dst));
  Cone cbar = going_down(s, c);
  echo_base(echo, b);
  echo_square(echo, "square", s);
  echo_cone(echo, "cone", c);
  echo_cone(echo, "cone.down", cbar);

  // Rebuild both sides of q^{-1}(down) = E0 (+) C from primitives: q is the
  // sum of the target differential and phi1 on E0 (+) F1.
  LinearSpace big = direct_sum(s.dst.e0, s.src.e1);
  int r0 = s.dst.e0.rank();
  std::vector<std::vector<Poly>> qm(s.dst.e1.rank());
  for (int i = 0; i < s.dst.e1.rank(); ++i) {
    for (int j = 0; j < r0; ++j) qm[i].push_back(s.dst.d.matrix[i][j]);
    for (int j = 0; j < s.src.e1.rank(); ++j)
      qm[i].push_back(s.phi1.matrix[i][j]);
  }
  LinSpaceHom q = linspace_hom(big, s.dst.e1, qm);

  std::map<std::string, Poly> by_name;
  for (const auto& [idx, img] : pullback_images(q))
    by_name[s.dst.e1.ring->vars[idx].name] = img;
  RingMap qstar = ring_map(s.dst.e1.ring, big.ring, by_name);
  Cone pre = make_cone(big, apply(qstar, cbar.ideal).gens());

  std::map<std::string, Poly> emb;
  for (int j = 0; j < s.src.e1.rank(); ++j)
    emb[s.src.e1.ring->vars[s.src.e1.coords[j]].name] = big.coord(r0 + j);
  RingMap inc = ring_map(s.src.e1.ring, big.ring, emb);
  Cone prod = make_cone(big, apply(inc, c.ideal).gens());

  bool ok = cone_equal(pre, prod);
  return {ok, ok ? "" : "preimage of the pushforward is not E0 (+) C"};
}

Instance law_associated(Gen& g, Echo& echo) {
  BaseSpace b = g.base();
  ComplexSquare s = g.square_from(g.complex(b), Pool::up);
  echo_base(echo, b);
  echo_square(echo, "square", s);
  ExactnessFlags ex = associated_sequence_exactness(s);
  SquareCohomology coh = square_cohomology(s);
  bool ok = ex.at_target == coh.h0_surjective &&
            ex.at_middle == (coh.h0_injective && coh.hminus1_surjective) &&
            ex.at_source == coh.hminus1_injective;
  return {ok, ok ? "" : "sequence exactness disagrees with the cohomology"};
}

Instance law_purity(Gen& g, Echo& echo) {
  BaseSpace amb = make_base({"x0", "x1", "x2"}, {}, true);
  int k = static_cast<int>(g.small(1, 2));
  std::vector<Poly> section;
  std::vector<int> twists;
  for (int i = 0; i < k; ++i) {
    int d = static_cast<int>(g.small(1, 2));
    section.push_back(g.form(amb.ring, d));
    twists.push_back(d);
  }
  echo.emplace_back("section", polys_str(section));

  Ideal cut = saturate(Ideal(amb.ring, section),
                       coordinate_ideal(amb.ring, false));
  EmbeddedScheme x = make_embedded(BaseSpace{amb.ring, cut, true});
  Cone c = global_normal_cone(x, section_of_bundle(twists, section));
  bool ok = cone_dimension(c) == x.ambient_dim;
  return {ok, ok ? "" : "normal cone is not pure of the ambient dimension"};
}

struct LawEntry {
  const char* name;
  Instance (*fn)(Gen&, Echo&);
};

constexpr LawEntry kLaws[] = {
    {"going-up-homotopy", law_up_homotopy},
    {"going-down-homotopy", law_down_homotopy},
    {"going-up-functorial", law_up_functorial},
    {"going-down-functorial", law_down_functorial},
    {"left-inverse", law_left_inverse},
    {"quasi-iso-roundtrip", law_roundtrip},
    {"exact-sequence", law_exact_sequence},
    {"associated-exactness", law_associated},
    {"purity-sections", law_purity},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& law : kLaws) out.emplace_back(law.name);
    return out;
  }();
  return names;
}

SuiteOutcome run_suite(const std::string& name, const SuiteOptions& opt) {
  const LawEntry* entry = nullptr;
  for (const auto& law : kLaws)
    if (name == law.name) entry = &law;
  if (!entry) throw input_error("unknown suite: " + name);

  SuiteOutcome out;
  out.suite = name;
  for (int i = 0; i < opt.count; ++i) {
    int index = opt.start_index + i;
    Gen gen(mix_seed(opt.seed, name, static_cast<uint64_t>(index)));
    Echo echo;
    Instance inst;
    try {
      inst = entry->fn(gen, echo);
    } catch (const conecalc_error& e) {
      inst.pass = false;
      inst.note = std::string("unexpected error: ") + e.what();
    }
    bool pass = opt.mutated ? !inst.pass : inst.pass;
    ++out.run;
    if (pass) {
      ++out.passed;
      continue;
    }
    if (out.failed_index < 0) {
      out.failed_index = index;
      out.note = inst.note.empty() ? "law comparison failed" : inst.note;
      out.instance = std::move(echo);
    }
  }
  return out;
}

}  // namespace conecalc
