#pragma once

#include <optional>
#include <vector>

#include "conecalc/ideal.hpp"

namespace conecalc {

// Element of a free module ring^rank.
using ModVec = std::vector<Poly>;

ModVec modvec_zero(const RingPtr& r, int rank);
ModVec modvec_unit(const RingPtr& r, int rank, int i);
bool modvec_is_zero(const ModVec& v);
ModVec modvec_add(const ModVec& a, const ModVec& b);
ModVec modvec_sub(const ModVec& a, const ModVec& b);
ModVec modvec_scale(const ModVec& a, const Poly& c);

// Finitely presented module over ring/base: free of the given rank modulo
// `relations` and base-ideal multiples of the generators.
struct PresentedModule {
  RingPtr ring;
  Ideal base;
  int rank = 0;
  std::vector<ModVec> relations;

  std::vector<ModVec> all_relations() const;
};

PresentedModule free_module(RingPtr ring, Ideal base, int rank);

// Module Groebner basis of the span of gens in ring^rank, position-over-term
// (lower component index dominates, ring order inside a component).
std::vector<ModVec> module_groebner(const RingPtr& r, int rank, std::vector<ModVec> gens);
ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& basis);

// Generators of { (a_i) : sum a_i * gens[i] == 0 } in ring^{gens.size()}.
std::vector<ModVec> syzygies(const RingPtr& r, int rank, const std::vector<ModVec>& gens);
// Same, but modulo amb.all_relations(); the tail coefficients are discarded.
std::vector<ModVec> syzygies_mod(const PresentedModule& amb, const std::vector<ModVec>& gens);

// Span of gens + amb.all_relations(), as a reusable Groebner basis.
std::vector<ModVec> span_basis(const PresentedModule& amb, std::vector<ModVec> gens);
bool span_contains(const std::vector<ModVec>& basis, const ModVec& v);
bool span_equal(const PresentedModule& amb, const std::vector<ModVec>& a,
                const std::vector<ModVec>& b);

// Coefficients expressing v in the span of gens modulo amb.all_relations().
std::optional<std::vector<Poly>> express_in_span(const PresentedModule& amb,
                                                 const std::vector<ModVec>& gens, const ModVec& v);

bool is_zero_module(const PresentedModule& m);

// Homomorphism src -> dst; cols[j] is the image of the j-th source generator.
// Construction checks that source relations land in dst's relation span.
struct ModuleMap {
  PresentedModule src;
  PresentedModule dst;
  std::vector<ModVec> cols;
};
ModuleMap module_map(PresentedModule src, PresentedModule dst, std::vector<ModVec> cols);
ModVec map_apply(const ModuleMap& f, const ModVec& v);

struct MapDiagnostics {
  PresentedModule kernel;          // presented on kernel_gens
  std::vector<ModVec> kernel_gens; // vectors in src coordinates
  PresentedModule cokernel;
  bool injective = false;
  bool surjective = false;
};
MapDiagnostics map_diagnostics(const ModuleMap& f);

}  // namespace conecalc
