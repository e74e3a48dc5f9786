#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

// Monomial = dense exponent vector against a fixed ring.
using Mono = std::vector<int>;

enum class Order {
  Grevlex,  // graded reverse lexicographic over all variables
  Lex,      // lexicographic, leftmost variable dominant
  Block,    // eliminate one block: grevlex within the block, block degrees first
};

struct VarDecl {
  std::string name;
  int block = 0;        // 0 = base/ambient variables, >=1 = cone coordinate blocks
  int base_weight = 1;  // weight in the ambient (x-)grading
  int cone_weight = 0;  // weight in the cone grading (1 for cone coordinates)
};

// Immutable; polynomials hold a shared_ptr to their ring. Two rings are
// interchangeable iff compatible() (same variables in the same order);
// the monomial order is a property of the ring value.
struct PolyRing {
  std::vector<VarDecl> vars;
  Order order = Order::Grevlex;
  int elim_block = -1;  // only for Order::Block: the block compared first

  int nvars() const { return static_cast<int>(vars.size()); }
  int index_of(const std::string& name) const;  // -1 when absent
  bool compatible(const PolyRing& other) const;

  // order: +1 if a > b, 0, -1.
  int cmp(const Mono& a, const Mono& b) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<VarDecl> vars, Order order = Order::Grevlex, int elim_block = -1);
// Same variables, different order.
RingPtr with_order(const RingPtr& r, Order order, int elim_block = -1);
// Variables of `extra` appended after those of `r`; names must be fresh.
RingPtr extend_ring(const RingPtr& r, const std::vector<VarDecl>& extra, Order order = Order::Grevlex,
                    int elim_block = -1);
// Drop the named variables (they must exist).
RingPtr drop_vars(const RingPtr& r, const std::vector<std::string>& names);
// Convenience: n base variables named x0..x{n-1} (or from the given list).
RingPtr base_ring(const std::vector<std::string>& names);

int mono_total_deg(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // assumes b | a
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

}  // namespace conecalc
