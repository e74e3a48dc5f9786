#include "conecalc/poly.hpp"

#include <algorithm>

namespace conecalc {

int PolyRing::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i].name == name) return i;
  return -1;
}

bool PolyRing::compatible(const PolyRing& other) const {
  if (vars.size() != other.vars.size()) return false;
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name != other.vars[i].name) return false;
  return true;
}

namespace {

// +1 if a > b under grevlex restricted to positions where pick(i) holds.
template <class Pick>
int grevlex_cmp(const Mono& a, const Mono& b, Pick pick) {
  long da = 0, db = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (pick(i)) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da > db ? 1 : -1;
  for (int i = n - 1; i >= 0; --i)
    if (pick(i) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int PolyRing::cmp(const Mono& a, const Mono& b) const {
  switch (order) {
    case Order::Lex:
      for (int i = 0; i < nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Order::Grevlex:
      return grevlex_cmp(a, b, [](int) { return true; });
    case Order::Block: {
      int c = grevlex_cmp(a, b, [&](int i) { return vars[i].block == elim_block; });
      if (c != 0) return c;
      return grevlex_cmp(a, b, [&](int i) { return vars[i].block != elim_block; });
    }
  }
  return 0;
}

RingPtr make_ring(std::vector<VarDecl> vars, Order order, int elim_block) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name) throw input_error("duplicate variable name: " + vars[i].name);
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->order = order;
  r->elim_block = elim_block;
  return r;
}

RingPtr with_order(const RingPtr& r, Order order, int elim_block) {
  return make_ring(r->vars, order, elim_block);
}

RingPtr extend_ring(const RingPtr& r, const std::vector<VarDecl>& extra, Order order, int elim_block) {
  auto vars = r->vars;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars), order, elim_block);
}

RingPtr drop_vars(const RingPtr& r, const std::vector<std::string>& names) {
  std::vector<VarDecl> vars;
  for (const auto& v : r->vars)
    if (std::find(names.begin(), names.end(), v.name) == names.end()) vars.push_back(v);
  if (static_cast<int>(vars.size()) + static_cast<int>(names.size()) != r->nvars())
    throw input_error("drop_vars: variable not present");
  return make_ring(std::move(vars), r->order, r->elim_block);
}

RingPtr base_ring(const std::vector<std::string>& names) {
  std::vector<VarDecl> vars;
  for (const auto& n : names) vars.push_back({n, 0, 1, 0});
  return make_ring(std::move(vars));
}

int mono_total_deg(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring_->cmp(a.m, b.m) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().m == t.m)
      terms_.back().c += t.c;
    else
      terms_.push_back(t);
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.c == 0; }),
               terms_.end());
}

Poly Poly::constant(const RingPtr& r, const Rat& c) {
  Poly p(r);
  if (c != 0) p.terms_.push_back({Mono(r->nvars(), 0), c});
  return p;
}

Poly Poly::variable(const RingPtr& r, int var, int exp) {
  Poly p(r);
  Mono m(r->nvars(), 0);
  m[var] = exp;
  p.terms_.push_back({m, Rat(1)});
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].c == 1 && mono_total_deg(terms_[0].m) == 0;
}

const Term& Poly::lt() const {
  if (terms_.empty()) throw input_error("leading term of zero polynomial");
  return terms_[0];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      int c = ring_->cmp(terms_[i].m, o.terms_[j].m);
      if (c > 0)
        r.terms_.push_back(terms_[i++]);
      else if (c < 0)
        r.terms_.push_back(o.terms_[j++]);
      else {
        Rat s = terms_[i].c + o.terms_[j].c;
        if (s != 0) r.terms_.push_back({terms_[i].m, s});
        ++i, ++j;
      }
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.m, m), t.c * c});
  return r;
}

Poly Poly::mul_scalar(const Rat& c) const { return mul_term(Mono(ring_->nvars(), 0), c); }

Poly Poly::operator*(const Poly& o) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({mono_mul(a.m, b.m), a.c * b.c});
  return Poly(ring_, std::move(acc));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

int Poly::total_deg() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono_total_deg(t.m));
  return d;
}

int Poly::weighted_deg(bool cone_weights) const {
  int d = -1;
  for (const auto& t : terms_) {
    int w = 0;
    for (int i = 0; i < ring_->nvars(); ++i)
      w += t.m[i] * (cone_weights ? ring_->vars[i].cone_weight : ring_->vars[i].base_weight);
    d = std::max(d, w);
  }
  return d;
}

bool Poly::homogeneous(bool cone_weights) const {
  if (terms_.empty()) return true;
  std::optional<int> deg;
  for (const auto& t : terms_) {
    int w = 0;
    for (int i = 0; i < ring_->nvars(); ++i)
      w += t.m[i] * (cone_weights ? ring_->vars[i].cone_weight : ring_->vars[i].base_weight);
    if (!deg)
      deg = w;
    else if (*deg != w)
      return false;
  }
  return true;
}

std::vector<Poly> Poly::bihomogeneous_components() const {
  std::map<std::pair<int, int>, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    int wb = 0, wc = 0;
    for (int i = 0; i < ring_->nvars(); ++i) {
      wb += t.m[i] * ring_->vars[i].base_weight;
      wc += t.m[i] * ring_->vars[i].cone_weight;
    }
    buckets[{wb, wc}].push_back(t);
  }
  std::vector<Poly> out;
  for (auto& [k, v] : buckets) out.push_back(Poly(ring_, std::move(v)));
  return out;
}

Poly Poly::derivative(int var) const {
  Poly r(ring_);
  for (const auto& t : terms_) {
    if (t.m[var] == 0) continue;
    Term d = t;
    d.c *= t.m[var];
    d.m[var] -= 1;
    r.terms_.push_back(d);
  }
  // order is preserved by x_i-degree shift? Not in general: re-normalize.
  return Poly(ring_, std::move(r.terms_));
}

Poly transport(const Poly& p, const RingPtr& dst) {
  if (p.ring()->compatible(*dst)) {
    Poly q(dst, p.terms());
    return q;
  }
  std::vector<int> map(p.ring()->nvars(), -1);
  for (int i = 0; i < p.ring()->nvars(); ++i) map[i] = dst->index_of(p.ring()->vars[i].name);
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Mono m(dst->nvars(), 0);
    for (int i = 0; i < p.ring()->nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (map[i] < 0)
        throw input_error("transport: variable " + p.ring()->vars[i].name + " missing in target ring");
      m[map[i]] = t.m[i];
    }
    out.push_back({m, t.c});
  }
  return Poly(dst, std::move(out));
}

Poly substitute(const Poly& p, const RingPtr& dst, const std::map<int, Poly>& images) {
  Poly acc(dst);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(dst, t.c);
    for (int i = 0; i < p.ring()->nvars(); ++i) {
      if (t.m[i] == 0) continue;
      auto it = images.find(i);
      if (it != images.end()) {
        for (int e = 0; e < t.m[i]; ++e) term = term * it->second;
      } else {
        int j = dst->index_of(p.ring()->vars[i].name);
        if (j < 0)
          throw input_error("substitute: variable " + p.ring()->vars[i].name + " missing in target ring");
        term = term.mul_term([&] {
          Mono m(dst->nvars(), 0);
          m[j] = t.m[i];
          return m;
        }(), Rat(1));
      }
    }
    acc = acc + term;
  }
  return acc;
}

std::vector<Poly> parse_polys(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const auto& s : texts) out.push_back(parse_poly(r, s));
  return out;
}

std::vector<std::string> poly_strs(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(poly_str(p));
  return out;
}

}  // namespace conecalc
