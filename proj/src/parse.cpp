#include "conecalc/poly.hpp"

#include <cctype>
#include <sstream>

namespace conecalc {

namespace {

// Grammar:
//   expr    := term (('+'|'-') term)*
//   term    := ('-')* factor ('*' factor)*
//   factor  := atom ('^' integer)?
//   atom    := number | identifier | '(' expr ')'
//   number  := digits ('/' digits)?
struct Parser {
  const RingPtr& ring;
  const std::string& src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw input_error("parse error at position " + std::to_string(pos) + ": " + what + " in \"" +
                      src + "\"");
  }

  std::string digits() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return src.substr(start, pos - start);
  }

  Poly number() {
    std::string num = digits();
    if (eat('/')) {
      std::string den = digits();
      return Poly::constant(ring, rat_from_string(num + "/" + den));
    }
    return Poly::constant(ring, rat_from_string(num));
  }

  Poly identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string name = src.substr(start, pos - start);
    int idx = ring->index_of(name);
    if (idx < 0) fail("unknown variable \"" + name + "\"");
    return Poly::variable(ring, idx);
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("expected number, variable, or '('");
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      std::string e = digits();
      long exp = std::stol(e);
      Poly r = Poly::constant(ring, Rat(1));
      for (long i = 0; i < exp; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly term() {
    bool neg = false;
    while (true) {
      char c = peek();
      if (c == '-') {
        neg = !neg;
        ++pos;
      } else if (c == '+') {
        ++pos;
      } else {
        break;
      }
    }
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return neg ? -p : p;
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        p = p + term();
      } else if (c == '-') {
        // leave the sign for term() so "-2*x" groups as expected
        p = p + term();
      } else {
        break;
      }
    }
    return p;
  }
};

std::string mono_str(const RingPtr& r, const Mono& m) {
  std::string s;
  for (int i = 0; i < r->nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += r->vars[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Parser p{ring, text};
  Poly result = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return result;
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string ms = mono_str(p.ring(), t.m);
    if (ms.empty()) {
      s += rat_str(c);
    } else {
      if (c != 1) s += rat_str(c) + "*";
      s += ms;
    }
    first = false;
  }
  return s;
}

}  // namespace conecalc
