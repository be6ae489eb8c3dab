#include "linkinv/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace linkinv {

VarTable::VarTable(std::vector<std::string> ns) : names(std::move(ns)) {
  for (int i = 0; i < (int)names.size(); ++i) {
    auto [it, fresh] = index.emplace(names[i], i);
    (void)it;
    if (!fresh) throw std::runtime_error("duplicate variable name: " + names[i]);
  }
}

int VarTable::find(const std::string& n) const {
  auto it = index.find(n);
  return it == index.end() ? -1 : it->second;
}

Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

bool mono_is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

int mono_deg(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  assert(mono_divides(a, b));
  Monomial r(b);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly poly_zero() { return Poly{}; }

Poly poly_const(int nvars, Rational c) {
  if (c == 0) return poly_zero();
  return Poly{{Term{mono_one(nvars), std::move(c)}}};
}

Poly poly_var(int nvars, int i, int e) {
  assert(i >= 0 && i < nvars && e >= 0);
  if (e == 0) return poly_const(nvars, 1);
  Monomial m = mono_one(nvars);
  m[i] = e;
  return Poly{{Term{std::move(m), 1}}};
}

Poly poly_from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return mono_less(y.m, x.m); });
  Poly r;
  for (auto& t : terms) {
    if (!r.t.empty() && r.t.back().m == t.m)
      r.t.back().c += t.c;
    else
      r.t.push_back(std::move(t));
    if (!r.t.empty() && r.t.back().c == 0) r.t.pop_back();
  }
  return r;
}

// Merge two descending term lists.
Poly poly_add(const Poly& a, const Poly& b) {
  Poly r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    const Term& x = a.t[i];
    const Term& y = b.t[j];
    if (x.m == y.m) {
      Rational c = x.c + y.c;
      if (c != 0) r.t.push_back(Term{x.m, std::move(c)});
      ++i, ++j;
    } else if (mono_less(y.m, x.m)) {
      r.t.push_back(x);
      ++i;
    } else {
      r.t.push_back(y);
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r(a);
  for (auto& t : r.t) t.c = -t.c;
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_scale(const Poly& a, const Rational& c) {
  if (c == 0) return poly_zero();
  Poly r(a);
  for (auto& t : r.t) t.c *= c;
  return r;
}

Poly poly_mul_term(const Poly& a, const Monomial& m, const Rational& c) {
  if (c == 0) return poly_zero();
  Poly r(a);
  for (auto& t : r.t) {
    t.m = mono_mul(t.m, m);
    t.c *= c;
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& t : b.t) r = poly_add(r, poly_mul_term(a, t.m, t.c));
  return r;
}

bool poly_eq(const Poly& a, const Poly& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].m != b.t[i].m || a.t[i].c != b.t[i].c) return false;
  return true;
}

int poly_deg(const Poly& a) {
  int d = -1;
  for (const auto& t : a.t) d = std::max(d, mono_deg(t.m));
  return d;
}

Poly poly_subst(const Poly& a, int i, const Poly& value, int nvars) {
  Poly r;
  for (const auto& t : a.t) {
    Monomial m(t.m);
    int e = m[i];
    m[i] = 0;
    Poly piece = poly_mul_term(poly_const(nvars, t.c), m, 1);
    for (int k = 0; k < e; ++k) piece = poly_mul(piece, value);
    r = poly_add(r, piece);
  }
  return r;
}

std::string mono_to_string(const VarTable& vt, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << vt.name((int)i);
    if (m[i] != 1) os << "^" << m[i];
  }
  return first ? "1" : os.str();
}

std::string poly_to_string(const VarTable& vt, const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.t) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (mono_is_one(t.m)) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << mono_to_string(vt, t.m);
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const VarTable& vt;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": " + why + " in \"" + s + "\"");
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Integer parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return Integer(s.substr(start, pos - start));
  }

  // factor := integer | name [^ int] | ( expr )
  Poly parse_factor() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return maybe_pow_of(e);
    }
    if (std::isdigit((unsigned char)c)) {
      return poly_const(vt.size(), Rational(parse_int()));
    }
    if (std::isalpha((unsigned char)c)) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_' ||
              s[pos] == '\''))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = vt.find(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      int e = 1;
      if (eat('^')) e = (int)parse_int();
      return poly_var(vt.size(), idx, e);
    }
    fail("unexpected character");
  }

  Poly maybe_pow_of(const Poly& base) {
    if (!eat('^')) return base;
    int e = (int)parse_int();
    Poly r = poly_const(vt.size(), 1);
    for (int k = 0; k < e; ++k) r = poly_mul(r, base);
    return r;
  }

  // product := factor (* factor)*
  Poly parse_product() {
    Poly r = parse_factor();
    while (eat('*')) r = poly_mul(r, parse_factor());
    return r;
  }

  // expr := [+|-] product ((+|-) product)*
  Poly parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly r = parse_product();
    if (neg) r = poly_neg(r);
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r = poly_add(r, parse_product());
      } else if (c == '-') {
        ++pos;
        r = poly_sub(r, parse_product());
      } else {
        break;
      }
    }
    return r;
  }
};

} // namespace

Poly parse_poly(const VarTable& vt, const std::string& s) {
  Parser p{vt, s};
  Poly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != s.size()) p.fail("trailing input");
  return r;
}

} // namespace linkinv
