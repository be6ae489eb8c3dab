#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "linkinv/rational.hpp"

namespace linkinv {

// A fixed, ordered list of variable names. Position in the list is the
// precedence used by the lex monomial order: names[0] is the most
// significant variable. Polynomials built against a table must all share it.
struct VarTable {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;

  VarTable() = default;
  explicit VarTable(std::vector<std::string> ns);

  int find(const std::string& n) const; // -1 if unknown
  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(int i) const { return names[i]; }
};

// Dense exponent vector aligned with a VarTable.
using Monomial = std::vector<int>;

Monomial mono_one(int nvars);
bool mono_is_one(const Monomial& m);
int mono_deg(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, assumes a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
// Lex order with names[0] most significant.
bool mono_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

// Polynomial over the rationals: terms with nonzero coefficients kept in
// strictly descending monomial order, so t.front() is the leading term.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
};

Poly poly_zero();
Poly poly_const(int nvars, Rational c);
Poly poly_var(int nvars, int i, int e = 1);
Poly poly_from_terms(std::vector<Term> terms); // merges and sorts
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul_term(const Poly& a, const Monomial& m, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
bool poly_eq(const Poly& a, const Poly& b);
int poly_deg(const Poly& a); // total degree, -1 for zero
// Substitute variable i by polynomial value (over the same table).
Poly poly_subst(const Poly& a, int i, const Poly& value, int nvars);

std::string mono_to_string(const VarTable& vt, const Monomial& m);
std::string poly_to_string(const VarTable& vt, const Poly& p);
// Accepts names, integer literals, ^, *, + and -, and parentheses.
// Multiplication must be explicit ("b*c", not "bc"). Throws on bad input.
Poly parse_poly(const VarTable& vt, const std::string& s);

} // namespace linkinv
