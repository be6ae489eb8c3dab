#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkinv/groebner.hpp"
#include "linkinv/poly.hpp"
#include "linkinv/symbols.hpp"

namespace linkinv {

// How the writhe weights h(w) of a profile expand to polynomials.
//   None:       the profile has no writhe weights.
//   Recurrence: h(1) = x, h(2) = y, and h(w) + b h(w-2) + d h(w-1) = 0
//               determines every other index (B = 1/b is a ring variable).
//   Power:      h(w) = a^w, with A = 1/a for negative indices.
enum class HRule { None, Recurrence, Power };

// A coefficient ring for invariant values: polynomials in named symbols
// modulo a fixed ideal. The variable table always starts with a window of
// free-loop counters v16..v1 (v16 most significant), so relations may tie
// consecutive counters together; products of two counters are truncated
// to zero, which values (always linear in the counters) never notice.
struct RingProfile {
  std::string name;
  Family family = Family::TypeOne;
  VarTable vars;
  int n_v = 0;                   // counter window size
  std::vector<Poly> gens;        // ideal generators as registered
  std::vector<Poly> gb;          // reduced Groebner basis of gens
  std::array<Poly, kSymCount> sym_image{};
  HRule h_rule = HRule::None;
  std::vector<int> unit_vars;    // variables with a declared inverse
  bool xy_denominator_forms = false; // see certified_nonzerodivisor
  // Whether the full derived relation sets are expected to vanish under
  // sym_image (checked by the relation machinery; false marks a profile
  // kept only for inspecting raw resolution output).
  bool relations_checked = false;

  int v_var(int n) const;        // variable index of v_n, 1 <= n <= n_v
  const Poly& image(Sym s) const { return sym_image[sym_index(s)]; }
  int nvars() const { return vars.size(); }
};

// Preset catalog; built once per name and cached. Throws on unknown names.
const RingProfile& profile(const std::string& name);
std::vector<std::string> profile_names();

Poly nf(const RingProfile& R, const Poly& p);
bool same_mod_ideal(const RingProfile& R, const Poly& a, const Poly& b);

// h(w) expanded to a polynomial; throws when the profile has no rule.
Poly h_poly(const RingProfile& R, int w);

// A value: finite sum of parts, each a polynomial optionally weighted by a
// formal h(w). Parts never hold zero polynomials.
struct RingElem {
  std::map<std::optional<int>, Poly> parts;
  bool is_zero() const { return parts.empty(); }
};

RingElem elem_zero();
RingElem elem_poly(Poly p);
RingElem elem_h(int w, Poly p);
RingElem elem_add(const RingElem& a, const RingElem& b);
RingElem elem_sub(const RingElem& a, const RingElem& b);
RingElem elem_neg(const RingElem& a);
RingElem elem_scale(const RingElem& a, const Poly& c);
// Add `steps` to every h index; throws when a weightless part is present.
RingElem elem_shift(const RingElem& a, int steps);
RingElem elem_nf(const RingProfile& R, const RingElem& a);
bool elem_eq(const RingProfile& R, const RingElem& a, const RingElem& b);
// Replace each h(w) by its expansion and reduce to one polynomial.
Poly elem_expand(const RingProfile& R, const RingElem& a);
// Deterministic rendering: parts by ascending h index (weightless first),
// each split by counter monomial, e.g. "h(3)*(-b*x - d*y)*v1 + v2".
std::string elem_to_string(const RingProfile& R, const RingElem& a);

// A formal quotient num / product(den) over the profile's ring.
struct Fraction {
  Poly num;
  std::vector<Poly> den;
};

// Certify that p annihilates nothing in the quotient ring. Always accepts
// unit monomials (over unit_vars). Profiles with xy_denominator_forms
// additionally accept unit * (x + f*d), unit * (y + f*d) and variants with
// the tail absorbed, the shapes arising as expanded writhe weights there.
bool certified_nonzerodivisor(const RingProfile& R, const Poly& p);

// Equality of two fraction sums in the localization away from certified
// non-zero-divisors: cross-multiplies and compares normal forms. Throws
// std::invalid_argument when a denominator factor cannot be certified.
bool fraction_sum_eq(const RingProfile& R, const std::vector<Fraction>& lhs,
                     const std::vector<Fraction>& rhs);

} // namespace linkinv
