#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkinv/diagram.hpp"
#include "linkinv/marking.hpp"
#include "linkinv/rational.hpp"
#include "linkinv/relations.hpp"
#include "linkinv/ring.hpp"

namespace linkinv {

// One child of a resolution step. The skein equation at the resolved
// crossing is solved for that crossing's picture, so every child lands on
// the right-hand side carrying the shown weight.
struct SkeinChild {
  RingElem coeff;
  Diagram child;
  Marking marking;
  bool is_change = false;
};

// First-family resolution of crossing `x`. A positive self-site yields
// the crossing change plus six smoothings weighted
// {-b, -c1, -c2, -c3, -c4, -d1, -d2}; a site joining two components
// yields the change plus four smoothings with the primed weights; a
// negative site uses the conjugate weights. The change child keeps the
// caller's marking, smoothed children get their canonical marking.
// Children are listed even when a weight specializes to zero.
std::vector<SkeinChild> skein_terms(const Diagram& d, const Marking& m, int x,
                                    const RingProfile& P);

// Cross-call value cache, keyed by canonical diagram codes. Reuse an
// instance only with a single profile and a single evaluation flavor.
struct EvalCache {
  std::map<std::string, RingElem> vals;
};

struct EvalOptions {
  // Crossing budget. Negative means the default policy: a profile with
  // every weight of its family nonzero stops at 7 crossings (the term
  // count explodes), while profiles that kill some weights are unlimited.
  int max_crossings = -1;
  bool memo = true; // per-call memoization by canonical code
  EvalCache* cache = nullptr;
};

// First-family invariant. Walks the canonically marked diagram, resolves
// at the first bad crossing, and bottoms out at monotone diagrams, which
// are worth v_n for their n total components. Every step strictly drops
// the (crossing count, bad count) pair. Requires a verified first-family
// profile; results are normal forms.
RingElem eval_type1(const Diagram& d, const RingProfile& P,
                    const EvalOptions& opt = {});

// Same evaluation started from a caller-chosen marking. The value never
// depends on the choice; the overload exists so tests can sweep it.
RingElem eval_type1(const Diagram& d, const Marking& m, const RingProfile& P,
                    const EvalOptions& opt = {});

// Writhe-weighted first-family invariant: same recursion, but a monotone
// diagram of writhe w is worth h(w)*v_n. `f` is the diagram-level value;
// `F` lowers every h-index by the writhe of `d`, which cancels the kink
// dependence. Requires a profile with a writhe-weight rule.
struct ModifiedValue {
  RingElem f;
  RingElem F;
};
ModifiedValue eval_type1_modified(const Diagram& d, const RingProfile& P,
                                  const EvalOptions& opt = {});

// Second-family invariant: no crossing change in the expansion. Resolves
// the lowest-numbered crossing; crossing-free diagrams are worth v_n.
// Memoized only for verified profiles — without the relations, the value
// may depend on which crossing of an isomorphic copy comes first.
RingElem eval_type2(const Diagram& d, const RingProfile& P,
                    const EvalOptions& opt = {});

// Corrected second-family invariant g(w, c, mu) * f(d) for a caller's
// weight g of the writhe, crossing count and component count. g must turn
// the curl and clasp identities into equalities across the window
// |w| <= c <= crossings+2, 1 <= mu <= components+1; otherwise the first
// broken identity is reported in the thrown error.
RingElem eval_type2_modified(const Diagram& d, const RingProfile& P,
                             const GWeight& g, const EvalOptions& opt = {});

// Laurent polynomials in two variables (l, m); exponents may be negative.
struct Laurent2 {
  std::map<std::pair<int, int>, Rational> c; // (l power, m power) -> coeff

  bool operator==(const Laurent2&) const = default;
  bool is_zero() const { return c.empty(); }
};

Laurent2 l2_term(int lpow, int mpow, const Rational& v);
Laurent2 l2_add(const Laurent2& a, const Laurent2& b);
Laurent2 l2_mul(const Laurent2& a, const Laurent2& b);
std::string l2_to_string(const Laurent2& a);

// Independent cross-check: the classical two-variable skein invariant
// with l*P(L+) + l^{-1}*P(L-) + m*P(L0) = 0, P(unknot) = 1, and split
// factor delta = -(l + l^{-1})/m. Own recursion and own coefficient
// arithmetic; shares only the diagram layer with the evaluators above.
Laurent2 homflypt_oracle(const Diagram& d);

} // namespace linkinv
