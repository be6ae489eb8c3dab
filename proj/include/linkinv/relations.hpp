#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkinv/diagram.hpp"
#include "linkinv/ring.hpp"
#include "linkinv/symbols.hpp"

namespace linkinv {

// A two-crossing configuration: how the strands of the crossings p and q
// are connected, plus the signs of the two crossings.
//
// Patterns name the visit sequence of the components that meet both
// crossings ("complicated" components):
//   disjoint  p and q in separate split pieces
//   aA        one component through p once and q once, plus a loop over
//             each crossing (three components, both sites mixed)
//   aA-bB     two components, each through p once and q once
//   abA       one component through p twice and q once (p self, q mixed)
//   aAbB      one component visiting p, q, p, q (both self, interleaved)
//   aABb      one component visiting p, q, q, p (both self, nested)
struct CaseConfig {
  std::string pattern;
  int sign_p = 1;
  int sign_q = 1;
};

const std::vector<std::string>& case_patterns();

struct CaseDiagram {
  Diagram d;
  int p = 0;
  int q = 1;
};

// Concrete smallest diagram realizing the pattern with the requested
// signs. The connection pattern, site classes and signs are re-verified
// by traversal; a failure is a programming error and throws.
CaseDiagram build_case(const CaseConfig& cfg);

// One coefficient factor of a resolution path: which symbol was read off
// and which crossing produced it.
struct WordFactor {
  Sym sym;
  int site; // original index of the resolved crossing
  auto operator<=>(const WordFactor&) const = default;
};

// Factors in application order: first-resolved crossing first.
using Word = std::vector<WordFactor>;

std::string word_to_string(const Word& w);

// Result of resolving two crossings completely, keyed by a code of the
// resolved diagram. The code is decorated: it records, for every strand
// and free loop, the corners through which it crosses each resolved site,
// so children are identified exactly when their final local pictures and
// global connections agree.
struct FormalSum {
  std::map<std::string, std::map<Word, Rational>> terms;
};

// Resolve crossing `first` by its skein equation, then resolve the image
// of `second` in every child. Word coefficients carry the symbols in
// application order; bars appear at negative sites automatically.
FormalSum expand_pair(const Diagram& d, int first, int second,
                      Family family = Family::TypeOne);

// An equation between the two resolution orders of one child diagram:
// sum of lhs words (resolving p first) = sum of rhs words (q first).
// Both sides keep application order; use display ordering for output.
struct Relation {
  std::vector<std::pair<Word, Rational>> lhs, rhs;
  auto operator<=>(const Relation&) const = default;
};

// Equate the two expansion orders child by child. Word pairs that agree
// as plain symbol sequences (same product read in application order)
// cancel; children whose sides cancel completely are dropped.
std::vector<Relation> derive_case_relations(const CaseConfig& cfg,
                                            Family family = Family::TypeOne);

// Words reordered so the p-symbol is written first (the convention the
// case tables use for the q-first matrix), then common terms of the two
// sides cancelled. Empty when the sides agree after reordering, which is
// how purely commutator-shaped equations disappear.
struct DisplayRelation {
  // Signed display words: +1 terms from the p-first sum, -1 from q-first.
  std::vector<std::pair<Word, Rational>> terms;
  auto operator<=>(const DisplayRelation&) const = default;
  bool trivial() const { return terms.empty(); }
};

DisplayRelation display_form(const Relation& r);

// One equation per line. Sides are printed in p-symbol-first order unless
// that collapses the two sides to the same text, in which case the
// application order is shown (so commutation equations stay visible).
std::string relation_to_string(const Relation& r);
std::string export_relations(const std::vector<Relation>& rels);

// For every relation add the variants with the p-side symbols barred, the
// q-side symbols barred, and both: the sign patterns of the two crossings.
// Closed (idempotent) and deduplicating.
std::vector<Relation> conjugation_closure(std::vector<Relation> rels);

// The 24 coefficient symbols as a variable table (enum order), and the
// commutative image of a relation: sum(lhs) - sum(rhs) as a polynomial.
const VarTable& symbol_table();
Poly relation_poly(const Relation& r);

// Map a polynomial over symbol_table() through a profile's symbol images.
Poly substitute_symbols(const RingProfile& P, const Poly& p);

// Everything derived from the six patterns with both crossings positive,
// closed under conjugation. The type-two family uses the type-two skein
// equations directly.
const std::vector<Relation>& all_case_relations(Family family = Family::TypeOne);

// Drop every term whose word contains a crossing-change symbol (b, b',
// their bars): the passage from the type-one relation set to the
// type-two one. Relations trivialized by the deletion are removed.
std::vector<Relation> drop_change_terms(const std::vector<Relation>& rels);

struct ProfileResidual {
  std::string relation;
  std::string residual;
};
struct VerifyReport {
  std::vector<ProfileResidual> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};

// Substitute each relation into the profile and reduce; every nonzero
// residual is reported.
VerifyReport verify_profile(const RingProfile& P, const std::vector<Relation>& rels);

// Comparison against a transcribed equation list (display order, "=",
// "+" and "*", bars spelled "~x"). Tries the swap relabelings of the
// smoothing-name conventions (c3/c4, d1/d2, d1'/d2', with bars) and
// reports, for the best relabeling, which transcribed equations the
// derived set reproduces and which are left over.
struct PrintedComparison {
  int swap_combo = 0; // bit 0: c3/c4, bit 1: d1/d2, bit 2: d1'/d2'
  std::vector<std::string> matched;
  std::vector<std::string> missing;      // printed but not derived
  std::vector<std::string> underived;    // printed, only commutatively implied
};
PrintedComparison compare_with_printed(const std::vector<Relation>& derived,
                                       const std::vector<std::string>& printed);

// Reidemeister-one/two conditions on the loop counters ("last relation
// sets"): the base-point condition for plain type one, its writhe-weighted
// form, and the kink/clasp conditions for type two, checked across the
// counter window.
enum class R3Family { Type1, Type1Modified, Type2, Type2Modified };

struct R3Report {
  std::vector<std::string> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};

R3Report check_R3(const RingProfile& P, R3Family family);

// Writhe-weight check for the modified type-two invariant: g must turn
// the kink and clasp conditions into identities on the window of
// parameters (|w| <= c <= cmax, 1 <= mu <= mumax).
using GWeight = std::function<RingElem(int w, int c, int mu)>;
R3Report check_g_window(const RingProfile& P, const GWeight& g, int cmax,
                        int mumax);

} // namespace linkinv
