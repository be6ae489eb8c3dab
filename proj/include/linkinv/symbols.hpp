#pragma once

#include <vector>

#include "linkinv/smoothing.hpp"

namespace linkinv {

// Coefficient symbols of the crossing-resolution relations. The first
// twelve are the plain symbols: the crossing-change weight and six
// smoothing weights for a site whose two strands belong to one component
// (b, c1..c4, d1, d2), then the change weight and four smoothing weights
// for a site joining two components (the primed row b', c1', c2', d1',
// d2'). The second twelve are their conjugates (written ~x), which appear
// when a negative site is resolved instead of a positive one.
enum class Sym : int {
  b, c1, c2, c3, c4, d1, d2,
  bp, c1p, c2p, d1p, d2p,
  b_bar, c1_bar, c2_bar, c3_bar, c4_bar, d1_bar, d2_bar,
  bp_bar, c1p_bar, c2p_bar, d1p_bar, d2p_bar,
};

inline constexpr int kSymCount = 24;

inline constexpr int sym_index(Sym s) { return static_cast<int>(s); }

inline constexpr bool sym_is_barred(Sym s) { return sym_index(s) >= 12; }

inline constexpr bool sym_is_primed(Sym s) {
  return sym_index(s) % 12 >= 7;
}

// ~ is an involution pairing each symbol with its conjugate.
inline constexpr Sym sym_bar(Sym s) {
  return static_cast<Sym>((sym_index(s) + 12) % 24);
}

const char* sym_name(Sym s);

// Which invariant family a relation set belongs to. The first family
// resolves a crossing into its crossing change plus all admissible
// smoothings; the second omits the crossing change.
enum class Family { TypeOne, TypeTwo };

// The smoothing weight at a site: E/W/HC/HT/VC/VT carry c1/c2/c3/c4/d1/d2
// when the site is a self-crossing, E/W/S/N carry c1'/c2'/d1'/d2' when it
// joins two components. Pass barred = true for the conjugate row.
Sym smoothing_symbol(bool self_site, Sm s, bool barred);

// The crossing-change weight (b, b', or a conjugate).
Sym change_symbol(bool self_site, bool barred);

// One term of a resolved site: the child diagram is either the crossing
// change or one smoothing, and contributes sign * symbol * f(child).
struct SkeinTerm {
  int sign = 1;
  Sym sym = Sym::b;
  bool is_change = false;
  Sm sm = Sm::E;
};

// Resolve f at one site: f(D) equals the sum of the returned terms applied
// to D's children there. A positive site uses plain symbols, a negative
// one their conjugates.
std::vector<SkeinTerm> skein_expansion(Family fam, bool positive_site,
                                       bool self_site);

} // namespace linkinv
