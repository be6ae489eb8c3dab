#include "linkinv/symbols.hpp"

#include <cassert>

namespace linkinv {

const char* sym_name(Sym s) {
  static const char* names[kSymCount] = {
      "b",   "c1",   "c2",   "c3",   "c4",   "d1",   "d2",
      "b'",  "c1'",  "c2'",  "d1'",  "d2'",
      "~b",  "~c1",  "~c2",  "~c3",  "~c4",  "~d1",  "~d2",
      "~b'", "~c1'", "~c2'", "~d1'", "~d2'"};
  return names[sym_index(s)];
}

Sym smoothing_symbol(bool self_site, Sm s, bool barred) {
  int base;
  if (self_site) {
    switch (s) {
      case Sm::E:  base = sym_index(Sym::c1); break;
      case Sm::W:  base = sym_index(Sym::c2); break;
      case Sm::HC: base = sym_index(Sym::c3); break;
      case Sm::HT: base = sym_index(Sym::c4); break;
      case Sm::VC: base = sym_index(Sym::d1); break;
      case Sm::VT: base = sym_index(Sym::d2); break;
      default: assert(false && "smoothing not admissible at a self-crossing");
               base = 0;
    }
  } else {
    switch (s) {
      case Sm::E: base = sym_index(Sym::c1p); break;
      case Sm::W: base = sym_index(Sym::c2p); break;
      case Sm::S: base = sym_index(Sym::d1p); break;
      case Sm::N: base = sym_index(Sym::d2p); break;
      default: assert(false && "smoothing not admissible at a mixed crossing");
               base = 0;
    }
  }
  return static_cast<Sym>(base + (barred ? 12 : 0));
}

Sym change_symbol(bool self_site, bool barred) {
  int base = sym_index(self_site ? Sym::b : Sym::bp);
  return static_cast<Sym>(base + (barred ? 12 : 0));
}

std::vector<SkeinTerm> skein_expansion(Family fam, bool positive_site,
                                       bool self_site) {
  // Resolving a positive site uses the plain relation
  //   E+ + b E- + c1 E + c2 W + c3 HC + c4 HT + d1 VC + d2 VT = 0   (self)
  //   E+ + b' E- + c1' E + c2' W + d1' S + d2' N = 0                (mixed)
  // solved for E+, and a negative site the conjugate relation solved for
  // E-. The second family instead writes the crossing directly as a
  // positive combination of its smoothings, with no change child:
  //   E+ = c1 E + c2 W + c3 HC + c4 HT + d1 VC + d2 VT, etc.
  bool barred = !positive_site;
  std::vector<SkeinTerm> out;
  int sign = fam == Family::TypeOne ? -1 : 1;
  if (fam == Family::TypeOne)
    out.push_back({sign, change_symbol(self_site, barred), true, Sm::E});
  for (Sm s : admissible_smoothings(self_site))
    out.push_back({sign, smoothing_symbol(self_site, s, barred), false, s});
  return out;
}

} // namespace linkinv
