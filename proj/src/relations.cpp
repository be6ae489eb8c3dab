#include "linkinv/relations.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linkinv/groebner.hpp"
#include "linkinv/poly.hpp"
#include "linkinv/smoothing.hpp"

namespace linkinv {

namespace {

// ---------------------------------------------------------------------------
// Case diagrams

struct CaseDef {
  const char* pattern;
  const char* pd;
  // Expected traversal signature with both crossings positive: the cyclic
  // visit string of every component over {p, q}, sorted, plus site classes.
  std::vector<std::string> visits;
  bool p_self, q_self;
};

const std::vector<CaseDef>& case_defs() {
  static const std::vector<CaseDef> defs = {
      {"disjoint", "X[1,2,2,1] X[3,4,3,4]+", {"pp", "q", "q"}, true, false},
      {"aA", "X[1,3,2,3]+ X[2,4,1,4]+", {"p", "pq", "q"}, false, false},
      {"aA-bB", "X[1,3,2,4] X[4,2,3,1]", {"pq", "pq"}, false, false},
      {"abA", "X[1,2,2,3] X[3,5,1,5]+", {"ppq", "q"}, true, false},
      {"aAbB", "X[1,3,2,4] X[2,4,3,1]", {"pqpq"}, true, true},
      {"aABb", "X[1,4,2,1] X[2,3,3,4]", {"ppqq"}, true, true},
  };
  return defs;
}

std::string min_rotation(std::string s) {
  if (s.size() < 2) return s;
  std::string best = s;
  for (size_t i = 1; i < s.size(); ++i) {
    std::string rot = s.substr(i) + s.substr(0, i);
    if (rot < best) best = rot;
  }
  return best;
}

void verify_case(const CaseConfig& cfg, const CaseDef& def, const Diagram& d) {
  if (crossing_sign(d.cr[0]) != cfg.sign_p ||
      crossing_sign(d.cr[1]) != cfg.sign_q)
    throw std::logic_error("case diagram has wrong crossing signs");
  if (is_self_crossing(d, 0) != def.p_self ||
      is_self_crossing(d, 1) != def.q_self)
    throw std::logic_error("case diagram has wrong site classes");
  auto idx = arc_index(d);
  std::vector<std::string> visits;
  for (const auto& comp : components(d)) {
    std::string s;
    for (ArcId a : comp) s += idx.at(a).head.cr == 0 ? 'p' : 'q';
    visits.push_back(min_rotation(s));
  }
  std::sort(visits.begin(), visits.end());
  if (visits != def.visits)
    throw std::logic_error("case diagram has wrong connection pattern");
}

// ---------------------------------------------------------------------------
// Decorated resolution tracking
//
// Resolving a crossing erases it, so the children of the two resolution
// orders can only be matched if each strand remembers how it used to run
// through the erased sites. A SiteRec records one passage: which original
// crossing, entering at which corner and leaving at which.
//
// Corners must be plane corners. Rebuilding a crossing after a strand
// reversal renumbers its slots so that slot 0 is again the incoming
// understrand, which rotates the slot-to-corner assignment; two resolution
// orders rebuild differently and would record the same curve in different
// frames. Each crossing therefore carries the plane corner of every
// current slot, fixed once from the starting diagram and carried through
// every rebuild.

struct SiteRec {
  int site;
  Compass from, to;
  auto operator<=>(const SiteRec&) const = default;
};

using Deco = std::vector<SiteRec>;

struct Tracked {
  Diagram d;
  std::vector<int> label;      // current crossing index -> original index
  std::vector<std::array<Compass, 4>> corner;  // current slot -> plane corner
  std::map<ArcId, Deco> deco;  // passages of each surviving arc
  std::vector<Deco> loops;     // passages of strands closed into loops
};

Compass plane_corner(const Tracked& t, int x, Compass frame_corner) {
  const Crossing& c = t.d.cr[x];
  for (int s = 0; s < 4; ++s)
    if (slot_compass(c, s) == frame_corner) return t.corner[x][s];
  assert(false && "corner not found");
  return frame_corner;
}

Deco deco_of_pieces(const Tracked& t, int x, Sm sm,
                    const std::vector<Piece>& pieces) {
  int site = t.label[x];
  Deco out;
  for (const Piece& pc : pieces) {
    if (pc.kind == Piece::Bridge) {
      SmBridge b = sm_bridges(sm)[pc.bridge];
      out.push_back(
          {site, plane_corner(t, x, b.from), plane_corner(t, x, b.to)});
    } else {
      auto it = t.deco.find(pc.arc);
      if (it == t.deco.end()) continue;
      if (!pc.reversed) {
        out.insert(out.end(), it->second.begin(), it->second.end());
      } else {
        for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
          out.push_back({rit->site, rit->to, rit->from});
      }
    }
  }
  return out;
}

Tracked resolve(const Tracked& t, int x, const SkeinTerm& term) {
  Tracked r;
  if (term.is_change) {
    // Exchanging over and under keeps the four plane ends in place while
    // the slot array rotates by one position.
    r.d = with_crossing_changed(t.d, x);
    r.label = t.label;
    r.corner = t.corner;
    int shift = crossing_sign(t.d.cr[x]) > 0 ? 1 : 3;
    for (int s = 0; s < 4; ++s)
      r.corner[x][s] = t.corner[x][(s + shift) % 4];
    r.deco = t.deco;
    r.loops = t.loops;
    return r;
  }
  auto res = apply_smoothing(t.d, x, term.sm);
  assert(res.has_value() && "admissible smoothing failed to apply");
  r.d = res->diagram;
  r.label = t.label;
  r.label.erase(r.label.begin() + x);

  // Re-derive the slot-to-plane-corner map of every surviving crossing by
  // matching each rebuilt slot to the old arc end it still holds.
  auto old_idx = arc_index(t.d);
  std::map<ArcId, const NewArc*> by_id;
  for (const NewArc& na : res->arcs) by_id[na.id] = &na;
  r.corner.resize(r.d.cr.size());
  for (size_t j = 0; j < r.d.cr.size(); ++j) {
    const Crossing& cn = r.d.cr[j];
    for (int s = 0; s < 4; ++s) {
      const NewArc& na = *by_id.at(cn.arc[s]);
      bool is_head = is_in_slot(cn, s);
      const Piece& pc = is_head ? na.pieces.back() : na.pieces.front();
      assert(pc.kind == Piece::OldArc);
      bool old_head = pc.reversed ? !is_head : is_head;
      Pos end = old_head ? old_idx.at(pc.arc).head : old_idx.at(pc.arc).tail;
      r.corner[j][s] = t.corner[end.cr][end.slot];
    }
  }

  for (const NewArc& na : res->arcs) {
    Deco dd = deco_of_pieces(t, x, term.sm, na.pieces);
    if (!dd.empty()) r.deco[na.id] = std::move(dd);
  }
  r.loops = t.loops;
  for (const auto& circ : res->circles)
    r.loops.push_back(deco_of_pieces(t, x, term.sm, circ));
  return r;
}

void append_deco(std::string& out, const Deco& d) {
  out += '[';
  for (const SiteRec& r : d) {
    out += std::to_string(r.site);
    out += compass_name(r.from);
    out += '>';
    out += compass_name(r.to);
    out += ';';
  }
  out += ']';
}

// Child code: crossings in original-label order with their signs, each
// out-end walked to the in-end it feeds (with the passage decorations of
// the connecting arc), then the decorated loops, then free circles. Arc
// ids never appear, so codes are comparable across resolution paths.
std::string tracked_key(const Tracked& t) {
  std::vector<int> order(t.label.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.label[a] < t.label[b]; });
  std::map<int, int> pos_of_label;
  for (size_t i = 0; i < t.label.size(); ++i)
    pos_of_label[t.label[i]] = static_cast<int>(i);

  auto idx = arc_index(t.d);
  std::string key;
  for (int ci : order) {
    const Crossing& c = t.d.cr[ci];
    key += 'C';
    key += std::to_string(t.label[ci]);
    key += crossing_sign(c) > 0 ? '+' : '-';
    for (int slot : {2, over_out(c)}) {
      ArcId a = c.arc[slot];
      key += slot == 2 ? ":u" : ":o";
      auto it = t.deco.find(a);
      append_deco(key, it == t.deco.end() ? Deco{} : it->second);
      Pos head = idx.at(a).head;
      key += '>';
      key += std::to_string(t.label[head.cr]);
      key += head.slot == 0 ? 'u' : 'o';
    }
    key += ' ';
  }
  std::vector<std::string> loop_codes;
  for (const Deco& loop : t.loops) {
    std::string best;
    for (size_t i = 0; i < loop.size(); ++i) {
      Deco rot(loop.begin() + i, loop.end());
      rot.insert(rot.end(), loop.begin(), loop.begin() + i);
      std::string s;
      append_deco(s, rot);
      if (best.empty() || s < best) best = std::move(s);
    }
    if (loop.empty()) append_deco(best, loop);
    loop_codes.push_back(std::move(best));
  }
  std::sort(loop_codes.begin(), loop_codes.end());
  for (const std::string& s : loop_codes) {
    key += 'L';
    key += s;
  }
  key += "O";
  key += std::to_string(t.d.circles - static_cast<int>(t.loops.size()));
  return key;
}

std::vector<Sym> plain_word(const Word& w) {
  std::vector<Sym> out;
  out.reserve(w.size());
  for (const WordFactor& f : w) out.push_back(f.sym);
  return out;
}

Word display_word(Word w) {
  std::stable_sort(w.begin(), w.end(), [](const WordFactor& a,
                                          const WordFactor& b) {
    return a.site < b.site;
  });
  return w;
}

using TermVec = std::vector<std::pair<Word, Rational>>;

TermVec to_sorted_terms(const std::map<Word, Rational>& m) {
  TermVec out;
  for (const auto& [w, c] : m)
    if (c != 0) out.emplace_back(w, c);
  return out;
}

// Sides ordered so that A = B and B = A compare equal.
Relation canonical(Relation r) {
  std::sort(r.lhs.begin(), r.lhs.end());
  std::sort(r.rhs.begin(), r.rhs.end());
  if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
  return r;
}

std::string side_to_string(const TermVec& side, bool display) {
  if (side.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < side.size(); ++i) {
    if (i) out += " + ";
    const auto& [w, c] = side[i];
    if (c != 1) {
      out += c.str();
      out += '*';
    }
    out += word_to_string(display ? display_word(w) : w);
  }
  return out;
}

const std::map<std::string, Sym>& sym_by_name() {
  static const std::map<std::string, Sym> m = [] {
    std::map<std::string, Sym> r;
    for (int i = 0; i < kSymCount; ++i)
      r[sym_name(static_cast<Sym>(i))] = static_cast<Sym>(i);
    return r;
  }();
  return m;
}

// Swap relabelings of the smoothing-name conventions.
Sym apply_swap(Sym s, int combo) {
  auto flip = [&](Sym a, Sym b) {
    if (s == a) s = b;
    else if (s == b) s = a;
    if (s == sym_bar(a)) s = sym_bar(b);
    else if (s == sym_bar(b)) s = sym_bar(a);
  };
  if (combo & 1) flip(Sym::c3, Sym::c4);
  if (combo & 2) flip(Sym::d1, Sym::d2);
  if (combo & 4) flip(Sym::d1p, Sym::d2p);
  return s;
}

DisplayRelation swapped(const DisplayRelation& r, int combo) {
  DisplayRelation out;
  for (auto [w, c] : r.terms) {
    for (WordFactor& f : w) f.sym = apply_swap(f.sym, combo);
    out.terms.emplace_back(display_word(std::move(w)), c);
  }
  std::sort(out.terms.begin(), out.terms.end());
  if (!out.terms.empty() && out.terms.front().second < 0)
    for (auto& [w, c] : out.terms) c = -c;
  return out;
}

DisplayRelation normalize_display(std::map<Word, Rational> acc) {
  DisplayRelation out;
  for (auto& [w, c] : acc)
    if (c != 0) out.terms.emplace_back(w, c);
  if (!out.terms.empty() && out.terms.front().second < 0)
    for (auto& [w, c] : out.terms) c = -c;
  return out;
}

Poly words_to_poly(const TermVec& side, int sign) {
  std::vector<Term> terms;
  for (const auto& [w, c] : side) {
    Monomial m = mono_one(kSymCount);
    for (const WordFactor& f : w) ++m[sym_index(f.sym)];
    terms.push_back({std::move(m), c * sign});
  }
  return poly_from_terms(std::move(terms));
}

// Parse one transcribed equation: products of symbol names joined by '*',
// terms joined by '+', sides joined by '='; "0" is the empty side and a
// leading integer factor scales the term.
void parse_printed_side(const std::string& text, int sign,
                        std::map<Word, Rational>& acc) {
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    Word w;
    Rational coeff = sign;
    std::stringstream ts(term);
    std::string factor;
    bool zero = false;
    while (std::getline(ts, factor, '*')) {
      size_t a = factor.find_first_not_of(" \t");
      size_t b = factor.find_last_not_of(" \t");
      if (a == std::string::npos) continue;
      factor = factor.substr(a, b - a + 1);
      if (factor == "0") {
        zero = true;
        break;
      }
      if (!factor.empty() && (std::isdigit(factor[0]) || factor[0] == '-')) {
        coeff *= Rational(factor);
        continue;
      }
      auto it = sym_by_name().find(factor);
      if (it == sym_by_name().end())
        throw std::invalid_argument("unknown symbol '" + factor + "'");
      w.push_back({it->second, static_cast<int>(w.size())});
    }
    if (zero || w.empty()) continue;
    acc[display_word(w)] += coeff;
  }
}

DisplayRelation parse_printed(const std::string& line) {
  size_t eq = line.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("equation needs '=': " + line);
  std::map<Word, Rational> acc;
  parse_printed_side(line.substr(0, eq), 1, acc);
  parse_printed_side(line.substr(eq + 1), -1, acc);
  return normalize_display(std::move(acc));
}

} // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& case_patterns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> r;
    for (const CaseDef& def : case_defs()) r.push_back(def.pattern);
    return r;
  }();
  return names;
}

CaseDiagram build_case(const CaseConfig& cfg) {
  if (cfg.sign_p * cfg.sign_p != 1 || cfg.sign_q * cfg.sign_q != 1)
    throw std::invalid_argument("crossing signs must be +1 or -1");
  for (const CaseDef& def : case_defs()) {
    if (def.pattern != cfg.pattern) continue;
    CaseDiagram cd;
    cd.d = parse_pd(def.pd);
    if (cfg.sign_p < 0) cd.d = with_crossing_changed(cd.d, 0);
    if (cfg.sign_q < 0) cd.d = with_crossing_changed(cd.d, 1);
    verify_case(cfg, def, cd.d);
    return cd;
  }
  throw std::invalid_argument("unknown case pattern '" + cfg.pattern + "'");
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += sym_name(w[i].sym);
  }
  return out;
}

FormalSum expand_pair(const Diagram& d, int first, int second, Family family) {
  int n = static_cast<int>(d.cr.size());
  if (first < 0 || first >= n || second < 0 || second >= n || first == second)
    throw std::invalid_argument("expand_pair needs two distinct crossings");
  Tracked t0;
  t0.d = d;
  t0.label.resize(n);
  t0.corner.resize(n);
  for (int i = 0; i < n; ++i) {
    t0.label[i] = i;
    for (int s = 0; s < 4; ++s) t0.corner[i][s] = slot_compass(d.cr[i], s);
  }

  FormalSum fs;
  for (const SkeinTerm& s1 :
       skein_expansion(family, crossing_sign(d.cr[first]) > 0,
                       is_self_crossing(d, first))) {
    Tracked c1 = resolve(t0, first, s1);
    auto it = std::find(c1.label.begin(), c1.label.end(), second);
    assert(it != c1.label.end());
    int x2 = static_cast<int>(it - c1.label.begin());
    for (const SkeinTerm& s2 :
         skein_expansion(family, crossing_sign(c1.d.cr[x2]) > 0,
                         is_self_crossing(c1.d, x2))) {
      Tracked c2 = resolve(c1, x2, s2);
      Word w{{s1.sym, first}, {s2.sym, second}};
      fs.terms[tracked_key(c2)][std::move(w)] += s1.sign * s2.sign;
    }
  }
  return fs;
}

std::vector<Relation> derive_case_relations(const CaseConfig& cfg,
                                            Family family) {
  CaseDiagram cd = build_case(cfg);
  FormalSum pq = expand_pair(cd.d, cd.p, cd.q, family);
  FormalSum qp = expand_pair(cd.d, cd.q, cd.p, family);
  std::set<std::string> keys;
  for (const auto& [k, _] : pq.terms) keys.insert(k);
  for (const auto& [k, _] : qp.terms) keys.insert(k);

  std::set<Relation> seen;
  std::vector<Relation> out;
  for (const std::string& k : keys) {
    auto lit = pq.terms.find(k);
    auto rit = qp.terms.find(k);
    TermVec lhs = lit == pq.terms.end() ? TermVec{} : to_sorted_terms(lit->second);
    TermVec rhs = rit == qp.terms.end() ? TermVec{} : to_sorted_terms(rit->second);
    // The same product read in application order denotes the same element,
    // so such pairs carry no constraint and cancel.
    for (auto i = lhs.begin(); i != lhs.end();) {
      auto j = std::find_if(rhs.begin(), rhs.end(), [&](const auto& t) {
        return t.second == i->second && plain_word(t.first) == plain_word(i->first);
      });
      if (j != rhs.end()) {
        rhs.erase(j);
        i = lhs.erase(i);
      } else {
        ++i;
      }
    }
    if (lhs.empty() && rhs.empty()) continue;
    Relation rel{std::move(lhs), std::move(rhs)};
    if (seen.insert(canonical(rel)).second) out.push_back(std::move(rel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DisplayRelation display_form(const Relation& r) {
  std::map<Word, Rational> acc;
  for (const auto& [w, c] : r.lhs) acc[display_word(w)] += c;
  for (const auto& [w, c] : r.rhs) acc[display_word(w)] -= c;
  return normalize_display(std::move(acc));
}

std::string relation_to_string(const Relation& r) {
  std::string l = side_to_string(r.lhs, true);
  std::string rr = side_to_string(r.rhs, true);
  if (l == rr) {
    l = side_to_string(r.lhs, false);
    rr = side_to_string(r.rhs, false);
  }
  return l + " = " + rr;
}

std::string export_relations(const std::vector<Relation>& rels) {
  std::string out;
  for (const Relation& r : rels) {
    out += relation_to_string(r);
    out += '\n';
  }
  return out;
}

std::vector<Relation> conjugation_closure(std::vector<Relation> rels) {
  std::set<Relation> seen;
  std::vector<Relation> out;
  auto add = [&](Relation r) {
    if (seen.insert(canonical(r)).second) out.push_back(std::move(r));
  };
  for (const Relation& r : rels) {
    std::set<int> sites;
    for (const auto& [w, c] : r.lhs)
      for (const WordFactor& f : w) sites.insert(f.site);
    for (const auto& [w, c] : r.rhs)
      for (const WordFactor& f : w) sites.insert(f.site);
    std::vector<int> sv(sites.begin(), sites.end());
    for (int mask = 0; mask < (1 << sv.size()); ++mask) {
      Relation v = r;
      auto toggle = [&](TermVec& side) {
        for (auto& [w, c] : side)
          for (WordFactor& f : w) {
            auto pos = std::find(sv.begin(), sv.end(), f.site) - sv.begin();
            if (mask & (1 << pos)) f.sym = sym_bar(f.sym);
          }
        std::sort(side.begin(), side.end());
      };
      toggle(v.lhs);
      toggle(v.rhs);
      add(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const VarTable& symbol_table() {
  static const VarTable vt = [] {
    std::vector<std::string> names;
    for (int i = 0; i < kSymCount; ++i)
      names.push_back(sym_name(static_cast<Sym>(i)));
    return VarTable(std::move(names));
  }();
  return vt;
}

Poly relation_poly(const Relation& r) {
  return poly_add(words_to_poly(r.lhs, 1), words_to_poly(r.rhs, -1));
}

Poly substitute_symbols(const RingProfile& P, const Poly& p) {
  Poly out = poly_zero();
  for (const Term& t : p.t) {
    Poly acc = poly_const(P.nvars(), t.c);
    for (int i = 0; i < kSymCount && !acc.is_zero(); ++i)
      for (int e = 0; e < t.m[i]; ++e)
        acc = poly_mul(acc, P.image(static_cast<Sym>(i)));
    out = poly_add(out, acc);
  }
  return out;
}

const std::vector<Relation>& all_case_relations(Family family) {
  static std::map<Family, std::vector<Relation>> cache;
  auto it = cache.find(family);
  if (it == cache.end()) {
    std::vector<Relation> all;
    for (const std::string& pat : case_patterns()) {
      auto rels = derive_case_relations({pat, 1, 1}, family);
      all.insert(all.end(), rels.begin(), rels.end());
    }
    it = cache.emplace(family, conjugation_closure(std::move(all))).first;
  }
  return it->second;
}

std::vector<Relation> drop_change_terms(const std::vector<Relation>& rels) {
  auto has_change = [](const Word& w) {
    for (const WordFactor& f : w) {
      Sym s = sym_is_barred(f.sym) ? sym_bar(f.sym) : f.sym;
      if (s == Sym::b || s == Sym::bp) return true;
    }
    return false;
  };
  std::set<Relation> seen;
  std::vector<Relation> out;
  for (const Relation& r : rels) {
    Relation v;
    for (const auto& t : r.lhs)
      if (!has_change(t.first)) v.lhs.push_back(t);
    for (const auto& t : r.rhs)
      if (!has_change(t.first)) v.rhs.push_back(t);
    if (v.lhs.empty() && v.rhs.empty()) continue;
    if (seen.insert(canonical(v)).second) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerifyReport verify_profile(const RingProfile& P,
                            const std::vector<Relation>& rels) {
  VerifyReport rep;
  for (const Relation& r : rels) {
    Poly res = nf(P, substitute_symbols(P, relation_poly(r)));
    ++rep.checked;
    if (!res.is_zero())
      rep.failures.push_back(
          {relation_to_string(r), poly_to_string(P.vars, res)});
  }
  return rep;
}

// Transcribed equations come with arbitrary factor order (products are
// printed in whichever order the source tables emitted them), so matching
// happens at the commutative-polynomial level: a transcribed relation counts
// as derived when, after the swap relabeling, its polynomial equals one of
// the derived relations' polynomials up to sign.  Word-order differences are
// presentation noise; anything weaker than an exact polynomial match falls
// through to the ideal-membership test.
PrintedComparison compare_with_printed(const std::vector<Relation>& derived,
                                       const std::vector<std::string>& printed) {
  auto canon = [](Poly p) {
    if (!p.is_zero() && p.lt().c < 0) p = poly_neg(p);
    return p;
  };
  std::vector<Poly> have;
  for (const Relation& r : derived) {
    Poly p = canon(relation_poly(r));
    if (p.is_zero()) continue;
    bool dup = false;
    for (const Poly& q : have)
      if (poly_eq(p, q)) {
        dup = true;
        break;
      }
    if (!dup) have.push_back(std::move(p));
  }
  std::vector<DisplayRelation> want;
  for (const std::string& line : printed) want.push_back(parse_printed(line));

  auto display_poly = [&](const DisplayRelation& r) {
    std::vector<Term> terms;
    for (const auto& [w, c] : r.terms) {
      Monomial m = mono_one(kSymCount);
      for (const WordFactor& f : w) ++m[sym_index(f.sym)];
      terms.push_back({std::move(m), c});
    }
    return canon(poly_from_terms(std::move(terms)));
  };
  auto hit = [&](const DisplayRelation& sw) {
    if (sw.trivial()) return true;
    Poly p = display_poly(sw);
    if (p.is_zero()) return true;  // only commutativity, no content
    for (const Poly& q : have)
      if (poly_eq(p, q)) return true;
    return false;
  };

  int best_combo = 0, best_hits = -1;
  for (int combo = 0; combo < 8; ++combo) {
    int hits = 0;
    for (const DisplayRelation& w : want)
      if (hit(swapped(w, combo))) ++hits;
    if (hits > best_hits) {
      best_hits = hits;
      best_combo = combo;
    }
  }

  std::vector<Poly> gb;
  {
    std::vector<Poly> gens;
    for (const Relation& r : derived) {
      Poly p = relation_poly(r);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
    gb = groebner_basis(std::move(gens));
  }

  PrintedComparison out;
  out.swap_combo = best_combo;
  for (size_t i = 0; i < want.size(); ++i) {
    DisplayRelation sw = swapped(want[i], best_combo);
    if (hit(sw)) {
      out.matched.push_back(printed[i]);
      continue;
    }
    if (in_ideal(display_poly(sw), gb))
      out.underived.push_back(printed[i]);
    else
      out.missing.push_back(printed[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Loop-counter conditions

namespace {

Poly vn(const RingProfile& P, int n) {
  return poly_var(P.nvars(), P.v_var(n));
}

Poly img_sum(const RingProfile& P, std::initializer_list<Sym> syms) {
  Poly out = poly_zero();
  for (Sym s : syms) out = poly_add(out, P.image(s));
  return out;
}

void expect_zero(const RingProfile& P, const Poly& e, const std::string& what,
                 R3Report& rep) {
  ++rep.checked;
  Poly res = nf(P, e);
  if (!res.is_zero())
    rep.failures.push_back(what + ": " + poly_to_string(P.vars, res));
}

void expect_elem_eq(const RingProfile& P, const RingElem& a, const RingElem& b,
                    const std::string& what, R3Report& rep) {
  ++rep.checked;
  if (!elem_eq(P, a, b))
    rep.failures.push_back(what + ": " +
                           elem_to_string(P, elem_nf(P, elem_sub(a, b))));
}

} // namespace

R3Report check_R3(const RingProfile& P, R3Family family) {
  R3Report rep;
  switch (family) {
    case R3Family::Type1: {
      if (P.family != Family::TypeOne)
        throw std::invalid_argument("first-family profile required");
      Poly dsum = poly_add(poly_const(P.nvars(), 1),
                           img_sum(P, {Sym::b, Sym::d1, Sym::d2}));
      Poly csum = img_sum(P, {Sym::c1, Sym::c2, Sym::c3, Sym::c4});
      for (int n = 1; n + 1 <= P.n_v; ++n)
        expect_zero(P,
                    poly_add(poly_mul(dsum, vn(P, n)),
                             poly_mul(csum, vn(P, n + 1))),
                    "base-point condition n=" + std::to_string(n), rep);
      break;
    }
    case R3Family::Type1Modified: {
      if (P.family != Family::TypeOne)
        throw std::invalid_argument("first-family profile required");
      if (P.h_rule == HRule::None)
        throw std::invalid_argument("profile has no writhe weight");
      Poly csum = img_sum(P, {Sym::c1, Sym::c2, Sym::c3, Sym::c4});
      Poly dsum = img_sum(P, {Sym::d1, Sym::d2});
      for (int w = -3; w <= 4; ++w)
        for (int n = 1; n + 1 <= P.n_v; ++n) {
          Poly e = poly_mul(h_poly(P, w), vn(P, n));
          e = poly_add(e, poly_mul(poly_mul(P.image(Sym::b), h_poly(P, w - 2)),
                                   vn(P, n)));
          e = poly_add(e, poly_mul(poly_mul(csum, h_poly(P, w - 1)),
                                   vn(P, n + 1)));
          e = poly_add(e, poly_mul(poly_mul(dsum, h_poly(P, w - 1)), vn(P, n)));
          expect_zero(P, e,
                      "weighted base-point condition w=" + std::to_string(w) +
                          " n=" + std::to_string(n),
                      rep);
        }
      break;
    }
    case R3Family::Type2: {
      if (P.family != Family::TypeTwo)
        throw std::invalid_argument("second-family profile required");
      Poly csum = img_sum(P, {Sym::c1, Sym::c2, Sym::c3, Sym::c4});
      Poly cbar = img_sum(P, {Sym::c1_bar, Sym::c2_bar, Sym::c3_bar,
                              Sym::c4_bar});
      Poly dsum = img_sum(P, {Sym::d1, Sym::d2});
      Poly dbar = img_sum(P, {Sym::d1_bar, Sym::d2_bar});
      Poly wsum = img_sum(P, {Sym::c1p, Sym::c2p, Sym::d1p, Sym::d2p});
      Poly wbar = img_sum(P, {Sym::c1p_bar, Sym::c2p_bar, Sym::d1p_bar,
                              Sym::d2p_bar});
      for (int n = 1; n + 1 <= P.n_v; ++n) {
        std::string sn = std::to_string(n);
        expect_zero(P,
                    poly_sub(vn(P, n), poly_add(poly_mul(csum, vn(P, n + 1)),
                                                poly_mul(dsum, vn(P, n)))),
                    "positive curl n=" + sn, rep);
        expect_zero(P,
                    poly_sub(vn(P, n), poly_add(poly_mul(cbar, vn(P, n + 1)),
                                                poly_mul(dbar, vn(P, n)))),
                    "negative curl n=" + sn, rep);
        expect_zero(P, poly_sub(vn(P, n + 1), poly_mul(wsum, vn(P, n))),
                    "positive wedge n=" + sn, rep);
        expect_zero(P, poly_sub(vn(P, n + 1), poly_mul(wbar, vn(P, n))),
                    "negative wedge n=" + sn, rep);
      }
      break;
    }
    case R3Family::Type2Modified: {
      RingElem one = elem_poly(poly_const(P.nvars(), 1));
      R3Report sub = check_g_window(
          P, [&](int, int, int) { return one; }, 4,
          std::min(P.n_v - 1, 5));
      return sub;
    }
  }
  return rep;
}

R3Report check_g_window(const RingProfile& P, const GWeight& g, int cmax,
                        int mumax) {
  if (P.family != Family::TypeTwo)
    throw std::invalid_argument("second-family profile required");
  R3Report rep;
  Poly csum = img_sum(P, {Sym::c1, Sym::c2, Sym::c3, Sym::c4});
  Poly cbar =
      img_sum(P, {Sym::c1_bar, Sym::c2_bar, Sym::c3_bar, Sym::c4_bar});
  Poly dsum = img_sum(P, {Sym::d1, Sym::d2});
  Poly dbar = img_sum(P, {Sym::d1_bar, Sym::d2_bar});
  Poly mpos = img_sum(P, {Sym::c1p_bar, Sym::c2p_bar});
  Poly mneg = img_sum(P, {Sym::d1p_bar, Sym::d2p_bar});
  for (int c = 0; c <= cmax; ++c)
    for (int w = -c; w <= c; ++w)
      for (int n = 1; n <= mumax && n + 1 <= P.n_v; ++n) {
        std::string at = " w=" + std::to_string(w) + " c=" + std::to_string(c) +
                         " mu=" + std::to_string(n);
        Poly kidp = poly_add(poly_mul(csum, vn(P, n + 1)),
                             poly_mul(dsum, vn(P, n)));
        expect_elem_eq(P, elem_scale(g(w + 1, c + 1, n), kidp),
                       elem_scale(g(w, c, n), vn(P, n)),
                       "weighted positive curl" + at, rep);
        Poly kidn = poly_add(poly_mul(cbar, vn(P, n + 1)),
                             poly_mul(dbar, vn(P, n)));
        expect_elem_eq(P, elem_scale(g(w - 1, c + 1, n), kidn),
                       elem_scale(g(w, c, n), vn(P, n)),
                       "weighted negative curl" + at, rep);
        if (n >= 2) {
          Poly inner_pos = poly_add(poly_mul(csum, vn(P, n)),
                                    poly_mul(dsum, vn(P, n - 1)));
          Poly inner_neg = poly_add(poly_mul(cbar, vn(P, n)),
                                    poly_mul(dbar, vn(P, n - 1)));
          Poly clasp = poly_add(poly_mul(mpos, inner_pos),
                                poly_mul(mneg, inner_neg));
          expect_elem_eq(P, elem_scale(g(w, c + 2, n), clasp),
                         elem_scale(g(w, c, n), vn(P, n)),
                         "weighted clasp" + at, rep);
        }
      }
  return rep;
}

} // namespace linkinv
