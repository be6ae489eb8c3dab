#include "linkinv/smoothing.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace linkinv {

const char* compass_name(Compass c) {
  switch (c) {
    case Compass::NW: return "NW";
    case Compass::NE: return "NE";
    case Compass::SE: return "SE";
    case Compass::SW: return "SW";
  }
  return "?";
}

Compass slot_compass(const Crossing& c, int slot) {
  // Slots run counterclockwise from the incoming understrand, which sits
  // at SW when the overstrand enters at NW (positive) and at NW otherwise.
  static constexpr Compass pos[4] = {Compass::SW, Compass::NW, Compass::NE,
                                     Compass::SE};
  static constexpr Compass neg[4] = {Compass::NW, Compass::NE, Compass::SE,
                                     Compass::SW};
  return crossing_sign(c) > 0 ? pos[slot] : neg[slot];
}

const char* sm_name(Sm s) {
  switch (s) {
    case Sm::E: return "E";
    case Sm::W: return "W";
    case Sm::HC: return "HC";
    case Sm::HT: return "HT";
    case Sm::VC: return "VC";
    case Sm::VT: return "VT";
    case Sm::S: return "S";
    case Sm::N: return "N";
  }
  return "?";
}

std::array<SmBridge, 2> sm_bridges(Sm s) {
  using C = Compass;
  switch (s) {
    case Sm::E: return {{{C::NW, C::NE}, {C::SW, C::SE}}};
    case Sm::W: return {{{C::NE, C::NW}, {C::SE, C::SW}}};
    case Sm::HC: return {{{C::NW, C::NE}, {C::SE, C::SW}}};
    case Sm::HT: return {{{C::NE, C::NW}, {C::SW, C::SE}}};
    case Sm::VC: return {{{C::SW, C::NW}, {C::NE, C::SE}}};
    case Sm::VT: return {{{C::NW, C::SW}, {C::SE, C::NE}}};
    case Sm::S: return {{{C::NW, C::SW}, {C::NE, C::SE}}};
    case Sm::N: return {{{C::SW, C::NW}, {C::SE, C::NE}}};
  }
  return {};
}

std::vector<Sm> admissible_smoothings(bool self_site) {
  if (self_site)
    return {Sm::E, Sm::W, Sm::HC, Sm::HT, Sm::VC, Sm::VT};
  return {Sm::E, Sm::W, Sm::S, Sm::N};
}

namespace {

struct Dart {
  ArcId a;
  bool rev;
};

// Direction state of an old arc while chains are being traced.
enum class ArcState { Unseen, Forward, Reversed };

} // namespace

std::optional<ApplyResult> apply_smoothing(const Diagram& d, int site,
                                           Sm type) {
  assert(site >= 0 && site < (int)d.cr.size());
  auto ends = arc_index(d);
  const Crossing& sc = d.cr[site];
  auto bridges = sm_bridges(type);

  int slot_at[4]; // compass -> site slot
  for (int s = 0; s < 4; ++s) slot_at[(int)slot_compass(sc, s)] = s;

  // Leaving the site at a corner walks the arc attached there; if the
  // arc's head is at that corner we walk it against its old direction.
  auto exit_dart = [&](Compass q) {
    int s = slot_at[(int)q];
    return Dart{sc.arc[s], is_in_slot(sc, s)};
  };

  std::map<ArcId, ArcState> state;
  auto claim = [&](const Dart& dt) {
    ArcState want = dt.rev ? ArcState::Reversed : ArcState::Forward;
    auto [it, fresh] = state.emplace(dt.a, want);
    assert(fresh || it->second == want);
    (void)it;
  };

  // Trace the strands forced by the bridges. cut[i] marks that the walk
  // passed through a surviving crossing right after pieces[i].
  struct Chain {
    std::vector<Piece> pieces;
    std::vector<char> cut;
  };
  std::vector<Chain> chains;
  bool used_bridge[2] = {false, false};
  for (int j0 = 0; j0 < 2; ++j0) {
    if (used_bridge[j0]) continue;
    used_bridge[j0] = true;
    Chain ch;
    ch.pieces.push_back(Piece{Piece::Bridge, 0, false, j0});
    ch.cut.push_back(0);
    Dart cur = exit_dart(bridges[j0].to);
    while (true) {
      claim(cur);
      ch.pieces.push_back(Piece{Piece::OldArc, cur.a, cur.rev, 0});
      ch.cut.push_back(0);
      Pos p = cur.rev ? ends.at(cur.a).tail : ends.at(cur.a).head;
      if (p.cr == site) {
        Compass at = slot_compass(sc, p.slot);
        int j = at == bridges[0].from ? 0 : at == bridges[1].from ? 1 : -1;
        if (j == -1) return std::nullopt; // ran into a bridge exit
        if (j == j0) break;               // chain closed
        used_bridge[j] = true;
        ch.pieces.push_back(Piece{Piece::Bridge, 0, false, j});
        ch.cut.push_back(0);
        cur = exit_dart(bridges[j].to);
      } else {
        ch.cut.back() = 1;
        const Crossing& c = d.cr[p.cr];
        if (!cur.rev)
          cur = Dart{c.arc[through_slot(c, p.slot)], false};
        else
          cur = Dart{c.arc[p.slot == 2 ? 0 : c.over_in], true};
      }
    }
    chains.push_back(std::move(ch));
  }

  // Strands the bridges never touch keep their old direction.
  for (const auto& [a, e] : ends) {
    (void)e;
    if (state.count(a)) continue;
    ArcId x = a;
    do {
      state.emplace(x, ArcState::Forward);
      const Pos& h = ends.at(x).head;
      assert(h.cr != site);
      x = d.cr[h.cr].arc[through_slot(d.cr[h.cr], h.slot)];
    } while (x != a);
  }

  ApplyResult res;
  ArcId fresh = 0;
  for (const auto& [a, e] : ends) {
    (void)e;
    fresh = std::max(fresh, a);
  }
  ++fresh;

  // Split each chain at its crossing passages; every piece run between
  // two passages is one arc of the result, and a chain with no passage
  // closes into a crossing-free circle.
  std::map<ArcId, ArcId> newid;
  for (const auto& ch : chains) {
    int n = (int)ch.pieces.size();
    int first_cut = -1;
    for (int i = 0; i < n && first_cut < 0; ++i)
      if (ch.cut[i]) first_cut = i;
    if (first_cut < 0) {
      for (const Piece& p : ch.pieces)
        if (p.kind == Piece::OldArc) newid[p.arc] = -1; // belongs to a circle
      res.circles.push_back(ch.pieces);
      continue;
    }
    std::vector<Piece> run;
    for (int k = 1; k <= n; ++k) {
      int i = (first_cut + k) % n;
      run.push_back(ch.pieces[i]);
      if (ch.cut[i]) {
        bool merged = run.size() > 1;
        ArcId id = merged ? fresh++ : run[0].arc;
        for (const Piece& p : run)
          if (p.kind == Piece::OldArc) newid[p.arc] = id;
        res.arcs.push_back(NewArc{id, std::move(run)});
        run.clear();
      }
    }
    assert(run.empty());
  }
  for (const auto& [a, st] : state) {
    if (newid.count(a)) continue;
    assert(st == ArcState::Forward);
    newid[a] = a;
    res.arcs.push_back(NewArc{a, {Piece{Piece::OldArc, a, false, 0}}});
  }

  for (const auto& [a, st] : state)
    if (st == ArcState::Reversed) res.reversed_arcs.push_back(a);

  // Rebuild the surviving crossings. Reversing a strand swaps its in and
  // out ends; the slot array rotates so slot 0 is again the incoming
  // understrand, and the overstrand entry moves accordingly.
  res.diagram.circles = d.circles + (int)res.circles.size();
  for (int ci = 0; ci < (int)d.cr.size(); ++ci) {
    if (ci == site) continue;
    const Crossing& c = d.cr[ci];
    bool under_rev = state.at(c.arc[0]) == ArcState::Reversed;
    bool over_rev = state.at(c.arc[c.over_in]) == ArcState::Reversed;
    assert((state.at(c.arc[2]) == ArcState::Reversed) == under_rev);
    assert((state.at(c.arc[over_out(c)]) == ArcState::Reversed) == over_rev);
    int rot = under_rev ? 2 : 0;
    Crossing nc;
    for (int k = 0; k < 4; ++k) nc.arc[k] = newid.at(c.arc[(k + rot) % 4]);
    int over_entry = over_rev ? over_out(c) : c.over_in;
    nc.over_in = (over_entry - rot + 4) % 4;
    assert(nc.over_in == 1 || nc.over_in == 3);
    res.diagram.cr.push_back(nc);
  }
  return res;
}

} // namespace linkinv
