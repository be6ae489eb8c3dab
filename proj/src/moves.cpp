#include "linkinv/moves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace linkinv {

namespace {

ArcId max_arc(const Diagram& d) {
  ArcId m = 0;
  for (const Crossing& c : d.cr)
    for (ArcId a : c.arc) m = std::max(m, a);
  return m;
}

// Representative crossing of each crossing-graph component.
std::vector<int> component_ids(const Diagram& d) {
  int n = static_cast<int>(d.cr.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<ArcId, int> first;
  for (int i = 0; i < n; ++i)
    for (ArcId a : d.cr[i].arc) {
      auto [it, fresh] = first.emplace(a, i);
      if (!fresh) parent[find(it->second)] = find(i);
    }
  for (int i = 0; i < n; ++i) parent[i] = find(i);
  return parent;
}

} // namespace

std::vector<std::vector<FaceEdge>> faces(const Diagram& d) {
  auto ends = arc_index(d);
  std::set<std::pair<ArcId, bool>> seen;
  std::vector<std::vector<FaceEdge>> out;
  for (const auto& [a0, e0] : ends) {
    (void)e0;
    for (bool f0 : {true, false}) {
      if (seen.count({a0, f0})) continue;
      std::vector<FaceEdge> face;
      ArcId a = a0;
      bool f = f0;
      do {
        seen.insert({a, f});
        face.push_back({a, f});
        // Arrive at the far end, then leave through the next slot of the
        // cyclic order; an in-slot there means walking that arc backwards.
        Pos p = f ? ends.at(a).head : ends.at(a).tail;
        const Crossing& c = d.cr[p.cr];
        int t = (p.slot + 1) % 4;
        a = c.arc[t];
        f = !is_in_slot(c, t);
      } while (!(a == a0 && f == f0));
      out.push_back(std::move(face));
    }
  }
  return out;
}

int graph_components(const Diagram& d) {
  if (d.cr.empty()) return 0;
  auto ids = component_ids(d);
  std::set<int> roots(ids.begin(), ids.end());
  return static_cast<int>(roots.size());
}

bool planar(const Diagram& d) {
  // Each connected piece embeds iff its trace yields crossings + 2 faces;
  // the walk never leaves a piece, so split pieces contribute separately.
  if (d.cr.empty()) return true;
  return static_cast<int>(faces(d).size()) ==
         static_cast<int>(d.cr.size()) + 2 * graph_components(d);
}

Diagram r1_add(const Diagram& d, ArcId arc, int sign, bool curl_over) {
  if (sign * sign != 1) throw std::invalid_argument("kink sign must be +1/-1");
  auto ends = arc_index(d);
  auto it = ends.find(arc);
  if (it == ends.end()) throw std::invalid_argument("no such arc");
  Diagram r = d;
  ArcId m = max_arc(d) + 1; // continuation toward the old head
  ArcId k = m + 1;          // the curl
  // Slot layouts of the four kink shapes. The incoming strand ends at the
  // new crossing, `m` continues to its old head, and the curl `k` loops
  // around one side, passing over or under on its way back.
  Crossing c;
  if (sign > 0) {
    c.over_in = 1;
    if (curl_over)
      c.arc = {arc, k, k, m}; // curl occupies over-in and under-out
    else
      c.arc = {k, arc, m, k}; // curl occupies under-in and over-out
  } else {
    c.over_in = 3;
    if (curl_over)
      c.arc = {arc, m, k, k};
    else
      c.arc = {k, k, m, arc};
  }
  r.cr.push_back(c);
  r.cr[it->second.head.cr].arc[it->second.head.slot] = m;
  return r;
}

namespace {

// Cardinal directions of the construction pictures, listed clockwise.
enum Card { CN, CE, CS, CW };

// Assemble a crossing from pieces laid out on the four cardinal ends,
// given where the understrand and overstrand enter. The slot listing
// runs clockwise from the incoming understrand.
Crossing from_cardinals(const std::array<ArcId, 4>& at, Card under_in,
                        Card over_in) {
  Crossing c;
  for (int i = 0; i < 4; ++i) c.arc[i] = at[(under_in + i) % 4];
  c.over_in = (over_in - under_in + 4) % 4;
  assert(c.over_in == 1 || c.over_in == 3);
  return c;
}

} // namespace

std::vector<Poke> r2_sites(const Diagram& d) {
  std::vector<Poke> out;
  auto fs = faces(d);
  for (const auto& face : fs)
    for (const FaceEdge& ei : face)
      for (const FaceEdge& ej : face) {
        if (ei.arc == ej.arc) continue;
        out.push_back({ei, ej});
      }
  // Split pieces: any pair of sides taken from different components.
  if (graph_components(d) > 1) {
    auto ids = component_ids(d);
    std::map<ArcId, int> comp;
    for (size_t i = 0; i < d.cr.size(); ++i)
      for (ArcId a : d.cr[i].arc) comp.emplace(a, ids[i]);
    std::set<std::pair<ArcId, bool>> sides;
    for (const auto& face : fs)
      for (const FaceEdge& e : face) sides.insert({e.arc, e.fwd});
    for (const auto& [ai, fi] : sides)
      for (const auto& [aj, fj] : sides) {
        if (comp.at(ai) == comp.at(aj)) continue;
        out.push_back({{ai, fi}, {aj, fj}});
      }
  }
  std::sort(out.begin(), out.end(), [](const Poke& x, const Poke& y) {
    return std::tie(x.over.arc, x.over.fwd, x.under.arc, x.under.fwd) <
           std::tie(y.over.arc, y.over.fwd, y.under.arc, y.under.fwd);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Diagram r2_add(const Diagram& d, const Poke& p) {
  ArcId A = p.over.arc, B = p.under.arc;
  if (A == B) throw std::invalid_argument("poke needs two distinct arcs");
  auto ends = arc_index(d);
  Diagram r = d;
  ArcId base = max_arc(d);
  ArcId A2 = base + 1, A3 = base + 2, B2 = base + 3, B3 = base + 4;

  // Picture inside the shared region: the boundary runs along A left to
  // right at the bottom and along B right to left at the top (the region
  // stays on the walker's left). A finger of A pushes up across B and
  // back down: crossing X on the left, Y on the right, the finger tip A2
  // spanning the two north ends and B2 the two inner horizontal ends.
  // The fwd flags say whether each arc's own direction agrees with its
  // boundary direction; the piece keeping the old tail keeps the old id.
  bool fa = p.over.fwd, fb = p.under.fwd;
  std::array<ArcId, 4> atX{}, atY{};
  atX[CS] = fa ? A : A3;
  atX[CN] = A2;
  atY[CN] = A2;
  atY[CS] = fa ? A3 : A;
  Card a_in_X = fa ? CS : CN;
  Card a_in_Y = fa ? CN : CS;
  atY[CE] = fb ? B : B3;
  atY[CW] = B2;
  atX[CE] = B2;
  atX[CW] = fb ? B3 : B;
  Card b_in_X = fb ? CE : CW;
  Card b_in_Y = fb ? CE : CW;

  r.cr.push_back(from_cardinals(atX, b_in_X, a_in_X));
  r.cr.push_back(from_cardinals(atY, b_in_Y, a_in_Y));
  r.cr[ends.at(A).head.cr].arc[ends.at(A).head.slot] = A3;
  r.cr[ends.at(B).head.cr].arc[ends.at(B).head.slot] = B3;
  return r;
}

namespace {

bool over_at(const Diagram& d, const Pos& p) {
  const Crossing& c = d.cr[p.cr];
  return p.slot == c.over_in || p.slot == over_out(c);
}

} // namespace

std::vector<Slide> r3_sites(const Diagram& d) {
  auto ends = arc_index(d);
  std::vector<Slide> out;
  for (const auto& face : faces(d)) {
    if (face.size() != 3) continue;
    std::set<ArcId> arcs;
    std::set<int> crs;
    for (const FaceEdge& e : face) {
      arcs.insert(e.arc);
      crs.insert(ends.at(e.arc).head.cr);
      crs.insert(ends.at(e.arc).tail.cr);
    }
    if (arcs.size() != 3 || crs.size() != 3) continue;
    for (const FaceEdge& e : face) {
      const ArcEnds& ae = ends.at(e.arc);
      if (!over_at(d, ae.head) || !over_at(d, ae.tail)) continue;
      Slide s;
      s.top = e.arc;
      for (const FaceEdge& o : face) {
        if (o.arc == s.top) continue;
        const ArcEnds& oe = ends.at(o.arc);
        bool meets_head = oe.head.cr == ae.head.cr || oe.tail.cr == ae.head.cr;
        (meets_head ? s.left : s.right) = o.arc;
      }
      out.push_back(s);
      break; // one admissible description per triangle
    }
  }
  std::sort(out.begin(), out.end(), [](const Slide& x, const Slide& y) {
    return std::tie(x.top, x.left, x.right) < std::tie(y.top, y.left, y.right);
  });
  return out;
}

Diagram r3_apply(const Diagram& d, const Slide& s) {
  auto ends = arc_index(d);
  Diagram r = d;
  // Each triangle edge's strand passes its two corner crossings in some
  // order; the slide reverses that order on all three strands while every
  // crossing keeps its sign and over/under pattern. For an edge e running
  // alpha -> omega with outer neighbours p (into alpha) and q (out of
  // omega), the strand afterwards runs p -> omega -> e -> alpha -> q.
  for (ArcId e : {s.top, s.left, s.right}) {
    const ArcEnds& ae = ends.at(e);
    const Crossing& ca = d.cr[ae.tail.cr];
    const Crossing& co = d.cr[ae.head.cr];
    int in_a = ae.tail.slot == 2 ? 0 : ca.over_in;
    int out_o = ae.head.slot == 0 ? 2 : over_out(co);
    ArcId p = ca.arc[in_a];
    ArcId q = co.arc[out_o];
    r.cr[ae.tail.cr].arc[in_a] = e;
    r.cr[ae.tail.cr].arc[ae.tail.slot] = q;
    r.cr[ae.head.cr].arc[ae.head.slot] = p;
    r.cr[ae.head.cr].arc[out_o] = e;
  }
  return r;
}

namespace {

Diagram seed_kink(int which) {
  // The four one-crossing unknots: both signs, both curl chiralities.
  static const Crossing k[4] = {
      {{1, 2, 2, 1}, 1},
      {{2, 1, 1, 2}, 1},
      {{1, 1, 2, 2}, 3},
      {{2, 2, 1, 1}, 3},
  };
  Diagram d;
  d.cr.push_back(k[which & 3]);
  return d;
}

} // namespace

Diagram random_diagram(std::mt19937_64& rng, int crossings,
                       int split_pieces) {
  auto pick = [&](int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  };
  assert(crossings >= 1);
  if (split_pieces < 1) split_pieces = 1;
  Diagram d = seed_kink(pick(4));
  for (int s = 1; s < split_pieces && static_cast<int>(d.cr.size()) < crossings;
       ++s)
    d = disjoint_union(d, seed_kink(pick(4)));
  while (static_cast<int>(d.cr.size()) < crossings) {
    int roll = pick(10);
    if (roll < 4) {
      auto ends = arc_index(d);
      std::vector<ArcId> arcs;
      for (const auto& [a, e] : ends) {
        (void)e;
        arcs.push_back(a);
      }
      d = r1_add(d, arcs[pick(static_cast<int>(arcs.size()))],
                 pick(2) ? 1 : -1, pick(2) != 0);
    } else if (roll < 8 && static_cast<int>(d.cr.size()) + 2 <= crossings) {
      auto sites = r2_sites(d);
      if (sites.empty()) continue;
      d = r2_add(d, sites[pick(static_cast<int>(sites.size()))]);
    } else {
      d = with_crossing_changed(d, pick(static_cast<int>(d.cr.size())));
    }
    assert(planar(d));
  }
  for (int i = 0; i < 2; ++i)
    d = with_crossing_changed(d, pick(static_cast<int>(d.cr.size())));
  return d;
}

} // namespace linkinv
