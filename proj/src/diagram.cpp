#include "linkinv/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linkinv {

namespace {

[[noreturn]] void bad(const std::string& why) {
  throw std::runtime_error("bad diagram: " + why);
}

} // namespace

std::map<ArcId, ArcEnds> arc_index(const Diagram& d) {
  std::map<ArcId, ArcEnds> ends;
  for (int ci = 0; ci < (int)d.cr.size(); ++ci) {
    const Crossing& c = d.cr[ci];
    for (int s = 0; s < 4; ++s) {
      ArcEnds& e = ends[c.arc[s]];
      Pos& p = is_in_slot(c, s) ? e.head : e.tail;
      if (p.cr != -1)
        bad("arc " + std::to_string(c.arc[s]) +
            (is_in_slot(c, s) ? " enters" : " leaves") + " two slots");
      p = Pos{ci, s};
    }
  }
  for (const auto& [a, e] : ends) {
    if (e.head.cr == -1) bad("arc " + std::to_string(a) + " never enters a crossing");
    if (e.tail.cr == -1) bad("arc " + std::to_string(a) + " never leaves a crossing");
  }
  return ends;
}

std::vector<std::vector<ArcId>> components(const Diagram& d) {
  auto ends = arc_index(d);
  std::set<ArcId> todo;
  for (const auto& [a, e] : ends) todo.insert(a);
  std::vector<std::vector<ArcId>> comps;
  while (!todo.empty()) {
    ArcId start = *todo.begin();
    std::vector<ArcId> cyc;
    ArcId a = start;
    do {
      cyc.push_back(a);
      todo.erase(a);
      const Pos& h = ends.at(a).head;
      a = d.cr[h.cr].arc[through_slot(d.cr[h.cr], h.slot)];
    } while (a != start);
    // Rotate so the smallest arc id leads.
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    comps.push_back(std::move(cyc));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return comps;
}

std::map<ArcId, int> arc_component(const Diagram& d) {
  std::map<ArcId, int> m;
  auto comps = components(d);
  for (int i = 0; i < (int)comps.size(); ++i)
    for (ArcId a : comps[i]) m[a] = i;
  return m;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const Crossing& c : d.cr) w += crossing_sign(c);
  return w;
}

bool is_self_crossing(const Diagram& d, int idx) {
  auto m = arc_component(d);
  const Crossing& c = d.cr[idx];
  return m.at(c.arc[0]) == m.at(c.arc[c.over_in]);
}

Diagram with_crossing_changed(const Diagram& d, int idx) {
  Diagram r = d;
  Crossing& c = r.cr[idx];
  const auto a = c.arc;
  if (c.over_in == 1) {
    // The old overstrand (entering at slot 1) becomes the understrand;
    // slots rotate so it enters at the new slot 0.
    c.arc = {a[1], a[2], a[3], a[0]};
    c.over_in = 3;
  } else {
    c.arc = {a[3], a[0], a[1], a[2]};
    c.over_in = 1;
  }
  return r;
}

Diagram mirror(const Diagram& d) {
  Diagram r = d;
  for (int i = 0; i < (int)d.cr.size(); ++i) r = with_crossing_changed(r, i);
  return r;
}

Diagram reversed(const Diagram& d) {
  Diagram r = d;
  for (Crossing& c : r.cr) {
    const auto a = c.arc;
    // Reversing both strands swaps in and out roles; the outgoing
    // understrand end becomes the incoming one, two slots away.
    c.arc = {a[2], a[3], a[0], a[1]};
  }
  return r;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  ArcId hi = 0;
  for (const Crossing& c : a.cr)
    for (ArcId x : c.arc) hi = std::max(hi, x);
  ArcId lo = 0;
  bool first = true;
  for (const Crossing& c : b.cr)
    for (ArcId x : c.arc) {
      lo = first ? x : std::min(lo, x);
      first = false;
    }
  ArcId shift = hi + 1 - lo;
  Diagram r = a;
  for (Crossing c : b.cr) {
    for (ArcId& x : c.arc) x += shift;
    r.cr.push_back(c);
  }
  r.circles += b.circles;
  return r;
}

Diagram parse_pd(const std::string& text) {
  Diagram d;
  std::vector<int> declared; // 0 unknown, else 1 or 3
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      bad(std::string("expected '") + c + "' at position " + std::to_string(i));
    ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    size_t start = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == start) bad("expected arc number at position " + std::to_string(i));
    return std::stoi(text.substr(start, i - start));
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    if (c == 'O') {
      ++i;
      ++d.circles;
    } else if (c == 'X') {
      ++i;
      expect('[');
      Crossing cr;
      for (int s = 0; s < 4; ++s) {
        cr.arc[s] = parse_int();
        if (s < 3) expect(',');
      }
      expect(']');
      int sign = 0;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '+' ? 1 : 3;
        ++i;
      }
      d.cr.push_back(cr);
      declared.push_back(sign);
    } else {
      bad(std::string("unexpected character '") + c + "'");
    }
  }

  // Work out each overstrand's direction. Understrand slots have fixed
  // roles (slot 0 enters, slot 2 leaves), each arc must enter once and
  // leave once, and within a crossing the two overstrand slots take
  // opposite roles. Propagate until everything is forced.
  std::map<ArcId, std::vector<Pos>> occ;
  for (int ci = 0; ci < (int)d.cr.size(); ++ci)
    for (int s = 0; s < 4; ++s) occ[d.cr[ci].arc[s]].push_back(Pos{ci, s});
  for (const auto& [a, ps] : occ)
    if (ps.size() != 2)
      bad("arc " + std::to_string(a) + " appears " +
          std::to_string(ps.size()) + " times (want 2)");

  std::vector<int> over_in = declared;
  // Role of an occurrence: +1 the arc enters here, -1 it leaves, 0 unknown.
  auto role = [&](const Pos& p) -> int {
    if (p.slot == 0) return 1;
    if (p.slot == 2) return -1;
    if (over_in[p.cr] == 0) return 0;
    return p.slot == over_in[p.cr] ? 1 : -1;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [a, ps] : occ) {
      (void)a;
      for (int k = 0; k < 2; ++k) {
        const Pos& known = ps[k];
        const Pos& open = ps[1 - k];
        if (role(known) == 0 || role(open) != 0) continue;
        if (open.cr == known.cr && known.slot != 0 && known.slot != 2)
          continue; // both ends on one overstrand loop: no constraint
        over_in[open.cr] = role(known) == 1 ? 4 - open.slot : open.slot;
        progress = true;
      }
    }
  }
  for (int ci = 0; ci < (int)d.cr.size(); ++ci) {
    if (over_in[ci] == 0)
      bad("overstrand direction at crossing " + std::to_string(ci) +
          " is ambiguous; add a +/- suffix");
    d.cr[ci].over_in = over_in[ci];
  }
  arc_index(d); // validates the resolved orientation
  return d;
}

std::string to_pd(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const Crossing& c : d.cr) {
    if (!first) os << " ";
    first = false;
    os << "X[" << c.arc[0] << "," << c.arc[1] << "," << c.arc[2] << ","
       << c.arc[3] << "]" << (c.over_in == 1 ? "+" : "-");
  }
  for (int k = 0; k < d.circles; ++k) {
    if (!first) os << " ";
    first = false;
    os << "O";
  }
  return os.str();
}

namespace {

// Transcript of one full traversal: for every arc head passed, the
// crossing's first-visit number, whether we ride over or under, and the
// crossing sign. Equal transcripts mean equal diagrams up to relabeling,
// because the transcript rebuilds every crossing: the k-th visit tells
// which strand arrives and the sign fixes the slot layout.
std::string transcript(const Diagram& d,
                       const std::map<ArcId, ArcEnds>& ends,
                       const std::vector<std::vector<ArcId>>& comps,
                       const std::vector<int>& order,
                       const std::vector<int>& offset) {
  std::vector<int> number(d.cr.size(), -1);
  int next = 0;
  std::string out;
  for (size_t oi = 0; oi < order.size(); ++oi) {
    const auto& comp = comps[order[oi]];
    if (oi) out += '/';
    for (size_t k = 0; k < comp.size(); ++k) {
      ArcId a = comp[(k + offset[oi]) % comp.size()];
      const Pos& h = ends.at(a).head;
      if (number[h.cr] == -1) number[h.cr] = next++;
      out += std::to_string(number[h.cr]);
      out += h.slot == 0 ? 'U' : 'O';
      out += crossing_sign(d.cr[h.cr]) > 0 ? '+' : '-';
      out += ',';
    }
  }
  return out;
}

} // namespace

std::string canonical_code(const Diagram& d) {
  auto comps = components(d);
  std::string tail = "#" + std::to_string(d.circles);
  if (comps.empty()) return tail;
  if (comps.size() > 8) bad("too many components to canonicalize");
  auto ends = arc_index(d);
  std::vector<int> order(comps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::string best;
  std::sort(order.begin(), order.end());
  do {
    std::vector<int> offset(comps.size(), 0);
    while (true) {
      std::string t = transcript(d, ends, comps, order, offset);
      if (best.empty() || t < best) best = std::move(t);
      // Advance the mixed-radix start-offset counter.
      size_t k = 0;
      for (; k < offset.size(); ++k) {
        if (++offset[k] < (int)comps[order[k]].size()) break;
        offset[k] = 0;
      }
      if (k == offset.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best + tail;
}

} // namespace linkinv
