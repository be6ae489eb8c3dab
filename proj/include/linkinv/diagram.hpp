#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace linkinv {

using ArcId = int;

// One crossing of an oriented link diagram. The four incident arc ends sit
// in slots 0..3 counterclockwise, with slot 0 always the incoming
// understrand (so slot 2 is the outgoing understrand). The overstrand
// enters at slot `over_in`, which is 1 or 3; over_in == 1 makes the
// crossing positive.
struct Crossing {
  std::array<ArcId, 4> arc;
  int over_in = 1;

  bool operator==(const Crossing&) const = default;
};

inline int crossing_sign(const Crossing& c) { return c.over_in == 1 ? 1 : -1; }
inline int over_out(const Crossing& c) { return 4 - c.over_in; }
inline bool is_in_slot(const Crossing& c, int s) {
  return s == 0 || s == c.over_in;
}
// The out-slot reached by entering at in-slot s and passing through.
inline int through_slot(const Crossing& c, int s) {
  return s == 0 ? 2 : over_out(c);
}

// An oriented link diagram: crossings indexed by position, plus a count of
// closed components that meet no crossing.
struct Diagram {
  std::vector<Crossing> cr;
  int circles = 0;

  bool operator==(const Diagram&) const = default;
};

struct Pos {
  int cr = -1;
  int slot = -1;
  bool operator==(const Pos&) const = default;
};

struct ArcEnds {
  Pos tail; // where the arc leaves a crossing
  Pos head; // where the arc enters a crossing
};

// Every arc must leave exactly one crossing slot and enter exactly one.
// Throws std::runtime_error when the diagram is malformed.
std::map<ArcId, ArcEnds> arc_index(const Diagram& d);

// Closed components as cyclic arc sequences, in deterministic order
// (each rotated to start at its smallest arc id, listed by that id).
// Crossing-free circles are not included; see Diagram::circles.
std::vector<std::vector<ArcId>> components(const Diagram& d);

std::map<ArcId, int> arc_component(const Diagram& d);

int writhe(const Diagram& d);

// Both strands of crossing `idx` belong to one component.
bool is_self_crossing(const Diagram& d, int idx);

// Swap which strand passes over at crossing `idx`, keeping both strand
// orientations; the slot array rotates so slot 0 stays the incoming
// understrand. Applying it twice restores the diagram.
Diagram with_crossing_changed(const Diagram& d, int idx);

Diagram mirror(const Diagram& d);        // change every crossing
Diagram reversed(const Diagram& d);      // reverse every component
// Disjoint union; arcs of `b` are relabeled above those of `a`.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Textual form: whitespace-separated crossings "X[a,b,c,d]" giving slots
// 0..3, each optionally suffixed with an explicit sign ("X[1,3,2,3]+"),
// plus "O" tokens for crossing-free circles. Slot 0 is the incoming
// understrand. The direction of each overstrand is inferred from arcs it
// shares with understrand slots; components that never go under need a
// sign suffix on at least one of their crossings.
Diagram parse_pd(const std::string& text);
std::string to_pd(const Diagram& d);

// Label-independent complete code of the oriented diagram: two diagrams
// get equal codes exactly when one maps to the other by relabeling arcs
// and renumbering crossings. Obtained by traversing components and
// minimizing the event transcript over component orders and starting arcs.
std::string canonical_code(const Diagram& d);

} // namespace linkinv
