#pragma once

#include <vector>

#include "linkinv/diagram.hpp"

namespace linkinv {

// A marked diagram: components get a priority order and a starting arc
// each. base[i] is the arc where the walk enters the i-th component; the
// order of the entries is the component order. Crossing-free circles
// carry no marking data.
struct Marking {
  std::vector<ArcId> base;

  bool operator==(const Marking&) const = default;
};

// Throws std::runtime_error unless every component is started exactly once.
void check_marking(const Diagram& d, const Marking& m);

// All arcs in walk order: components by priority, each followed from its
// starting arc along the orientation.
std::vector<ArcId> walk_arcs(const Diagram& d, const Marking& m);

// Crossings met for the first time on their overstrand, listed in the
// order the walk first meets them. A diagram with none is monotone: it
// can be laid out so every strand climbs steadily, so it is trivial as a
// link, and such diagrams are where the evaluation recursion bottoms out.
std::vector<int> bad_crossings(const Diagram& d, const Marking& m);

int first_bad(const Diagram& d, const Marking& m); // -1 when monotone
bool is_monotone(const Diagram& d, const Marking& m);

// Components in their deterministic order, each starting at its
// smallest arc.
Marking canonical_marking(const Diagram& d);

} // namespace linkinv
