#pragma once

#include <random>
#include <vector>

#include "linkinv/diagram.hpp"

namespace linkinv {

// One step of a face-boundary walk: the arc is traversed with (fwd) or
// against its own direction.
struct FaceEdge {
  ArcId arc = 0;
  bool fwd = true;
  bool operator==(const FaceEdge&) const = default;
};

// Boundaries of the complementary regions of the crossing graph, traced
// from the cyclic slot order with the region kept on the walker's left.
// Crossing-free circles bound extra regions that are not listed. Each
// (arc, direction) pair appears on exactly one face.
std::vector<std::vector<FaceEdge>> faces(const Diagram& d);

// Connected components of the crossing graph (circles not counted).
int graph_components(const Diagram& d);

// Euler consistency of the slot data: every connected piece of a diagram
// drawn on the sphere traces out crossings + 2 faces. A violation means
// the code admits no planar drawing.
bool planar(const Diagram& d);

// First move: add a small curl on `arc`. `sign` (+1/-1) picks the new
// crossing's sign and `curl_over` whether the curl strand passes over;
// the two choices per sign are the two chiralities of the kink.
Diagram r1_add(const Diagram& d, ArcId arc, int sign, bool curl_over);

// Second move: push a finger of one arc across a region and over (or
// under) another arc, adding two cancelling crossings of opposite sign.
// Valid when the two sides cobound a face, or lie in different graph
// components (split pieces can always be brought alongside each other).
struct Poke {
  FaceEdge over, under; // the finger arc and the arc it crosses
  bool operator==(const Poke&) const = default;
};
std::vector<Poke> r2_sites(const Diagram& d);
Diagram r2_add(const Diagram& d, const Poke& p);

// Third move: slide the strand running over both corners of a triangular
// region across the crossing at the opposite corner. `top` is the edge
// passing over at both of its ends; `left` and `right` join its ends to
// the opposite crossing. Listed sites have three distinct crossings and
// three distinct arcs.
struct Slide {
  ArcId top = 0, left = 0, right = 0;
  bool operator==(const Slide&) const = default;
};
std::vector<Slide> r3_sites(const Diagram& d);
Diagram r3_apply(const Diagram& d, const Slide& s);

// Deterministic pseudorandom diagrams grown from one-crossing curls by
// random kinks, pokes and crossing changes (planar by construction),
// optionally with extra split pieces.
Diagram random_diagram(std::mt19937_64& rng, int crossings,
                       int split_pieces = 1);

} // namespace linkinv
