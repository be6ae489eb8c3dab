#pragma once

#include <array>
#include <optional>
#include <vector>

#include "linkinv/diagram.hpp"

namespace linkinv {

// Compass corners of a crossing site. Both strands run south to north:
// they enter at NW and SW and leave at NE and SE. At a positive crossing
// the overstrand enters at NW, at a negative one at SW.
enum class Compass { NW, NE, SE, SW };

const char* compass_name(Compass c);
Compass slot_compass(const Crossing& c, int slot);

// The eight ways to replace a crossing by two non-crossing strands.
// Letters give the travel directions of the two replacement bridges:
//   E : NW>NE, SW>SE   both east (the orientation-preserving smoothing)
//   W : NE>NW, SE>SW   both west (reverses both local strands)
//   HC: NW>NE, SE>SW   horizontal, counterclockwise pair
//   HT: NE>NW, SW>SE   horizontal, clockwise pair
//   VC: SW>NW, NE>SE   vertical, counterclockwise pair
//   VT: NW>SW, SE>NE   vertical, clockwise pair
//   S : NW>SW, NE>SE   both south
//   N : SW>NW, SE>NE   both north
enum class Sm { E, W, HC, HT, VC, VT, S, N };

inline constexpr std::array<Sm, 8> all_smoothings = {
    Sm::E, Sm::W, Sm::HC, Sm::HT, Sm::VC, Sm::VT, Sm::S, Sm::N};

const char* sm_name(Sm s);

struct SmBridge {
  Compass from, to;
};
std::array<SmBridge, 2> sm_bridges(Sm s);

// Smoothings that admit a consistent global orientation, which depends
// only on whether the site's two strands belong to one component.
std::vector<Sm> admissible_smoothings(bool self_site);

// Provenance piece of a rebuilt strand: a stretch of an old arc (walked
// with or against its old direction) or one of the two bridges.
struct Piece {
  enum Kind { OldArc, Bridge } kind = OldArc;
  ArcId arc = 0;         // OldArc only
  bool reversed = false; // OldArc only
  int bridge = 0;        // Bridge only: 0 or 1, indexing sm_bridges

  bool operator==(const Piece&) const = default;
};

struct NewArc {
  ArcId id;
  std::vector<Piece> pieces;
};

struct ApplyResult {
  Diagram diagram;
  std::vector<NewArc> arcs;                      // every arc of the result
  std::vector<ArcId> reversed_arcs;              // old arcs walked backwards
  std::vector<std::vector<Piece>> circles;       // new crossing-free loops
};

// Replace crossing `site` by the two bridges of `type`, then repair the
// global orientation: bridges force travel directions, and the forced
// directions spread along every strand they touch. Returns nothing when
// the forced directions clash (the strand walk runs into a bridge exit).
std::optional<ApplyResult> apply_smoothing(const Diagram& d, int site,
                                           Sm type);

} // namespace linkinv
