#pragma once
// Reidemeister moves performed directly on PD codes. Moves are specified by a
// target location; each move validates that the location really has the
// required local shape before rewriting it.
#include <string>

#include "lipknot/diagram.hpp"

namespace lipknot {

struct ReidemeisterLocation {
  // R1+: edge to kink, kink sign, and which passage comes first (side 0 puts
  // the strand under at the new crossing, side 1 over). on_free_loop targets a
  // crossing-free circle instead of an edge.
  int edge = -1;
  int sign = +1;
  int side = 0;
  bool on_free_loop = false;
  // R1-: crossing index of the kink to remove.
  int crossing = -1;
  // R2+/R2-/R3: face id; R2+ also names the strand pushed over and the one
  // pushed under.
  int face = -1;
  int over_edge = -1;
  int under_edge = -1;
};

// move is one of "R1+", "R1-", "R2+", "R2-", "R3".
LinkDiagram reidemeister(const LinkDiagram& d, const std::string& move,
                         const ReidemeisterLocation& loc);

}  // namespace lipknot
