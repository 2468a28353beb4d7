#pragma once
// Surface germs modeled as decorated link diagrams: the link of the germ plus
// bridge sites (thin bands with exponents 1 < beta < q) and pinch pairs
// (strand pairs meeting at a common tangency exponent at the origin).
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lipknot/diagram.hpp"
#include "lipknot/rational.hpp"

namespace lipknot {

struct BridgeSite {
  std::string id;
  std::array<int, 2> edges{-1, -1};
  int face = -1;
  Rational q{3};
  Rational beta{2};
};

struct PinchPair {
  std::array<int, 2> markers{-1, -1};
  Rational tangency{3, 2};  // contact exponent of the identified strand pair
};

struct HistoryEntry {
  std::string op;
  std::string detail;
};

struct Germ {
  std::string label;
  LinkDiagram diagram;
  std::vector<BridgeSite> bridges;
  std::vector<PinchPair> pinches;
  std::vector<HistoryEntry> history;
  int dimension = 4;
};

// Checks dimension, edge existence, exponent ranges (1 < beta < q,
// tangency > 1), bridge co-faciality, id uniqueness, and that no edge carries
// two decorations.
void validate_germ(const Germ& g);

Germ make_germ(std::string label, LinkDiagram d, std::vector<BridgeSite> bridges = {},
               std::vector<PinchPair> pinches = {});

const BridgeSite* find_site(const Germ& g, const std::string& id);

// Adds a bridge between two anti-parallel co-facial strands. Without an
// explicit face the lowest-id candidate face is used.
Germ insert_bridge(const Germ& g, const std::string& id, int e1, int e2, const Rational& q,
                   const Rational& beta, std::optional<int> face = {});

// Replaces the bridge by two sheets meeting at order p > q: the band is
// smoothed and the site disappears.
Germ break_bridge(const Germ& g, const std::string& site_id, const Rational& p);

// Inserts k full twists (signed) into the band below the site; the site
// persists below the new twist region.
Germ twist_bridge(const Germ& g, const std::string& site_id, int k);

// Connected sum of one link component with a knot, at a splice point chosen
// so every decoration stays valid.
Germ attach_knot(const Germ& g, int component, const LinkDiagram& knot);

// The link of the tangent cone: one circle per undecorated component, and the
// marked components cut at their pinch points into closed-off circles wedged
// where the cuts met.
struct PinchedLink {
  std::vector<LinkDiagram> circles;                 // each a single circle
  std::vector<std::vector<int>> pinch_incidences;   // per pinch: circle indices
};

PinchedLink tangent_cone(const Germ& g);

// A germ whose link is the unknot with trivial invariants but whose tangent
// cone splits into two copies of the given knot: the diagram is doubled, one
// copy reversed, and a band joins them; the band sheets meet at order beta.
Germ build_universal(const LinkDiagram& knot, const Rational& beta);

Germ mirror_germ(const Germ& g);

}  // namespace lipknot
