#include "lipknot/corpus.hpp"

#include <map>

namespace lipknot {

LinkDiagram named_knot(const std::string& name) {
  if (name == "unknot") return LinkDiagram::make({}, 1);
  if (name == "trefoil") return parse_braid("braid 2: s1^3");
  if (name == "fig8") return parse_braid("braid 3: s1 s2^-1 s1 s2^-1");
  if (name == "5_1") return parse_braid("braid 2: s1^5");
  throw DomainError("unknown knot '" + name + "'");
}

std::vector<std::string> knot_names() { return {"unknot", "trefoil", "fig8", "5_1"}; }

namespace {

// A circle with one positive and one negative kink; the band between the two
// kinked strands carries the bridge.
Germ bridge_base(const std::string& label) {
  LinkDiagram d = parse_pd("X[4,1,1,2] X[3,3,4,2]");
  Germ g = make_germ(label, d);
  return insert_bridge(g, "b1", 2, 4, Rational(3), Rational(2));
}

Germ twist_family(int k) {
  Germ g = twist_bridge(bridge_base("twist"), "b1", k);
  g.label = "twist." + std::to_string(k);
  return g;
}

// Granny knot (sum of two same-handed trefoils) with two pinch markers.
// cut_inside_tangle = false marks both splice strands (the cone splits into
// two trefoils); true moves one marker inside the first trefoil tangle (the
// cone splits into a trefoil and an unknot).
Germ granny_germ(const std::string& label, bool cut_inside_tangle) {
  const LinkDiagram trefoil = named_knot("trefoil");
  const SpliceResult sp = connected_sum(trefoil, 0, trefoil, 0);
  // Pinching at the splice strands wedges the two summands back apart; moving
  // one marker pair inside a tangle instead unknots that side of the wedge.
  const int m1 = cut_inside_tangle ? 2 : sp.strand_a;
  const int m2 = cut_inside_tangle ? 4 : sp.strand_b;
  Germ g;
  g.label = label;
  g.diagram = sp.diagram;
  g.pinches.push_back(PinchPair{{m1, m2}, Rational(3, 2)});
  validate_germ(g);
  g.history.push_back({"connected_sum", "trefoil # trefoil"});
  return g;
}

Germ universal_germ(const std::string& knot) {
  Germ g = build_universal(named_knot(knot), Rational(3, 2));
  g.label = "universal." + knot;
  return g;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> names{"ex2.X1", "ex2.X2", "ex3.X", "ex3.Y"};
  for (int k = -5; k <= 5; ++k) names.push_back("twist." + std::to_string(k));
  for (const auto& k : knot_names()) names.push_back("universal." + k);
  return names;
}

Germ corpus_germ(const std::string& name) {
  if (name == "ex2.X1") return granny_germ(name, false);
  if (name == "ex2.X2") return granny_germ(name, true);
  if (name == "ex3.X") return bridge_base(name);
  if (name == "ex3.Y") {
    Germ g = twist_bridge(bridge_base("ex3.Y"), "b1", 1);
    g.label = "ex3.Y";
    return g;
  }
  if (name.rfind("twist.", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(6), &used);
      if (used != name.size() - 6) throw DomainError("");
    } catch (...) {
      throw DomainError("unknown corpus germ '" + name + "'");
    }
    if (k < -5 || k > 5) throw DomainError("twist family index must lie in [-5, 5]");
    return twist_family(k);
  }
  if (name.rfind("universal.", 0) == 0) return universal_germ(name.substr(10));
  throw DomainError("unknown corpus germ '" + name + "'");
}

}  // namespace lipknot
