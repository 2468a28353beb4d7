// PD/braid parsing, orientation and planarity checks, faces, and the
// diagram-level splicing operations.
#include <algorithm>
#include <set>

#include "doctest.h"
#include "lipknot/corpus.hpp"
#include "lipknot/diagram.hpp"
#include "lipknot/invariants.hpp"

using namespace lipknot;

TEST_CASE("empty and loop-only diagrams") {
  LinkDiagram empty = parse_pd("");
  CHECK(empty.empty());
  CHECK(total_components(empty) == 0);
  LinkDiagram two_loops = parse_pd("O O");
  CHECK(two_loops.free_loops() == 2);
  CHECK(total_components(two_loops) == 2);
  CHECK(to_pd_string(two_loops) == "O O");
}

TEST_CASE("pd parsing rejects malformed codes") {
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), ValidationError);        // labels appear once
  CHECK_THROWS_AS(parse_pd("X[1,1,1,2] X[2,3,3,4] O"), ValidationError);
  CHECK_THROWS_AS(parse_pd("X[0,1,0,1]"), ValidationError);        // labels must be positive
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4] X[1,4,3,2]"), ValidationError);  // unorientable
  CHECK_THROWS_AS(parse_pd("X[1,2,1,2]"), ValidationError);        // genus-1 code
}

TEST_CASE("the two kink chiralities orient and sign correctly") {
  LinkDiagram pos = parse_pd("X[1,1,2,2]");
  CHECK(total_components(pos) == 1);
  CHECK(writhe(pos) == 1);
  CHECK(pos.crossing_sign(0) == 1);
  LinkDiagram neg = parse_pd("X[1,2,2,1]");
  CHECK(writhe(neg) == -1);
}

TEST_CASE("hopf link structure") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  auto a = analyze(hopf);
  CHECK(a.components.size() == 2);
  CHECK(a.faces.size() == 4);  // V - E + F = 2 with V=2, E=4
  CHECK(writhe(hopf) == 2);
  CHECK(hopf.crossing_sign(0) == 1);
  CHECK(hopf.crossing_sign(1) == 1);
  // Every edge borders exactly two face darts in total.
  std::map<int, int> border_count;
  for (const auto& face : a.faces)
    for (const auto& dart : face)
      ++border_count[hopf.crossings()[static_cast<std::size_t>(dart.crossing)]
                         .e[static_cast<std::size_t>(dart.slot)]];
  for (const auto& [edge, count] : border_count) {
    (void)edge;
    CHECK(count == 2);
  }
}

TEST_CASE("trefoil has five faces and one component") {
  LinkDiagram t = named_knot("trefoil");
  auto a = analyze(t);
  CHECK(a.components.size() == 1);
  CHECK(a.components[0].size() == 6);
  CHECK(a.faces.size() == 5);  // V=3, E=6
  CHECK(writhe(t) == 3);
}

TEST_CASE("braid parsing matches explicit pd codes") {
  CHECK(same_diagram(parse_braid("braid 2: s1 s1"), parse_pd("X[1,3,4,2] X[3,1,2,4]")));
  CHECK(same_diagram(parse_braid("braid 2: s1^3"), named_knot("trefoil")));
  // An n-strand identity braid closes to n free loops.
  LinkDiagram id3 = parse_braid("braid 3:");
  CHECK(total_components(id3) == 3);
  CHECK(id3.crossings().empty());
}

TEST_CASE("braid parsing rejects malformed words") {
  CHECK_THROWS_AS(parse_braid("s1 s2"), ParseError);
  CHECK_THROWS_AS(parse_braid("braid 2: s2"), ParseError);
  CHECK_THROWS_AS(parse_braid("braid 0: s1"), ParseError);
  CHECK_THROWS_AS(parse_braid("braid 2: s1^0"), ParseError);
}

TEST_CASE("canonical form is stable under relabeling") {
  LinkDiagram t1 = parse_pd("X[1,3,4,2] X[3,5,6,4] X[5,1,2,6]");
  LinkDiagram t2 = parse_pd("X[11,23,44,12] X[23,35,46,44] X[35,11,12,46]");
  CHECK(canonical_pd(t1) == canonical_pd(t2));
  CHECK(same_diagram(t1, t2));
  CHECK_FALSE(same_diagram(t1, mirror(t1)));
  // Canonical labels are 1..2n in traversal order.
  LinkDiagram c = canonicalized(t2);
  std::set<int> labels;
  for (const auto& x : c.crossings())
    for (int l : x.e) labels.insert(l);
  CHECK(*labels.begin() == 1);
  CHECK(*labels.rbegin() == 6);
}

TEST_CASE("mirror flips every crossing sign and is an involution") {
  LinkDiagram t = named_knot("trefoil");
  LinkDiagram m = mirror(t);
  CHECK(writhe(m) == -3);
  for (int c = 0; c < 3; ++c) CHECK(m.crossing_sign(c) == -t.crossing_sign(c));
  CHECK(same_diagram(mirror(m), t));
}

TEST_CASE("component reversal negates the linking number") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  CHECK(linking_number(hopf, 0, 1) == 1);
  LinkDiagram rev = reverse_component(hopf, 0);
  CHECK(linking_number(rev, 0, 1) == -1);
  CHECK(total_components(rev) == 2);
  CHECK_THROWS_AS(reverse_component(hopf, 5), DomainError);
}

TEST_CASE("disjoint union keeps both factors") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  LinkDiagram t = named_knot("trefoil");
  LinkDiagram u = disjoint_union(hopf, t);
  CHECK(total_components(u) == 3);
  CHECK(u.crossings().size() == 5);
  CHECK(writhe(u) == 5);
  // Components of different factors never share a crossing, so they link zero.
  CHECK(linking_number(u, 0, 2) == 0);
  CHECK(linking_number(u, 1, 2) == 0);
}

TEST_CASE("connected sum concatenates knots") {
  LinkDiagram t = named_knot("trefoil");
  SpliceResult sp = connected_sum(t, 0, t, 0);
  CHECK(total_components(sp.diagram) == 1);
  CHECK(sp.diagram.crossings().size() == 6);
  CHECK(jones(sp.diagram) == jones(t) * jones(t));
  auto a = analyze(sp.diagram);
  CHECK(a.edges.count(sp.strand_a) == 1);
  CHECK(a.edges.count(sp.strand_b) == 1);
}

TEST_CASE("component extraction forgets the partner strands") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  LinkDiagram c0 = extract_component(hopf, 0);
  CHECK(total_components(c0) == 1);
  CHECK(c0.crossings().empty());  // both crossings were shared
  LinkDiagram t = named_knot("trefoil");
  LinkDiagram u = disjoint_union(t, parse_pd("O"));
  CHECK(same_diagram(extract_component(u, 0), t));
  CHECK(extract_component(u, 1).free_loops() == 1);
  CHECK_THROWS_AS(extract_component(u, 2), DomainError);
}

TEST_CASE("band smoothing splits and rejoins across a face") {
  // The positive Hopf link: edges 1,2 are anti-parallel on their shared face;
  // smoothing there merges the two circles into one.
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  auto a = analyze(hopf);
  auto face = find_band_face(hopf, a, 3, 1);
  REQUIRE(face.has_value());
  LinkDiagram joined = band_smooth(hopf, 3, 1, *face);
  CHECK(total_components(joined) == 1);
  // Smoothing the same pair in the joined diagram splits it back apart.
  auto a2 = analyze(joined);
  auto face2 = find_band_face(joined, a2, 3, 1);
  REQUIRE(face2.has_value());
  CHECK(total_components(band_smooth(joined, 3, 1, *face2)) == 2);
}

TEST_CASE("band smoothing validates its location") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  auto a = analyze(hopf);
  CHECK_THROWS_AS(band_smooth(hopf, 3, 3, 0), DomainError);
  CHECK_THROWS_AS(band_smooth(hopf, 3, 99, 0), DomainError);
  // Edges 1 and 2 share a face but run parallel there: refused.
  bool some_parallel_face_refused = false;
  for (int f = 0; f < static_cast<int>(a.faces.size()); ++f) {
    if (anti_parallel_on_face(hopf, a, 1, 2, f)) continue;
    try {
      band_smooth(hopf, 1, 2, f);
    } catch (const DomainError&) {
      some_parallel_face_refused = true;
    }
  }
  CHECK(some_parallel_face_refused);
}

TEST_CASE("face edge incidences agree with the dart faces") {
  LinkDiagram t = named_knot("trefoil");
  auto a = analyze(t);
  auto inc = face_edge_incidences(t, a);
  REQUIRE(inc.size() == a.faces.size());
  for (std::size_t f = 0; f < inc.size(); ++f) CHECK(inc[f].size() == a.faces[f].size());
  // Total incidences = 2 per edge.
  std::size_t total = 0;
  for (const auto& face : inc) total += face.size();
  CHECK(total == 2 * a.edges.size());
}

TEST_CASE("named knots exist and are distinct") {
  auto names = knot_names();
  REQUIRE(names.size() == 4);
  std::set<std::string> canon;
  for (const auto& n : names) canon.insert(canonical_pd(named_knot(n)));
  CHECK(canon.size() == 4);
  CHECK(total_components(named_knot("unknot")) == 1);
  CHECK_THROWS_AS(named_knot("6_1"), DomainError);
}
