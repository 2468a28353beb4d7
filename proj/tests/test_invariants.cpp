// Link invariants: writhe, linking numbers, Kauffman bracket (both
// algorithms), Jones polynomials, profiles, and the Gauss linking integral.
#include <cmath>
#include <random>

#include "doctest.h"
#include "lipknot/corpus.hpp"
#include "lipknot/diagram.hpp"
#include "lipknot/invariants.hpp"
#include "lipknot/random_gen.hpp"

using namespace lipknot;

namespace {

LaurentPoly tp(std::initializer_list<std::array<std::int64_t, 3>> terms, const char* var = "t") {
  LaurentPoly p = LaurentPoly::zero(var);
  for (const auto& t : terms) p += LaurentPoly::term(t[0], Rational(t[1], t[2]), var);
  return p;
}

}  // namespace

TEST_CASE("writhe and crossing signs") {
  CHECK(writhe(parse_pd("")) == 0);
  CHECK(writhe(parse_pd("X[1,1,2,2]")) == 1);
  CHECK(writhe(parse_pd("X[1,2,2,1]")) == -1);
  CHECK(writhe(named_knot("trefoil")) == 3);
  CHECK(writhe(mirror(named_knot("trefoil"))) == -3);
  CHECK(writhe(named_knot("fig8")) == 0);
}

TEST_CASE("linking numbers of the hopf link") {
  LinkDiagram pos = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  CHECK(linking_number(pos, 0, 1) == 1);
  CHECK(linking_number(pos, 1, 0) == 1);
  LinkDiagram neg = parse_pd("X[1,4,2,3] X[3,2,4,1]");
  CHECK(linking_number(neg, 0, 1) == -1);
  CHECK_THROWS_AS(linking_number(pos, 0, 0), DomainError);
  CHECK_THROWS_AS(linking_number(pos, 0, 2), DomainError);
  // Crossing-free circles link nothing.
  LinkDiagram with_loop = parse_pd("X[1,3,4,2] X[3,1,2,4] O");
  CHECK(linking_number(with_loop, 0, 2) == 0);
}

TEST_CASE("kauffman bracket anchors") {
  // Normalization: one circle contributes 1.
  CHECK(kauffman_bracket(parse_pd("")) == LaurentPoly::one("A"));
  CHECK(kauffman_bracket(parse_pd("O")) == LaurentPoly::one("A"));
  CHECK(kauffman_bracket(parse_pd("O O")) == tp({{-1, 2, 1}, {-1, -2, 1}}, "A"));
  CHECK(kauffman_bracket(parse_pd("X[1,1,2,2]")) == tp({{-1, 3, 1}}, "A"));
  CHECK(kauffman_bracket(parse_pd("X[1,2,2,1]")) == tp({{-1, -3, 1}}, "A"));
  // Hand-expanded state sums, frozen:
  CHECK(kauffman_bracket(parse_pd("X[1,4,2,3] X[3,2,4,1]")) == tp({{-1, 4, 1}, {-1, -4, 1}}, "A"));
  CHECK(kauffman_bracket(named_knot("trefoil")) == tp({{1, -7, 1}, {-1, -3, 1}, {-1, 5, 1}}, "A"));
}

TEST_CASE("jones polynomial anchors") {
  CHECK(jones(parse_pd("O")) == LaurentPoly::one());
  CHECK(jones(parse_pd("X[1,1,2,2]")) == LaurentPoly::one());
  CHECK(jones(parse_pd("X[1,3,4,2] X[3,1,2,4]")) == tp({{-1, 1, 2}, {-1, 5, 2}}));
  CHECK(jones(parse_pd("X[1,4,2,3] X[3,2,4,1]")) == tp({{-1, -5, 2}, {-1, -1, 2}}));
  CHECK(jones(named_knot("trefoil")) == tp({{1, 1, 1}, {1, 3, 1}, {-1, 4, 1}}));
  CHECK(jones(named_knot("fig8")) ==
        tp({{1, -2, 1}, {-1, -1, 1}, {1, 0, 1}, {-1, 1, 1}, {1, 2, 1}}));
  CHECK(jones(named_knot("5_1")) == tp({{1, 2, 1}, {1, 4, 1}, {-1, 5, 1}, {1, 6, 1}, {-1, 7, 1}}));
}

TEST_CASE("jones is insensitive to diagram labeling and free loops merge as unlinks") {
  LinkDiagram t1 = named_knot("trefoil");
  LinkDiagram t2 = parse_pd("X[11,23,44,12] X[23,35,46,44] X[35,11,12,46]");
  CHECK(jones(t1) == jones(t2));
  // Adding a split unknot multiplies by the unlink factor.
  LinkDiagram with_loop = parse_pd("X[1,3,4,2] X[3,5,6,4] X[5,1,2,6] O");
  CHECK(with_loop.free_loops() == 1);
  CHECK(jones(with_loop) == jones(t1) * tp({{-1, -1, 2}, {-1, 1, 2}}));
}

TEST_CASE("mirror image inverts the jones variable") {
  for (const auto& name : knot_names()) {
    LinkDiagram d = named_knot(name);
    CHECK(jones(mirror(d)) == jones(d).invert_variable());
  }
  CHECK(jones(mirror(named_knot("fig8"))) == jones(named_knot("fig8")));  // amphichiral
}

TEST_CASE("contraction bracket equals the brute-force state sum") {
  for (const auto& name : corpus_names()) {
    LinkDiagram d = corpus_germ(name).diagram;
    if (d.crossings().size() > 16) continue;
    CHECK(kauffman_bracket(d) == kauffman_bracket_bruteforce(d));
  }
  std::mt19937 rng(424243);
  for (int trial = 0; trial < 60; ++trial) {
    LinkDiagram d = random_braid_diagram(rng, 14);
    CHECK(kauffman_bracket(d) == kauffman_bracket_bruteforce(d));
  }
}

TEST_CASE("bracket refuses diagrams beyond its crossing budget") {
  LinkDiagram t = named_knot("trefoil");
  CHECK_THROWS_AS(kauffman_bracket(t, 2), DomainError);
  CHECK_THROWS_AS(kauffman_bracket_bruteforce(t, 2), DomainError);
}

TEST_CASE("invariant profile collects the comparison data") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  InvariantProfile p = invariant_profile(hopf);
  CHECK(p.component_count == 2);
  REQUIRE(p.component_jones.size() == 2);
  CHECK(p.component_jones[0] == LaurentPoly::one());
  CHECK(p.component_jones[1] == LaurentPoly::one());
  REQUIRE(p.pairwise_linking.size() == 1);
  CHECK(p.pairwise_linking[0] == 1);
  CHECK(p.whole_jones == tp({{-1, 1, 2}, {-1, 5, 2}}));
}

TEST_CASE("mirror profile matches the profile of the mirrored diagram") {
  for (const char* pd : {"X[1,3,4,2] X[3,1,2,4]", "X[1,3,4,2] X[3,5,6,4] X[5,1,2,6]"}) {
    LinkDiagram d = parse_pd(pd);
    InvariantProfile direct = invariant_profile(mirror(d));
    InvariantProfile derived = mirror_profile(invariant_profile(d));
    CHECK_FALSE(profile_difference(direct, derived).has_value());
  }
}

TEST_CASE("profile difference reports the first mismatching field") {
  LinkDiagram hopf = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  LinkDiagram unlink = parse_pd("O O");
  LinkDiagram trefoil_pair = disjoint_union(named_knot("trefoil"), parse_pd("O"));

  CHECK_FALSE(profile_difference(invariant_profile(hopf), invariant_profile(hopf)).has_value());

  auto diff = profile_difference(invariant_profile(hopf), invariant_profile(parse_pd("O")));
  REQUIRE(diff.has_value());
  CHECK(diff->invariant == "component count");

  auto diff2 = profile_difference(invariant_profile(unlink), invariant_profile(trefoil_pair));
  REQUIRE(diff2.has_value());
  CHECK(diff2->invariant == "per-component Jones multiset");

  auto diff3 = profile_difference(invariant_profile(hopf), invariant_profile(unlink));
  REQUIRE(diff3.has_value());
  CHECK(diff3->invariant == "pairwise linking numbers");
}

TEST_CASE("gauss integral reproduces reference linking numbers") {
  const double pi = std::acos(-1.0);
  auto circle = [&](double cx, int plane, int n) {
    std::vector<std::array<double, 3>> pts;
    for (int i = 0; i < n; ++i) {
      double t = 2 * pi * i / n;
      if (plane == 0)
        pts.push_back({cx + std::cos(t), std::sin(t), 0.0});
      else
        pts.push_back({cx + std::cos(t), 0.0, std::sin(t)});
    }
    return pts;
  };
  auto a = circle(0, 0, 180);
  auto b = circle(1, 1, 180);
  CHECK(std::abs(gauss_linking_integral(a, b) - 1.0) < 1e-3);
  // Reversing one curve negates the integral.
  auto br = b;
  std::reverse(br.begin(), br.end());
  CHECK(std::abs(gauss_linking_integral(a, br) + 1.0) < 1e-3);
  // Distant circles do not link.
  CHECK(std::abs(gauss_linking_integral(a, circle(10, 0, 90))) < 1e-3);
  // Two (1,2)-curves on the same torus link twice.
  std::vector<std::array<double, 3>> t1, t2;
  for (int i = 0; i < 360; ++i) {
    double u = 2 * pi * i / 360;
    for (int k = 0; k < 2; ++k) {
      double phase = 2 * u + (k ? pi : 0.0);
      double r = 2 + 0.5 * std::cos(phase);
      (k ? t2 : t1).push_back({r * std::cos(u), r * std::sin(u), 0.5 * std::sin(phase)});
    }
  }
  CHECK(std::abs(gauss_linking_integral(t1, t2) - 2.0) < 1e-3);
}

TEST_CASE("gauss integral guards against degenerate input") {
  std::vector<std::array<double, 3>> a{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(gauss_linking_integral(a, a), DomainError);
  std::vector<std::array<double, 3>> two{{0, 0, 0}, {1, 0, 0}};
  std::vector<std::array<double, 3>> far{{5, 5, 5}, {6, 5, 5}, {5, 6, 5}};
  CHECK_THROWS_AS(gauss_linking_integral(two, far), DomainError);
}
