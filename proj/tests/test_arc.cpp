// Puiseux arc parsing, tangency orders, and the band corner arcs.
#include <cmath>
#include <random>

#include "doctest.h"
#include "lipknot/arc.hpp"

using lipknot::bridge_corner_arcs;
using lipknot::parse_puiseux_arc;
using lipknot::PuiseuxArc;
using lipknot::Rational;
using lipknot::sample_arc;
using lipknot::sample_distance;
using lipknot::TangencyOrder;
using lipknot::tord;

TEST_CASE("arc parsing transcribes terms exactly") {
  PuiseuxArc a = parse_puiseux_arc("x=t^2; y=t^3; z=0; w=0");
  CHECK(a.dimension == 4);
  CHECK(a.coords[0].size() == 1);
  CHECK(a.coords[0].at(Rational(2)) == Rational(1));
  CHECK(a.coords[1].at(Rational(3)) == Rational(1));
  CHECK(a.coords[2].empty());
  CHECK(a.coords[3].empty());
  CHECK(a.truncation_order == Rational(4));  // max exponent + 1

  PuiseuxArc b = parse_puiseux_arc("x=-t^(3/2)");
  CHECK(b.coords[0].at(Rational(3, 2)) == Rational(-1));

  PuiseuxArc c = parse_puiseux_arc("y=2*t - 3/2*t^(5/2)");
  CHECK(c.coords[1].at(Rational(1)) == Rational(2));
  CHECK(c.coords[1].at(Rational(5, 2)) == Rational(-3, 2));
}

TEST_CASE("arc parsing rejects bad input") {
  CHECK_THROWS_AS(parse_puiseux_arc("x=t^0"), lipknot::ParseError);
  CHECK_THROWS_AS(parse_puiseux_arc("x=t^-2"), lipknot::ParseError);
  CHECK_THROWS_AS(parse_puiseux_arc("u=t"), lipknot::ParseError);
  CHECK_THROWS_AS(parse_puiseux_arc("x=1+t"), lipknot::ParseError);
  CHECK_THROWS_AS(parse_puiseux_arc(""), lipknot::ParseError);
  CHECK_THROWS_AS(parse_puiseux_arc("x=t; x=t^2"), lipknot::ParseError);
  CHECK_THROWS_AS(parse_puiseux_arc("x=t^3; O(t^2)"), lipknot::ParseError);
}

TEST_CASE("declared truncation overrides the default") {
  PuiseuxArc a = parse_puiseux_arc("x=t^2; O(t^7)");
  CHECK(a.truncation_order == Rational(7));
}

TEST_CASE("string round trip") {
  PuiseuxArc a = parse_puiseux_arc("x=t^2-t^(5/2); y=3*t^3");
  PuiseuxArc b = parse_puiseux_arc(a.str());
  CHECK(a.coords == b.coords);
  CHECK(a.truncation_order == b.truncation_order);
}

TEST_CASE("tangency order picks the leading difference exponent") {
  PuiseuxArc a = parse_puiseux_arc("x=t^2; y=t^3");
  PuiseuxArc b = parse_puiseux_arc("x=-t^2; y=t^3");
  TangencyOrder t1 = tord(a, b);
  REQUIRE_FALSE(t1.is_infinite());
  CHECK(*t1.value == Rational(2));

  PuiseuxArc c = parse_puiseux_arc("x=t; y=t^(3/2)");
  PuiseuxArc d = parse_puiseux_arc("x=t; y=-t^(3/2)");
  CHECK(*tord(c, d).value == Rational(3, 2));
}

TEST_CASE("identical arcs report an infinite, truncation-limited order") {
  PuiseuxArc a = parse_puiseux_arc("x=t^2; y=t^3");
  TangencyOrder t = tord(a, a);
  CHECK(t.is_infinite());
  CHECK(t.truncation_limited);
  CHECK(t.limit == Rational(4));
}

TEST_CASE("tangency order is symmetric and ultrametric") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), coef(-3, 3);
  auto random_arc = [&] {
    PuiseuxArc arc;
    arc.dimension = 4;
    for (int i = 0; i < 4; ++i)
      for (int terms = 0; terms < 2; ++terms) {
        Rational e(num(rng), den(rng));
        int c = coef(rng);
        if (c != 0) arc.coords[static_cast<std::size_t>(i)][e] = Rational(c);
      }
    arc.truncation_order = Rational(100);
    return arc;
  };
  auto key = [](const TangencyOrder& t) {
    return t.is_infinite() ? Rational(1000000) : *t.value;
  };
  for (int trial = 0; trial < 200; ++trial) {
    PuiseuxArc a = random_arc(), b = random_arc(), c = random_arc();
    CHECK(key(tord(a, b)) == key(tord(b, a)));
    CHECK(key(tord(a, c)) >= std::min(key(tord(a, b)), key(tord(b, c))));
  }
}

TEST_CASE("dimension mismatch is rejected") {
  PuiseuxArc a = parse_puiseux_arc("x=t");
  PuiseuxArc b = a;
  b.dimension = 3;
  CHECK_THROWS_AS(tord(a, b), lipknot::DomainError);
}

TEST_CASE("corner arcs of a (3,2) band meet at the expected pairwise orders") {
  auto arcs = bridge_corner_arcs(Rational(3), Rational(2));
  // Sign patterns in x: +, -, -, +; in y: +, +, -, -.
  int beta_pairs = 0, q_pairs = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Rational v = *tord(arcs[static_cast<std::size_t>(i)], arcs[static_cast<std::size_t>(j)]).value;
      const bool x_differs =
          arcs[static_cast<std::size_t>(i)].coords[0] != arcs[static_cast<std::size_t>(j)].coords[0];
      if (x_differs) {
        CHECK(v == Rational(2));  // beta
        ++beta_pairs;
      } else {
        CHECK(v == Rational(3));  // q
        ++q_pairs;
      }
    }
  CHECK(beta_pairs == 4);
  CHECK(q_pairs == 2);
}

TEST_CASE("corner arcs require 1 < beta < q") {
  CHECK_THROWS_AS(bridge_corner_arcs(Rational(3), Rational(1)), lipknot::DomainError);
  CHECK_THROWS_AS(bridge_corner_arcs(Rational(2), Rational(3)), lipknot::DomainError);
  CHECK_THROWS_AS(bridge_corner_arcs(Rational(2), Rational(2)), lipknot::DomainError);
}

TEST_CASE("sample_arc evaluates the series") {
  PuiseuxArc a = parse_puiseux_arc("x=t^2; y=t^3");
  auto p1 = sample_arc(a, 1.0);
  CHECK(p1[0] == doctest::Approx(1.0));
  CHECK(p1[1] == doctest::Approx(1.0));
  auto p2 = sample_arc(a, 0.5);
  CHECK(p2[0] == doctest::Approx(0.25));
  CHECK(p2[1] == doctest::Approx(0.125));
  CHECK_THROWS_AS(sample_arc(a, 0.0), lipknot::DomainError);
  CHECK_THROWS_AS(sample_arc(a, 1.5), lipknot::DomainError);
}

TEST_CASE("log-log distance slope approximates the tangency order") {
  std::mt19937 rng(613);
  std::uniform_int_distribution<int> num(2, 7), den(1, 3), coef(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    PuiseuxArc a, b;
    // Common low-order part plus a controlled first difference.
    Rational shared(num(rng), den(rng));
    Rational differ = shared + Rational(num(rng), den(rng));
    a.coords[0][shared] = Rational(coef(rng));
    b.coords[0][shared] = a.coords[0][shared];
    a.coords[1][differ] = Rational(coef(rng));
    b.coords[1][differ] = a.coords[1][differ] + Rational(coef(rng));
    a.truncation_order = b.truncation_order = differ + Rational(1);
    const double expected = (*tord(a, b).value).as_double();
    const double t1 = 1e-4, t2 = 1e-2;
    const double slope = (std::log(sample_distance(a, b, t2)) - std::log(sample_distance(a, b, t1))) /
                         (std::log(t2) - std::log(t1));
    CHECK(slope == doctest::Approx(expected).epsilon(0.05));
  }
}
