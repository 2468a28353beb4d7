#pragma once
// Arcs parameterized by fractional power series, their tangency order, and the
// four boundary arcs of a band with exponents (q, beta).
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lipknot/rational.hpp"

namespace lipknot {

// One curve germ t -> (x(t), y(t), z(t)[, w(t)]), each coordinate a finite sum
// of c * t^e terms with rational e > 0, truncated at truncation_order.
struct PuiseuxArc {
  int dimension = 4;  // 3 or 4
  // Per coordinate: sorted map exponent -> nonzero coefficient.
  std::array<std::map<Rational, Rational>, 4> coords;
  Rational truncation_order = Rational(0);

  std::string str() const;
};

// Tangency order of two arcs: the smallest exponent at which they differ, or
// infinity when they agree up to the usable truncation.
struct TangencyOrder {
  std::optional<Rational> value;  // empty => infinite
  bool truncation_limited = false;
  Rational limit = Rational(0);  // usable truncation when infinite

  bool is_infinite() const { return !value.has_value(); }
  std::string str() const;
};

// Grammar: semicolon-separated assignments "<coord>=<terms>" with coord in
// {x,y,z,w}; terms are sums of [+-][c[*]]t^e with e a positive integer or
// (p/q); "0" alone is the zero coordinate; an optional trailing O(t^e) sets
// the truncation order explicitly.
PuiseuxArc parse_puiseux_arc(const std::string& text);

TangencyOrder tord(const PuiseuxArc& a, const PuiseuxArc& b);

// The four boundary arcs of the band with exponents (q, beta), 1 < beta < q:
// x = s1 * t^beta, y = s2 * t^q, z = w = 0 over sign choices s1, s2.
// Order: m = (+,+), n = (-,+), m' = (-,-), n' = (+,-).
std::array<PuiseuxArc, 4> bridge_corner_arcs(const Rational& q, const Rational& beta);

// Euclidean position of the arc at parameter t, 0 < t <= 1.
std::array<double, 4> sample_arc(const PuiseuxArc& arc, double t);

// Euclidean distance between two sampled arcs at parameter t.
double sample_distance(const PuiseuxArc& a, const PuiseuxArc& b, double t);

}  // namespace lipknot
