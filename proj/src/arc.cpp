#include "lipknot/arc.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "lipknot/errors.hpp"

namespace lipknot {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected ") + what, pos);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer", start);
    return std::stoll(text.substr(start, pos - start));
  }
};

// exponent := integer | '(' integer '/' integer ')'
Rational parse_exponent(Cursor& c) {
  if (c.eat('(')) {
    std::int64_t p = c.integer();
    c.expect('/', "'/' in exponent");
    std::int64_t q = c.integer();
    c.expect(')', "')' closing exponent");
    return Rational(p, q);
  }
  return Rational(c.integer());
}

// coefficient := integer [ '/' integer ]   (only when followed by '*')
Rational parse_coefficient(Cursor& c) {
  std::int64_t p = c.integer();
  if (c.eat('/')) {
    std::int64_t q = c.integer();
    return Rational(p, q);
  }
  return Rational(p);
}

int coord_index(char name) {
  switch (name) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'w': return 3;
    default: return -1;
  }
}

// Parses one term series into coords[idx]; returns false if the series was the
// literal constant 0.
void parse_series(Cursor& c, std::map<Rational, Rational>& series, std::size_t assign_pos) {
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.eat('-')) {
      sign = -1;
    } else if (c.eat('+')) {
      sign = 1;
    } else if (!first) {
      break;  // no more terms
    }
    c.skip_ws();
    Rational coef(1);
    if (c.peek() != 't') {
      std::size_t term_pos = c.pos;
      coef = parse_coefficient(c);
      if (c.eat('*')) {
        // fallthrough to t^e
      } else if (coef == Rational(0) && first) {
        return;  // coordinate is identically zero
      } else {
        throw ParseError("constant term not allowed in arc (arcs pass through the origin)",
                         term_pos);
      }
    }
    c.expect('t', "'t' in term");
    Rational exp(1);
    if (c.eat('^')) exp = parse_exponent(c);
    if (!(exp > Rational(0)))
      throw ParseError("arc exponents must be positive, got " + exp.str(), assign_pos);
    Rational value = coef * Rational(sign);
    if (value != Rational(0)) {
      auto [it, inserted] = series.emplace(exp, value);
      if (!inserted) {
        it->second += value;
        if (it->second == Rational(0)) series.erase(it);
      }
    }
    first = false;
  }
}

}  // namespace

PuiseuxArc parse_puiseux_arc(const std::string& text) {
  PuiseuxArc arc;
  Cursor c{text};
  bool seen[4] = {false, false, false, false};
  std::optional<Rational> declared_truncation;
  bool any_assignment = false;

  while (!c.done()) {
    c.skip_ws();
    std::size_t pos = c.pos;
    char name = c.peek();
    if (name == 'O') {
      ++c.pos;
      c.expect('(', "'(' after O");
      c.expect('t', "'t' in truncation declaration");
      Rational e(1);
      if (c.eat('^')) e = parse_exponent(c);
      c.expect(')', "')' closing truncation declaration");
      if (!(e > Rational(0))) throw ParseError("truncation order must be positive", pos);
      declared_truncation = e;
    } else {
      int idx = coord_index(name);
      if (idx < 0) throw ParseError(std::string("unknown coordinate '") + name + "'", pos);
      ++c.pos;
      c.expect('=', "'=' after coordinate name");
      if (seen[idx]) throw ParseError("coordinate assigned twice", pos);
      seen[idx] = true;
      any_assignment = true;
      parse_series(c, arc.coords[static_cast<std::size_t>(idx)], pos);
    }
    if (!c.eat(';')) break;
  }
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  if (!any_assignment) throw ParseError("arc needs at least one coordinate assignment", 0);

  Rational max_exp(0);
  bool any_term = false;
  for (const auto& series : arc.coords)
    for (const auto& [e, coef] : series) {
      (void)coef;
      if (!any_term || e > max_exp) max_exp = e;
      any_term = true;
    }
  if (declared_truncation) {
    if (any_term && *declared_truncation < max_exp)
      throw ParseError("declared truncation is below the largest exponent present", 0);
    arc.truncation_order = *declared_truncation;
  } else {
    arc.truncation_order = (any_term ? max_exp : Rational(0)) + Rational(1);
  }
  arc.dimension = 4;
  return arc;
}

std::string PuiseuxArc::str() const {
  static const char* names = "xyzw";
  std::ostringstream out;
  bool first_coord = true;
  for (int i = 0; i < dimension; ++i) {
    const auto& series = coords[static_cast<std::size_t>(i)];
    if (series.empty()) continue;
    if (!first_coord) out << "; ";
    first_coord = false;
    out << names[i] << "=";
    bool first_term = true;
    for (const auto& [e, coef] : series) {
      if (!first_term && coef > Rational(0)) out << "+";
      if (coef == Rational(-1))
        out << "-";
      else if (coef != Rational(1))
        out << coef.str() << "*";
      out << "t";
      if (e != Rational(1)) {
        if (e.is_integer())
          out << "^" << e.str();
        else
          out << "^(" << e.str() << ")";
      }
      first_term = false;
    }
  }
  if (first_coord) out << "x=0";
  std::ostringstream trunc;
  if (truncation_order.is_integer())
    trunc << "; O(t^" << truncation_order.str() << ")";
  else
    trunc << "; O(t^(" << truncation_order.str() << "))";
  return out.str() + trunc.str();
}

std::string TangencyOrder::str() const {
  if (is_infinite())
    return std::string("infinite") +
           (truncation_limited ? " (up to truncation t^" + limit.str() + ")" : "");
  return value->str();
}

TangencyOrder tord(const PuiseuxArc& a, const PuiseuxArc& b) {
  if (a.dimension != b.dimension)
    throw DomainError("tangency order needs arcs of equal dimension (" +
                      std::to_string(a.dimension) + " vs " + std::to_string(b.dimension) + ")");
  Rational limit = a.truncation_order < b.truncation_order ? a.truncation_order
                                                           : b.truncation_order;
  std::optional<Rational> smallest;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.dimension); ++i) {
    std::map<Rational, Rational> diff = a.coords[i];
    for (const auto& [e, coef] : b.coords[i]) {
      auto [it, inserted] = diff.emplace(e, -coef);
      if (!inserted) {
        it->second -= coef;
        if (it->second == Rational(0)) diff.erase(it);
      }
    }
    for (const auto& [e, coef] : diff) {
      (void)coef;
      if (e > limit) break;
      if (!smallest || e < *smallest) smallest = e;
      break;  // map is exponent-sorted; first surviving term is the smallest
    }
  }
  TangencyOrder result;
  if (smallest) {
    result.value = *smallest;
  } else {
    result.truncation_limited = true;
    result.limit = limit;
  }
  return result;
}

std::array<PuiseuxArc, 4> bridge_corner_arcs(const Rational& q, const Rational& beta) {
  if (!(Rational(1) < beta && beta < q))
    throw DomainError("bridge exponents require 1 < beta < q, got beta=" + beta.str() +
                      ", q=" + q.str());
  auto make = [&](int s1, int s2) {
    PuiseuxArc arc;
    arc.dimension = 4;
    arc.coords[0][beta] = Rational(s1);
    arc.coords[1][q] = Rational(s2);
    arc.truncation_order = q + Rational(1);
    return arc;
  };
  // m, n, m', n' with sign patterns (+,+), (-,+), (-,-), (+,-).
  return {make(+1, +1), make(-1, +1), make(-1, -1), make(+1, -1)};
}

std::array<double, 4> sample_arc(const PuiseuxArc& arc, double t) {
  if (!(t > 0.0 && t <= 1.0))
    throw DomainError("sample parameter must satisfy 0 < t <= 1");
  std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < static_cast<std::size_t>(arc.dimension); ++i)
    for (const auto& [e, coef] : arc.coords[i])
      p[i] += coef.as_double() * std::pow(t, e.as_double());
  return p;
}

double sample_distance(const PuiseuxArc& a, const PuiseuxArc& b, double t) {
  if (a.dimension != b.dimension)
    throw DomainError("sample distance needs arcs of equal dimension");
  auto pa = sample_arc(a, t);
  auto pb = sample_arc(b, t);
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double d = pa[i] - pb[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace lipknot
