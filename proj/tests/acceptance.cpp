// Acceptance suite: nine end-to-end checks, one pass/fail line each.
// Exit code = number of failed checks.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lipknot/arc.hpp"
#include "lipknot/certifier.hpp"
#include "lipknot/corpus.hpp"
#include "lipknot/diagram.hpp"
#include "lipknot/germ.hpp"
#include "lipknot/invariants.hpp"
#include "lipknot/random_gen.hpp"
#include "lipknot/reidemeister.hpp"

using namespace lipknot;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string poly_set(const std::vector<LaurentPoly>& polys) {
  std::vector<std::string> strs;
  for (const auto& p : polys) strs.push_back(p.str());
  std::sort(strs.begin(), strs.end());
  std::string out = "{";
  for (std::size_t i = 0; i < strs.size(); ++i) out += (i ? "; " : "") + strs[i];
  return out + "}";
}

// --- 1: the bridged pair whose cones agree but whose broken links differ ---
void check_bridged_pair() {
  Certificate c = certify(corpus_germ("ex3.X"), corpus_germ("ex3.Y"));
  expect(c.verdicts.size() == 2, "expected two verdicts");
  expect(c.verdicts[0].method == "sampaio" && c.verdicts[0].kind == VerdictKind::Inconclusive,
         "tangent-cone comparison should be inconclusive");
  const Verdict& vb = c.verdicts[1];
  expect(vb.method == "bridge_break" && vb.kind == VerdictKind::Distinguished,
         "bridge breaking should distinguish the pair");
  expect(vb.witness.has_value(), "missing witness");
  expect(vb.witness->invariant == "pairwise linking numbers",
         "witness should be the pairwise linking numbers, got " + vb.witness->invariant);
  expect(vb.witness->left == "{0}", "left linking should be {0}, got " + vb.witness->left);
  expect(vb.witness->right == "{1}" || vb.witness->right == "{-1}",
         "right linking should be {+-1}, got " + vb.witness->right);
}

// --- 2: the pinched pair separated by tangent-cone Jones multisets ---
void check_pinched_pair() {
  Verdict v = sampaio_test(corpus_germ("ex2.X1"), corpus_germ("ex2.X2"));
  expect(v.kind == VerdictKind::Distinguished, "tangent cones should differ");
  expect(v.witness.has_value(), "missing witness");
  expect(v.witness->invariant == "tangent-cone Jones multiset",
         "witness should be the Jones multiset, got " + v.witness->invariant);
  std::string jt = jones(named_knot("trefoil")).str();
  std::string both = "{" + jt + "; " + jt + "}";
  std::string mixed = "{" + LaurentPoly::one().str() + "; " + jt + "}";
  expect(v.witness->left == both, "left cone should be two trefoils, got " + v.witness->left);
  expect(v.witness->right == mixed,
         "right cone should be a trefoil and an unknot, got " + v.witness->right);
}

// --- 3: every twist count is its own class; broken linking equals the index ---
void check_twist_family() {
  for (int k = 0; k <= 5; ++k) {
    Germ broken = break_bridge(corpus_germ("twist." + std::to_string(k)), "b1", Rational(4));
    InvariantProfile p = invariant_profile(broken.diagram);
    expect(p.component_count == 2, "broken germ should have two components");
    expect(p.pairwise_linking.size() == 1 && std::abs(p.pairwise_linking[0]) == k,
           "twist." + std::to_string(k) + " should break to |lk| = " + std::to_string(k) +
               ", got " + std::to_string(p.pairwise_linking.empty() ? 0 : p.pairwise_linking[0]));
  }
  for (int i = 0; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      Certificate c = certify(corpus_germ("twist." + std::to_string(i)),
                              corpus_germ("twist." + std::to_string(j)));
      expect(c.overall == VerdictKind::Distinguished,
             "twist." + std::to_string(i) + " vs twist." + std::to_string(j) +
                 " should be distinguished");
    }
}

// --- 4: trivial links whose tangent cones double a chosen knot ---
void check_universal_family() {
  for (const std::string name : {"trefoil", "fig8", "5_1"}) {
    Germ g = corpus_germ("universal." + name);
    expect(total_components(g.diagram) == 1, name + ": link should be one circle");
    expect(jones(g.diagram) == LaurentPoly::one(), name + ": link Jones should be 1");
    PinchedLink cone = tangent_cone(g);
    expect(cone.circles.size() == 2, name + ": cone should have two circles");
    std::string want = poly_set({jones(named_knot(name)), jones(named_knot(name))});
    std::string got = poly_set({jones(cone.circles[0]), jones(cone.circles[1])});
    expect(got == want, name + ": cone Jones should be " + want + ", got " + got);
  }
  Certificate c = certify(corpus_germ("universal.trefoil"), corpus_germ("universal.fig8"));
  expect(c.overall == VerdictKind::Distinguished,
         "universal trefoil vs fig8 should be distinguished");
}

// --- 5: contraction bracket against the 2^n state sum ---
void check_bracket_oracle() {
  for (const auto& name : corpus_names()) {
    LinkDiagram d = corpus_germ(name).diagram;
    expect(static_cast<int>(d.crossings().size()) <= 20,
           name + ": diagram too large for the state-sum oracle");
    expect(kauffman_bracket(d) == kauffman_bracket_bruteforce(d, 20),
           name + ": bracket algorithms disagree");
  }
  for (const auto& name : knot_names()) {
    LinkDiagram d = named_knot(name);
    expect(kauffman_bracket(d) == kauffman_bracket_bruteforce(d),
           std::string(name) + ": bracket algorithms disagree");
  }
  std::mt19937 rng(20260823u);
  for (int i = 0; i < 100; ++i) {
    LinkDiagram d = random_braid_diagram(rng, 14);
    expect(kauffman_bracket(d) == kauffman_bracket_bruteforce(d),
           "random diagram " + std::to_string(i) + ": bracket algorithms disagree");
  }
}

// --- 6: profiles survive random stabilizations; kinks scale the bracket ---
void check_invariance_suite() {
  std::mt19937 rng(77230111u);
  for (int i = 0; i < 200; ++i) {
    LinkDiagram d = random_braid_diagram(rng, 8);
    InvariantProfile before = invariant_profile(d, 64);
    for (int m = 0; m < 10; ++m) random_stabilization(d, rng);
    InvariantProfile after = invariant_profile(d, 64);
    auto diff = profile_difference(before, after);
    expect(!diff, "diagram " + std::to_string(i) + ": " + (diff ? diff->invariant : "") +
                      " changed under stabilization");

    if (i % 20 != 0) continue;
    LaurentPoly base = kauffman_bracket(d, 64);
    for (int sign : {+1, -1}) {
      ReidemeisterLocation loc;
      if (d.crossings().empty()) {
        loc.on_free_loop = true;
      } else {
        loc.edge = d.crossings().front().e[0];
      }
      loc.sign = sign;
      LinkDiagram kinked = reidemeister(d, "R1+", loc);
      expect(kauffman_bracket(kinked, 64) == base * LaurentPoly::term(-1, Rational(3 * sign), "A"),
             "kink should scale the bracket by (-A)^(3*" + std::to_string(sign) + ")");
    }
  }
}

// --- 7: numeric Gauss integrals against diagram linking numbers ---
void check_gauss_oracle() {
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
  // Interlocked circles against the two-crossing clasp diagram.
  double hopf = gauss_linking_integral(circle(0, 0, 180), circle(1, 1, 180));
  auto hopf_diagram = parse_pd("X[1,3,4,2] X[3,1,2,4]");
  expect(std::abs(hopf - static_cast<double>(linking_number(hopf_diagram, 0, 1))) < 1e-3,
         "interlocked circles: integral " + std::to_string(hopf) + " vs diagram 1");
  // Far-apart circles against the crossingless two-circle diagram.
  double far = gauss_linking_integral(circle(0, 0, 180), circle(10, 0, 90));
  auto unlink = parse_pd("O O");
  expect(std::abs(far - static_cast<double>(linking_number(unlink, 0, 1))) < 1e-3,
         "distant circles: integral " + std::to_string(far) + " vs diagram 0");
  // Two (1,2)-curves on one torus against the four-crossing braid closure.
  std::vector<std::array<double, 3>> t1, t2;
  for (int i = 0; i < 360; ++i) {
    double u = 2 * pi * i / 360;
    for (int k = 0; k < 2; ++k) {
      double phase = 2 * u + (k ? pi : 0.0);
      double r = 2 + 0.5 * std::cos(phase);
      (k ? t2 : t1).push_back({r * std::cos(u), r * std::sin(u), 0.5 * std::sin(phase)});
    }
  }
  double torus = gauss_linking_integral(t1, t2);
  auto braid = parse_braid("braid 2: s1 s1 s1 s1");
  expect(std::abs(torus - static_cast<double>(linking_number(braid, 0, 1))) < 1e-3,
         "torus curves: integral " + std::to_string(torus) + " vs diagram 2");
}

// --- 8: a germ never separates from itself or its mirror image ---
void check_soundness_guards() {
  for (const auto& name : corpus_names()) {
    Germ g = corpus_germ(name);
    expect(certify(g, g).overall == VerdictKind::Inconclusive,
           name + " vs itself should be inconclusive");
    expect(certify(g, mirror_germ(g)).overall == VerdictKind::Inconclusive,
           name + " vs its mirror should be inconclusive");
  }
}

// --- 9: corner-arc tangency orders, symbolic and numeric ---
void check_tangency_orders() {
  const Rational q(3), beta(2);
  auto arcs = bridge_corner_arcs(q, beta);
  std::vector<Rational> values;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      TangencyOrder t = tord(arcs[i], arcs[j]);
      expect(!t.is_infinite(), "corner arcs must separate at finite order");
      values.push_back(*t.value);
      pairs.push_back({i, j});
    }
  std::vector<Rational> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const std::vector<Rational> want{beta, beta, beta, beta, q, q};
  expect(sorted == want, "tangency orders should be {2,2,2,2,3,3}");

  // Least-squares slope of log(distance) vs log(t) over two decades.
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 9;
    for (int k = 0; k < n; ++k) {
      double t = std::pow(10.0, -2.0 - 2.0 * k / (n - 1));
      double x = std::log(t);
      double y = std::log(sample_distance(arcs[pairs[p].first], arcs[pairs[p].second], t));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double tau = static_cast<double>(values[p].num()) / static_cast<double>(values[p].den());
    expect(std::abs(slope - tau) / tau <= 0.05,
           "slope " + std::to_string(slope) + " should approximate " + std::to_string(tau));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {"bridged pair: cones agree, breaking distinguishes", check_bridged_pair},
      {"pinched pair: tangent-cone Jones multisets differ", check_pinched_pair},
      {"twist family pairwise distinguished, broken linking = index", check_twist_family},
      {"universal germs: trivial link, doubled-knot tangent cone", check_universal_family},
      {"contraction bracket equals brute-force state sum", check_bracket_oracle},
      {"profiles survive random Reidemeister insertions", check_invariance_suite},
      {"Gauss integrals match diagram linking numbers", check_gauss_oracle},
      {"self and mirror comparisons stay inconclusive", check_soundness_guards},
      {"corner-arc tangency orders, symbolic and numeric", check_tangency_orders},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
      ++failed;
    }
    std::printf("[%s] %zu. %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title);
    if (!ok) std::printf("       %s\n", detail.c_str());
  }
  if (failed == 0)
    std::printf("all %zu checks passed\n", criteria.size());
  else
    std::printf("%d of %zu checks failed\n", failed, criteria.size());
  return failed;
}
