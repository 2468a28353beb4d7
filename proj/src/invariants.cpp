#include "lipknot/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace lipknot {

namespace {

struct UnionFind {
  std::map<int, int> parent;

  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int root = find(it->second);
    parent[x] = root;
    return root;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

LaurentPoly delta() {
  return LaurentPoly::term(-1, Rational(2), "A") + LaurentPoly::term(-1, Rational(-2), "A");
}

LaurentPoly poly_pow(const LaurentPoly& p, int k) {
  LaurentPoly out = LaurentPoly::one(p.var());
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

}  // namespace

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) w += d.crossing_sign(c);
  return w;
}

std::int64_t linking_number(const LinkDiagram& d, int ci, int cj) {
  auto a = analyze(d);
  const int edge_comps = static_cast<int>(a.components.size());
  const int total = edge_comps + d.free_loops();
  if (ci < 0 || ci >= total || cj < 0 || cj >= total) throw DomainError("component index out of range");
  if (ci == cj) throw DomainError("linking number needs two distinct components");
  if (ci >= edge_comps || cj >= edge_comps) return 0;
  std::int64_t sum = 0;
  for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
    const auto& e = d.crossings()[static_cast<std::size_t>(c)].e;
    const int under = a.component_of[e[0]];
    const int over = a.component_of[e[static_cast<std::size_t>(d.over_in_slot(c))]];
    if ((under == ci && over == cj) || (under == cj && over == ci)) sum += d.crossing_sign(c);
  }
  if (sum % 2 != 0) throw Error("signed crossing count between components is odd");
  return sum / 2;
}

LaurentPoly kauffman_bracket_bruteforce(const LinkDiagram& d, int max_crossings) {
  const auto& xs = d.crossings();
  const int n = static_cast<int>(xs.size());
  if (n > max_crossings)
    throw DomainError("diagram has " + std::to_string(n) + " crossings; the state-sum limit is " +
                      std::to_string(max_crossings));
  const LaurentPoly del = delta();
  if (n == 0) return d.free_loops() == 0 ? LaurentPoly::one("A") : poly_pow(del, d.free_loops() - 1);

  LaurentPoly total = LaurentPoly::zero("A");
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    UnionFind uf;
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& e = xs[static_cast<std::size_t>(c)].e;
      for (int l : e) uf.find(l);
      if ((state >> c) & 1U) {
        uf.unite(e[0], e[3]);  // B-smoothing
        uf.unite(e[1], e[2]);
      } else {
        uf.unite(e[0], e[1]);  // A-smoothing
        uf.unite(e[2], e[3]);
        ++a_count;
      }
    }
    std::set<int> roots;
    for (const auto& [node, p] : uf.parent) {
      (void)p;
      roots.insert(uf.find(node));
    }
    const int loops = static_cast<int>(roots.size()) + d.free_loops();
    const int b_count = n - a_count;
    total += LaurentPoly::term(1, Rational(a_count - b_count), "A") * poly_pow(del, loops - 1);
  }
  return total;
}

LaurentPoly kauffman_bracket(const LinkDiagram& d, int max_crossings) {
  const auto& xs = d.crossings();
  const int n = static_cast<int>(xs.size());
  if (n > max_crossings)
    throw DomainError("diagram has " + std::to_string(n) + " crossings; the contraction limit is " +
                      std::to_string(max_crossings));
  const LaurentPoly del = delta();
  if (n == 0) return d.free_loops() == 0 ? LaurentPoly::one("A") : poly_pow(del, d.free_loops() - 1);

  // Where each edge label occurs (two crossing indices, equal for loop edges).
  std::map<int, std::vector<int>> label_at;
  for (int c = 0; c < n; ++c)
    for (int l : xs[static_cast<std::size_t>(c)].e) label_at[l].push_back(c);

  // Process crossings in a frontier-greedy order: always contract the crossing
  // with the most already-open edge ends, which keeps the pairing states small.
  std::vector<int> order;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::map<int, int> seen_ends;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_open = -1;
    for (int c = 0; c < n; ++c) {
      if (done[static_cast<std::size_t>(c)]) continue;
      int open_here = 0;
      for (int l : xs[static_cast<std::size_t>(c)].e) {
        auto it = seen_ends.find(l);
        if (it != seen_ends.end() && it->second == 1) ++open_here;
      }
      if (open_here > best_open) {
        best_open = open_here;
        best = c;
      }
    }
    order.push_back(best);
    done[static_cast<std::size_t>(best)] = 1;
    for (int l : xs[static_cast<std::size_t>(best)].e) seen_ends[l] += 1;
  }

  // State: perfect pairing of open edges (flattened sorted pairs) -> weight.
  std::map<std::vector<int>, LaurentPoly> states;
  states[{}] = LaurentPoly::one("A");
  std::set<int> open;

  for (int c : order) {
    const auto& e = xs[static_cast<std::size_t>(c)].e;
    std::set<int> self_edges, consumed, opened;
    for (int s = 0; s < 4; ++s) {
      const int l = e[static_cast<std::size_t>(s)];
      if (label_at[l][0] == c && label_at[l][1] == c)
        self_edges.insert(l);
      else if (open.count(l))
        consumed.insert(l);
      else
        opened.insert(l);
    }
    std::set<int> open_next = open;
    for (int l : consumed) open_next.erase(l);
    for (int l : opened) open_next.insert(l);

    std::map<std::vector<int>, LaurentPoly> next;
    for (const auto& [key, weight] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        UnionFind uf;
        for (std::size_t i = 0; i + 1 < key.size(); i += 2) uf.unite(key[i], key[i + 1]);
        for (int l : self_edges) {
          std::vector<int> slots;
          for (int s = 0; s < 4; ++s)
            if (e[static_cast<std::size_t>(s)] == l) slots.push_back(s);
          uf.unite(-(slots[0] + 1), -(slots[1] + 1));
        }
        for (int s = 0; s < 4; ++s) {
          const int l = e[static_cast<std::size_t>(s)];
          if (!self_edges.count(l)) uf.unite(-(s + 1), l);
        }
        if (smoothing == 0) {
          uf.unite(-1, -2);
          uf.unite(-3, -4);
        } else {
          uf.unite(-1, -4);
          uf.unite(-2, -3);
        }

        std::map<int, std::vector<int>> classes;
        for (const auto& [node, p] : uf.parent) {
          (void)p;
          const int root = uf.find(node);
          classes.try_emplace(root);
          if (node > 0 && open_next.count(node)) classes[root].push_back(node);
        }
        int loops = 0;
        std::vector<std::pair<int, int>> pairs;
        for (auto& [root, live] : classes) {
          (void)root;
          if (live.empty()) {
            ++loops;
          } else if (live.size() == 2) {
            std::sort(live.begin(), live.end());
            pairs.emplace_back(live[0], live[1]);
          } else {
            throw Error("strand contraction produced a class with " + std::to_string(live.size()) +
                        " open ends");
          }
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> new_key;
        for (const auto& [x, y] : pairs) {
          new_key.push_back(x);
          new_key.push_back(y);
        }
        LaurentPoly w = weight * LaurentPoly::term(1, Rational(smoothing == 0 ? 1 : -1), "A") *
                        poly_pow(del, loops);
        auto it = next.find(new_key);
        if (it == next.end())
          next[new_key] = w;
        else
          it->second += w;
      }
    }
    states = std::move(next);
    open = std::move(open_next);
  }

  if (states.size() != 1 || !states.count(std::vector<int>{}))
    throw Error("strand contraction finished with open strands");
  return (states[{}] * poly_pow(del, d.free_loops())).divide_exact(del);
}

LaurentPoly jones(const LinkDiagram& d, int max_crossings) {
  const int w = writhe(d);
  LaurentPoly b = kauffman_bracket(d, max_crossings);
  // (-A)^(-3w) = (-1)^w * A^(-3w)
  LaurentPoly f = b * LaurentPoly::term((w % 2 == 0) ? 1 : -1, Rational(-3 * w), "A");
  return f.substitute_power("t", Rational(-1, 4));
}

namespace {

using V3 = std::array<double, 3>;

V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
V3 unit(const V3& a) {
  const double n = std::sqrt(dot(a, a));
  if (n < 1e-12) return {0.0, 0.0, 0.0};
  return {a[0] / n, a[1] / n, a[2] / n};
}
double clamp1(double x) { return std::max(-1.0, std::min(1.0, x)); }

double segment_distance(const V3& p1, const V3& q1, const V3& p2, const V3& q2) {
  const V3 d1 = sub(q1, p1), d2 = sub(q2, p2), r = sub(p1, p2);
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  double s = 0.0, t = 0.0;
  if (a <= 1e-15 && e <= 1e-15) {
    // both segments degenerate
  } else if (a <= 1e-15) {
    t = std::max(0.0, std::min(1.0, f / e));
  } else {
    const double c = dot(d1, r);
    if (e <= 1e-15) {
      s = std::max(0.0, std::min(1.0, -c / a));
    } else {
      const double b = dot(d1, d2), denom = a * e - b * b;
      if (denom > 1e-15) s = std::max(0.0, std::min(1.0, (b * f - c * e) / denom));
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::max(0.0, std::min(1.0, -c / a));
      } else if (t > 1.0) {
        t = 1.0;
        s = std::max(0.0, std::min(1.0, (b - c) / a));
      }
    }
  }
  const V3 c1 = {p1[0] + d1[0] * s, p1[1] + d1[1] * s, p1[2] + d1[2] * s};
  const V3 c2 = {p2[0] + d2[0] * t, p2[1] + d2[1] * t, p2[2] + d2[2] * t};
  const V3 diff = sub(c1, c2);
  return std::sqrt(dot(diff, diff));
}

}  // namespace

double gauss_linking_integral(const std::vector<std::array<double, 3>>& a,
                              const std::vector<std::array<double, 3>>& b, double min_sep) {
  if (a.size() < 3 || b.size() < 3)
    throw DomainError("each closed curve needs at least three points");
  const std::size_t n = a.size(), m = b.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const V3& p1 = a[i];
    const V3& p2 = a[(i + 1) % n];
    for (std::size_t j = 0; j < m; ++j) {
      const V3& p3 = b[j];
      const V3& p4 = b[(j + 1) % m];
      if (segment_distance(p1, p2, p3, p4) < min_sep)
        throw DomainError("curves touch or cross within the separation tolerance");
      const V3 r13 = sub(p3, p1), r14 = sub(p4, p1), r23 = sub(p3, p2), r24 = sub(p4, p2);
      const V3 n1 = unit(cross(r13, r14));
      const V3 n2 = unit(cross(r14, r24));
      const V3 n3 = unit(cross(r24, r23));
      const V3 n4 = unit(cross(r23, r13));
      const double omega = std::asin(clamp1(dot(n1, n2))) + std::asin(clamp1(dot(n2, n3))) +
                           std::asin(clamp1(dot(n3, n4))) + std::asin(clamp1(dot(n4, n1)));
      const double sgn = dot(cross(sub(p2, p1), sub(p4, p3)), r13) >= 0.0 ? 1.0 : -1.0;
      total += omega * sgn;
    }
  }
  return total / (4.0 * std::acos(-1.0));
}

std::string InvariantProfile::str() const {
  std::ostringstream os;
  os << "components=" << component_count << "; jones{";
  for (std::size_t i = 0; i < component_jones.size(); ++i) {
    if (i) os << "; ";
    os << component_jones[i].str();
  }
  os << "}; lk{";
  for (std::size_t i = 0; i < pairwise_linking.size(); ++i) {
    if (i) os << ", ";
    os << pairwise_linking[i];
  }
  os << "}; whole=" << whole_jones.str();
  return os.str();
}

InvariantProfile invariant_profile(const LinkDiagram& d, int max_crossings) {
  InvariantProfile p;
  auto a = analyze(d);
  const int edge_comps = static_cast<int>(a.components.size());
  const int total = edge_comps + d.free_loops();
  p.component_count = total;
  for (int c = 0; c < total; ++c) {
    if (c < edge_comps)
      p.component_jones.push_back(jones(extract_component(d, c), max_crossings));
    else
      p.component_jones.push_back(LaurentPoly::one("t"));
  }
  std::sort(p.component_jones.begin(), p.component_jones.end(),
            [](const LaurentPoly& x, const LaurentPoly& y) { return x.str() < y.str(); });
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j) p.pairwise_linking.push_back(linking_number(d, i, j));
  std::sort(p.pairwise_linking.begin(), p.pairwise_linking.end());
  p.whole_jones = jones(d, max_crossings);
  return p;
}

InvariantProfile mirror_profile(const InvariantProfile& p) {
  InvariantProfile m;
  m.component_count = p.component_count;
  for (const auto& j : p.component_jones) m.component_jones.push_back(j.invert_variable());
  std::sort(m.component_jones.begin(), m.component_jones.end(),
            [](const LaurentPoly& x, const LaurentPoly& y) { return x.str() < y.str(); });
  for (auto v : p.pairwise_linking) m.pairwise_linking.push_back(-v);
  std::sort(m.pairwise_linking.begin(), m.pairwise_linking.end());
  m.whole_jones = p.whole_jones.invert_variable();
  return m;
}

namespace {

std::string jones_multiset_repr(const std::vector<LaurentPoly>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << "; ";
    os << v[i].str();
  }
  os << '}';
  return os.str();
}

std::string linking_multiset_repr(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

std::optional<ProfileDifference> profile_difference(const InvariantProfile& a,
                                                    const InvariantProfile& b) {
  if (a.component_count != b.component_count)
    return ProfileDifference{"component count", std::to_string(a.component_count),
                             std::to_string(b.component_count)};
  if (a.component_jones.size() != b.component_jones.size() ||
      !std::equal(a.component_jones.begin(), a.component_jones.end(), b.component_jones.begin()))
    return ProfileDifference{"per-component Jones multiset", jones_multiset_repr(a.component_jones),
                             jones_multiset_repr(b.component_jones)};
  if (a.pairwise_linking != b.pairwise_linking)
    return ProfileDifference{"pairwise linking numbers", linking_multiset_repr(a.pairwise_linking),
                             linking_multiset_repr(b.pairwise_linking)};
  if (a.whole_jones != b.whole_jones)
    return ProfileDifference{"whole-link Jones", a.whole_jones.str(), b.whole_jones.str()};
  return std::nullopt;
}

}  // namespace lipknot
