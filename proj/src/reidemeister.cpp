#include "lipknot/reidemeister.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

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

void replace_at(std::vector<Crossing>& xs, CrossSlot at, int label) {
  xs[static_cast<std::size_t>(at.crossing)].e[static_cast<std::size_t>(at.slot)] = label;
}

LinkDiagram add_kink(const LinkDiagram& d, const ReidemeisterLocation& loc) {
  if (loc.on_free_loop) {
    if (d.free_loops() < 1) throw DomainError("no crossing-free circle to kink");
    auto xs = d.crossings();
    const int k = d.max_label() + 1;
    const int m = d.max_label() + 2;
    if (loc.sign > 0)
      xs.push_back(Crossing{{k, k, m, m}});
    else
      xs.push_back(Crossing{{k, m, m, k}});
    return LinkDiagram::make(std::move(xs), d.free_loops() - 1);
  }
  auto a = analyze(d);
  auto it = a.edges.find(loc.edge);
  if (it == a.edges.end()) throw DomainError("kink target edge does not exist");
  auto xs = d.crossings();
  const int e = loc.edge;
  const int m = d.max_label() + 1;
  const int k = d.max_label() + 2;
  if (loc.sign > 0 && loc.side == 0)
    xs.push_back(Crossing{{e, m, k, k}});
  else if (loc.sign < 0 && loc.side == 0)
    xs.push_back(Crossing{{e, k, k, m}});
  else if (loc.sign > 0)
    xs.push_back(Crossing{{k, k, m, e}});
  else
    xs.push_back(Crossing{{k, e, m, k}});
  replace_at(xs, it->second.head, m);
  return LinkDiagram::make(std::move(xs), d.free_loops());
}

// Shared tail of R1- and R2-: drop the listed crossings and reconnect each
// (in, out) strand pair, turning fully consumed strands into free circles.
LinkDiagram drop_and_reconnect(const LinkDiagram& d, const std::set<int>& dropped,
                               const std::vector<std::pair<int, int>>& reconnect) {
  UnionFind uf;
  for (const auto& [in, out] : reconnect) {
    uf.find(in);
    uf.unite(out, in);
  }
  std::map<int, int> smallest;
  for (const auto& [node, p] : uf.parent) {
    (void)p;
    const int r = uf.find(node);
    auto it = smallest.find(r);
    if (it == smallest.end() || node < it->second) smallest[r] = node;
  }
  std::vector<Crossing> xs;
  std::set<int> surviving_roots;
  for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
    if (dropped.count(c)) continue;
    Crossing y = d.crossings()[static_cast<std::size_t>(c)];
    for (auto& l : y.e)
      if (uf.parent.count(l)) {
        surviving_roots.insert(uf.find(l));
        l = smallest.at(uf.find(l));
      }
    xs.push_back(y);
  }
  int loops = d.free_loops();
  std::set<int> all_roots;
  for (const auto& [node, p] : uf.parent) {
    (void)p;
    all_roots.insert(uf.find(node));
  }
  for (int r : all_roots)
    if (!surviving_roots.count(r)) ++loops;
  return LinkDiagram::make(std::move(xs), loops);
}

LinkDiagram remove_kink(const LinkDiagram& d, const ReidemeisterLocation& loc) {
  const int c = loc.crossing;
  if (c < 0 || c >= static_cast<int>(d.crossings().size()))
    throw DomainError("crossing index out of range");
  const auto& e = d.crossings()[static_cast<std::size_t>(c)].e;
  int in = -1, out = -1;
  if (e[0] == e[1]) {
    in = e[3];
    out = e[2];
  } else if (e[1] == e[2]) {
    in = e[0];
    out = e[3];
  } else if (e[2] == e[3]) {
    in = e[0];
    out = e[1];
  } else if (e[3] == e[0]) {
    in = e[1];
    out = e[2];
  } else {
    throw DomainError("crossing is not a removable kink");
  }
  return drop_and_reconnect(d, {c}, {{in, out}});
}

LinkDiagram push_strand(const LinkDiagram& d, const ReidemeisterLocation& loc) {
  auto a = analyze(d);
  const int e = loc.over_edge, f = loc.under_edge;
  if (e == f) throw DomainError("pushing a strand over itself needs two distinct edges");
  if (a.edges.find(e) == a.edges.end() || a.edges.find(f) == a.edges.end())
    throw DomainError("push target edge does not exist");
  if (loc.face < 0 || loc.face >= static_cast<int>(a.faces.size()))
    throw DomainError("face id out of range");
  int ne = 0, nf = 0;
  bool fe = false, ff = false;
  for (const auto& dart : a.faces[static_cast<std::size_t>(loc.face)]) {
    const int l = d.crossings()[static_cast<std::size_t>(dart.crossing)].e[static_cast<std::size_t>(dart.slot)];
    const bool fwd = a.edges.at(l).tail == dart;
    if (l == e) {
      ++ne;
      fe = fwd;
    } else if (l == f) {
      ++nf;
      ff = fwd;
    }
  }
  if (ne != 1 || nf != 1)
    throw DomainError("both strands must border the chosen face exactly once");

  // The finger leaves e, crosses f twice inside the face, and returns; it runs
  // e, o1, o2 and is the over strand at both new crossings, while f is cut into
  // f, u1, u2.  The boundary senses of the two edges fix the wiring: with equal
  // senses the finger reaches f's exit crossing first, with opposite senses the
  // entry crossing, and the finger's chirality follows the sense of e.
  auto xs = d.crossings();
  const int o1 = d.max_label() + 1;
  const int o2 = d.max_label() + 2;
  const int u1 = d.max_label() + 3;
  const int u2 = d.max_label() + 4;
  if (fe && !ff) {
    xs.push_back(Crossing{{f, o1, u1, e}});
    xs.push_back(Crossing{{u1, o1, u2, o2}});
  } else if (!fe && ff) {
    xs.push_back(Crossing{{f, e, u1, o1}});
    xs.push_back(Crossing{{u1, o2, u2, o1}});
  } else if (fe && ff) {
    xs.push_back(Crossing{{f, o2, u1, o1}});
    xs.push_back(Crossing{{u1, e, u2, o1}});
  } else {
    xs.push_back(Crossing{{f, o1, u1, o2}});
    xs.push_back(Crossing{{u1, o1, u2, e}});
  }
  replace_at(xs, a.edges.at(e).head, o2);
  replace_at(xs, a.edges.at(f).head, u2);
  return LinkDiagram::make(std::move(xs), d.free_loops());
}

LinkDiagram pull_strand(const LinkDiagram& d, const ReidemeisterLocation& loc) {
  auto a = analyze(d);
  if (loc.face < 0 || loc.face >= static_cast<int>(a.faces.size()))
    throw DomainError("face id out of range");
  const auto& darts = a.faces[static_cast<std::size_t>(loc.face)];
  if (darts.size() != 2) throw DomainError("face is not a bigon");
  const int c1 = darts[0].crossing, c2 = darts[1].crossing;
  if (c1 == c2) throw DomainError("bigon touches only one crossing; nothing to pull apart");
  const int x = d.crossings()[static_cast<std::size_t>(darts[0].crossing)].e[static_cast<std::size_t>(darts[0].slot)];
  const int y = d.crossings()[static_cast<std::size_t>(darts[1].crossing)].e[static_cast<std::size_t>(darts[1].slot)];
  if (x == y) throw DomainError("bigon has a repeated side; nothing to pull apart");

  auto passage_is_over = [&](int edge, int at) {
    const EdgeInfo& info = a.edges.at(edge);
    const CrossSlot end = (info.head.crossing == at) ? info.head : info.tail;
    return end.slot == 1 || end.slot == 3;
  };
  const bool x_over_1 = passage_is_over(x, c1), x_over_2 = passage_is_over(x, c2);
  const bool y_over_1 = passage_is_over(y, c1), y_over_2 = passage_is_over(y, c2);
  if (!((x_over_1 && x_over_2 && !y_over_1 && !y_over_2) ||
        (!x_over_1 && !x_over_2 && y_over_1 && y_over_2)))
    throw DomainError("the bigon strands interleave; the poke cannot be pulled out");

  auto strand_ends = [&](int mid) {
    const EdgeInfo& info = a.edges.at(mid);
    const auto& et = d.crossings()[static_cast<std::size_t>(info.tail.crossing)].e;
    const auto& eh = d.crossings()[static_cast<std::size_t>(info.head.crossing)].e;
    const int in = (info.tail.slot == 2)
                       ? et[0]
                       : et[static_cast<std::size_t>(d.over_in_slot(info.tail.crossing))];
    const int out = (info.head.slot == 0)
                        ? eh[2]
                        : eh[static_cast<std::size_t>(d.over_out_slot(info.head.crossing))];
    return std::pair<int, int>{in, out};
  };
  auto [xin, xout] = strand_ends(x);
  auto [yin, yout] = strand_ends(y);
  return drop_and_reconnect(d, {c1, c2}, {{xin, xout}, {yin, yout}});
}

LinkDiagram slide_strand(const LinkDiagram& d, const ReidemeisterLocation& loc) {
  auto a = analyze(d);
  if (loc.face < 0 || loc.face >= static_cast<int>(a.faces.size()))
    throw DomainError("face id out of range");
  const auto& darts = a.faces[static_cast<std::size_t>(loc.face)];
  if (darts.size() != 3) throw DomainError("face is not a triangle");
  std::set<int> corner_set;
  std::vector<int> sides;
  for (const auto& dart : darts) {
    corner_set.insert(dart.crossing);
    sides.push_back(d.crossings()[static_cast<std::size_t>(dart.crossing)].e[static_cast<std::size_t>(dart.slot)]);
  }
  if (corner_set.size() != 3 || std::set<int>(sides.begin(), sides.end()).size() != 3)
    throw DomainError("triangle is degenerate; the slide needs three distinct crossings and sides");

  // Strand k runs in_k -> first crossing -> mid (triangle side) -> second
  // crossing -> out_k; the slide swaps each strand's crossing order.
  struct Strand {
    int mid, in, out, first, second;
  };
  std::vector<Strand> strands;
  for (int k = 0; k < 3; ++k) {
    const int mid = sides[static_cast<std::size_t>(k)];
    const EdgeInfo& info = a.edges.at(mid);
    const auto& et = d.crossings()[static_cast<std::size_t>(info.tail.crossing)].e;
    const auto& eh = d.crossings()[static_cast<std::size_t>(info.head.crossing)].e;
    Strand s;
    s.mid = mid;
    s.first = info.tail.crossing;
    s.second = info.head.crossing;
    s.in = (info.tail.slot == 2) ? et[0]
                                 : et[static_cast<std::size_t>(d.over_in_slot(info.tail.crossing))];
    s.out = (info.head.slot == 0)
                ? eh[2]
                : eh[static_cast<std::size_t>(d.over_out_slot(info.head.crossing))];
    strands.push_back(s);
  }

  // At each corner, one side edge rides the under passage and one the over.
  std::map<int, std::pair<int, int>> corner;  // crossing -> (under strand, over strand)
  for (int c : corner_set) {
    int under = -1, over = -1;
    for (int k = 0; k < 3; ++k) {
      const EdgeInfo& info = a.edges.at(strands[static_cast<std::size_t>(k)].mid);
      for (const CrossSlot end : {info.tail, info.head}) {
        if (end.crossing != c) continue;
        if (end.slot == 0 || end.slot == 2)
          under = k;
        else
          over = k;
      }
    }
    if (under < 0 || over < 0) throw DomainError("triangle is degenerate");
    corner[c] = {under, over};
  }

  // The slide needs a top strand: over-relations must form a total order.
  std::array<int, 3> wins{0, 0, 0};
  for (const auto& [c, uo] : corner) {
    (void)c;
    wins[static_cast<std::size_t>(uo.second)] += 1;
  }
  if (std::count(wins.begin(), wins.end(), 2) != 1 || std::count(wins.begin(), wins.end(), 0) != 1)
    throw DomainError("the triangle strands have no consistent top strand; the slide is blocked");

  auto xs = d.crossings();
  for (const auto& [c, uo] : corner) {
    const Strand& u = strands[static_cast<std::size_t>(uo.first)];
    const Strand& o = strands[static_cast<std::size_t>(uo.second)];
    // After the slide every strand meets its two crossings in swapped order.
    const int u_in = (c == u.second) ? u.in : u.mid;
    const int u_out = (c == u.second) ? u.mid : u.out;
    const int o_in = (c == o.second) ? o.in : o.mid;
    const int o_out = (c == o.second) ? o.mid : o.out;
    Crossing y;
    y.e[0] = u_in;
    y.e[2] = u_out;
    if (d.crossing_sign(c) > 0) {
      y.e[3] = o_in;
      y.e[1] = o_out;
    } else {
      y.e[1] = o_in;
      y.e[3] = o_out;
    }
    xs[static_cast<std::size_t>(c)] = y;
  }
  return LinkDiagram::make(std::move(xs), d.free_loops());
}

}  // namespace

LinkDiagram reidemeister(const LinkDiagram& d, const std::string& move,
                         const ReidemeisterLocation& loc) {
  if (move == "R1+") return add_kink(d, loc);
  if (move == "R1-") return remove_kink(d, loc);
  if (move == "R2+") return push_strand(d, loc);
  if (move == "R2-") return pull_strand(d, loc);
  if (move == "R3") return slide_strand(d, loc);
  throw DomainError("unknown move '" + move + "' (expected R1+, R1-, R2+, R2- or R3)");
}

}  // namespace lipknot
