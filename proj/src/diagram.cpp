// Implementation of PD-code diagrams: validation, orientation resolution,
// face combinatorics, parsing/serialization, and splicing operations.
#include "lipknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace lipknot {

namespace {

// Union-find over sparse integer keys; canonical representative of a class is
// resolved to its smallest member by label_map().
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

  std::map<int, int> label_map() {
    std::map<int, int> smallest;
    for (auto& [k, v] : parent) {
      (void)v;
      int r = find(k);
      auto it = smallest.find(r);
      if (it == smallest.end() || k < it->second) smallest[r] = k;
    }
    std::map<int, int> out;
    for (auto& [k, v] : parent) {
      (void)v;
      out[k] = smallest[find(k)];
    }
    return out;
  }
};

std::map<int, std::vector<CrossSlot>> occurrences(const std::vector<Crossing>& xs) {
  std::map<int, std::vector<CrossSlot>> occ;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[xs[static_cast<std::size_t>(c)].e[static_cast<std::size_t>(s)]].push_back(CrossSlot{c, s});
  return occ;
}

int label_at(const std::vector<Crossing>& xs, CrossSlot d) {
  return xs[static_cast<std::size_t>(d.crossing)].e[static_cast<std::size_t>(d.slot)];
}

CrossSlot other_end(const std::map<int, std::vector<CrossSlot>>& occ, const std::vector<Crossing>& xs,
                    CrossSlot d) {
  const auto& v = occ.at(label_at(xs, d));
  return (v[0] == d) ? v[1] : v[0];
}

// Face orbits of the map: next dart = rotate(other end of current edge).
std::vector<std::vector<CrossSlot>> trace_faces(const std::vector<Crossing>& xs,
                                                const std::map<int, std::vector<CrossSlot>>& occ) {
  std::set<CrossSlot> visited;
  std::vector<std::vector<CrossSlot>> faces;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    for (int s = 0; s < 4; ++s) {
      CrossSlot start{c, s};
      if (visited.count(start)) continue;
      std::vector<CrossSlot> orbit;
      CrossSlot d = start;
      do {
        orbit.push_back(d);
        visited.insert(d);
        CrossSlot a = other_end(occ, xs, d);
        d = CrossSlot{a.crossing, (a.slot + 1) % 4};
      } while (!(d == start));
      faces.push_back(orbit);
    }
  }
  return faces;
}

}  // namespace

LinkDiagram LinkDiagram::make(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) throw ValidationError("free loop count cannot be negative");
  for (const auto& x : crossings)
    for (int s = 0; s < 4; ++s)
      if (x.e[static_cast<std::size_t>(s)] < 1)
        throw ValidationError("edge labels must be positive integers");
  auto occ = occurrences(crossings);
  for (const auto& [l, v] : occ)
    if (v.size() != 2)
      throw ValidationError("edge label " + std::to_string(l) + " must appear exactly twice (found " +
                            std::to_string(v.size()) + ")");

  const int n = static_cast<int>(crossings.size());
  std::vector<std::array<int, 4>> role(static_cast<std::size_t>(n), {0, 0, 0, 0});  // +1 head, -1 tail
  std::vector<int> over_in(static_cast<std::size_t>(n), 0);
  std::vector<std::tuple<int, int, int>> work;
  auto push = [&work](int c, int s, int r) { work.emplace_back(c, s, r); };
  auto drain = [&]() {
    while (!work.empty()) {
      auto [c, s, r] = work.back();
      work.pop_back();
      int& cur = role[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
      if (cur == r) continue;
      if (cur != 0) throw ValidationError("PD code has no consistent strand orientation");
      cur = r;
      if (s == 1 || s == 3) {
        const int oi = (r == +1) ? s : 4 - s;
        int& slot = over_in[static_cast<std::size_t>(c)];
        if (slot == 0)
          slot = oi;
        else if (slot != oi)
          throw ValidationError("PD code has no consistent strand orientation");
        push(c, 4 - s, -r);
      }
      CrossSlot partner = other_end(occ, crossings, CrossSlot{c, s});
      push(partner.crossing, partner.slot, -r);
    }
  };
  for (int c = 0; c < n; ++c) {
    push(c, 0, +1);
    push(c, 2, -1);
  }
  drain();
  // Components touching no under-strand slot are orientation-free; give them a
  // deterministic default.
  for (int c = 0; c < n; ++c)
    if (over_in[static_cast<std::size_t>(c)] == 0) {
      push(c, 3, +1);
      drain();
    }

  // Sphere-planarity: every connected piece must satisfy V - E + F = 2.
  UnionFind pieces;
  for (int c = 0; c < n; ++c) pieces.find(c);
  for (const auto& [l, v] : occ) {
    (void)l;
    pieces.unite(v[0].crossing, v[1].crossing);
  }
  std::map<int, std::array<long, 3>> vef;  // root -> {V, E, F}
  for (int c = 0; c < n; ++c) vef[pieces.find(c)][0] += 1;
  for (const auto& [l, v] : occ) {
    (void)l;
    vef[pieces.find(v[0].crossing)][1] += 1;
  }
  for (const auto& f : trace_faces(crossings, occ)) vef[pieces.find(f[0].crossing)][2] += 1;
  for (const auto& [root, counts] : vef) {
    (void)root;
    if (counts[0] - counts[1] + counts[2] != 2)
      throw ValidationError("PD code is not planar");
  }

  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.over_in_ = std::move(over_in);
  d.free_loops_ = free_loops;
  return d;
}

int LinkDiagram::max_label() const {
  int m = 0;
  for (const auto& x : crossings_)
    for (int l : x.e) m = std::max(m, l);
  return m;
}

DiagramAnalysis analyze(const LinkDiagram& d) {
  DiagramAnalysis a;
  const auto& xs = d.crossings();
  auto occ = occurrences(xs);
  for (const auto& [l, v] : occ) {
    EdgeInfo info;
    for (const auto& cs : v) {
      const bool is_head = (cs.slot == 0) || (cs.slot != 2 && cs.slot == d.over_in_slot(cs.crossing));
      if (is_head)
        info.head = cs;
      else
        info.tail = cs;
    }
    a.edges[l] = info;
  }
  std::set<int> seen;
  for (const auto& [l, info] : a.edges) {
    (void)info;
    if (seen.count(l)) continue;
    std::vector<int> cyc;
    int e = l;
    do {
      cyc.push_back(e);
      seen.insert(e);
      const CrossSlot h = a.edges[e].head;
      if (h.slot == 0)
        e = xs[static_cast<std::size_t>(h.crossing)].e[2];
      else
        e = xs[static_cast<std::size_t>(h.crossing)].e[static_cast<std::size_t>(d.over_out_slot(h.crossing))];
    } while (e != l);
    for (int x : cyc) a.component_of[x] = static_cast<int>(a.components.size());
    a.components.push_back(std::move(cyc));
  }
  a.faces = trace_faces(xs, occ);
  return a;
}

int total_components(const LinkDiagram& d) {
  return static_cast<int>(analyze(d).components.size()) + d.free_loops();
}

std::vector<std::vector<std::pair<int, bool>>> face_edge_incidences(const LinkDiagram& d,
                                                                    const DiagramAnalysis& a) {
  std::vector<std::vector<std::pair<int, bool>>> out;
  for (const auto& face : a.faces) {
    std::vector<std::pair<int, bool>> inc;
    for (const auto& dart : face) {
      const int l = label_at(d.crossings(), dart);
      inc.emplace_back(l, a.edges.at(l).tail == dart);
    }
    out.push_back(std::move(inc));
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= text.size();
  }
  char peek() {
    skip_ws();
    return i < text.size() ? text[i] : '\0';
  }
  void expect(char ch) {
    skip_ws();
    if (i >= text.size() || text[i] != ch)
      throw ParseError(std::string("expected '") + ch + "'", static_cast<long>(i));
    ++i;
  }
  bool accept(char ch) {
    skip_ws();
    if (i < text.size() && text[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected an integer", static_cast<long>(start));
    const long long v = std::stoll(text.substr(start, i - start));
    if (v > 1000000000LL || v < -1000000000LL)
      throw ParseError("integer out of range", static_cast<long>(start));
    return static_cast<int>(v);
  }
};

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  Cursor c{text};
  std::vector<Crossing> xs;
  int loops = 0;
  while (!c.done()) {
    const char ch = c.peek();
    if (ch == 'X') {
      ++c.i;
      c.expect('[');
      Crossing x;
      for (int s = 0; s < 4; ++s) {
        if (s > 0) c.expect(',');
        x.e[static_cast<std::size_t>(s)] = c.integer();
      }
      c.expect(']');
      xs.push_back(x);
    } else if (ch == 'O') {
      ++c.i;
      ++loops;
    } else {
      throw ParseError("expected 'X[a,b,c,d]' or 'O'", static_cast<long>(c.i));
    }
    c.accept(',');
  }
  return LinkDiagram::make(std::move(xs), loops);
}

LinkDiagram parse_braid(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  const std::string kw = "braid";
  if (text.compare(c.i, kw.size(), kw) != 0)
    throw ParseError("expected 'braid <strands>: <word>'", static_cast<long>(c.i));
  c.i += kw.size();
  const int n = c.integer();
  if (n < 1) throw ParseError("braid needs at least one strand", static_cast<long>(c.i));
  c.expect(':');

  std::vector<Crossing> xs;
  std::vector<int> cur(static_cast<std::size_t>(n) + 1), init(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) cur[static_cast<std::size_t>(j)] = init[static_cast<std::size_t>(j)] = j;
  int next_label = n + 1;

  auto emit = [&](int i, bool positive) {
    const int u = cur[static_cast<std::size_t>(i)];
    const int v = cur[static_cast<std::size_t>(i) + 1];
    const int p = next_label++;
    const int q = next_label++;
    if (positive) {
      xs.push_back(Crossing{{u, p, q, v}});
      cur[static_cast<std::size_t>(i)] = p;
      cur[static_cast<std::size_t>(i) + 1] = q;
    } else {
      xs.push_back(Crossing{{v, u, q, p}});
      cur[static_cast<std::size_t>(i)] = q;
      cur[static_cast<std::size_t>(i) + 1] = p;
    }
  };

  while (!c.done()) {
    if (c.accept(',')) continue;
    c.expect('s');
    const std::size_t at = c.i;
    const int gen = c.integer();
    if (gen < 1 || gen >= n)
      throw ParseError("braid generator s" + std::to_string(gen) + " needs at least " +
                           std::to_string(gen + 1) + " strands",
                       static_cast<long>(at));
    int power = 1;
    if (c.accept('^')) {
      power = c.integer();
      if (power == 0) throw ParseError("braid generator exponent cannot be zero", static_cast<long>(c.i));
    }
    for (int r = 0; r < std::abs(power); ++r) emit(gen, power > 0);
  }

  int loops = 0;
  for (int j = 1; j <= n; ++j) {
    const int from = cur[static_cast<std::size_t>(j)];
    const int to = init[static_cast<std::size_t>(j)];
    if (from == to) {
      ++loops;
      continue;
    }
    for (auto& x : xs)
      for (auto& l : x.e)
        if (l == from) l = to;
  }
  return LinkDiagram::make(std::move(xs), loops);
}

std::string to_pd_string(const LinkDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << x.e[0] << ',' << x.e[1] << ',' << x.e[2] << ',' << x.e[3] << ']';
  }
  for (int k = 0; k < d.free_loops(); ++k) {
    if (!first) os << ' ';
    first = false;
    os << 'O';
  }
  return os.str();
}

LinkDiagram canonicalized(const LinkDiagram& d) {
  auto a = analyze(d);
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& comp : a.components)
    for (int e : comp) relabel[e] = next++;
  auto xs = d.crossings();
  for (auto& x : xs)
    for (auto& l : x.e) l = relabel.at(l);
  std::sort(xs.begin(), xs.end(), [](const Crossing& p, const Crossing& q) { return p.e[0] < q.e[0]; });
  return LinkDiagram::make(std::move(xs), d.free_loops());
}

std::string canonical_pd(const LinkDiagram& d) { return to_pd_string(canonicalized(d)); }

bool same_diagram(const LinkDiagram& a, const LinkDiagram& b) {
  return canonical_pd(a) == canonical_pd(b);
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
    const auto& e = d.crossings()[static_cast<std::size_t>(c)].e;
    // Re-anchor the tuple at the old over-in slot: the over-strand becomes the
    // under-strand of the switched crossing.
    if (d.crossing_sign(c) > 0)
      xs.push_back(Crossing{{e[3], e[0], e[1], e[2]}});
    else
      xs.push_back(Crossing{{e[1], e[2], e[3], e[0]}});
  }
  return LinkDiagram::make(std::move(xs), d.free_loops());
}

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  auto a = analyze(d);
  const int edge_comps = static_cast<int>(a.components.size());
  if (comp < 0 || comp >= edge_comps + d.free_loops())
    throw DomainError("component index out of range");
  if (comp >= edge_comps) return d;  // crossing-free circle: reversal is a no-op
  std::set<int> s(a.components[static_cast<std::size_t>(comp)].begin(),
                  a.components[static_cast<std::size_t>(comp)].end());
  bool has_under = false;
  for (int e : s)
    if (a.edges[e].head.slot == 0) has_under = true;
  if (!has_under)
    throw DomainError("component passes over every crossing; its reversal is not representable");
  auto xs = d.crossings();
  for (auto& x : xs)
    if (s.count(x.e[0])) {
      // The under-strand reverses: the tuple re-anchors at the old under-out.
      x = Crossing{{x.e[2], x.e[3], x.e[0], x.e[1]}};
    }
  return LinkDiagram::make(std::move(xs), d.free_loops());
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  const int offset = a.max_label();
  auto xs = a.crossings();
  for (const auto& x : b.crossings()) {
    Crossing y = x;
    for (auto& l : y.e) l += offset;
    xs.push_back(y);
  }
  return LinkDiagram::make(std::move(xs), a.free_loops() + b.free_loops());
}

SpliceResult connected_sum(const LinkDiagram& a, int ca, const LinkDiagram& b, int cb,
                           std::optional<int> edge_a, std::optional<int> edge_b) {
  auto aa = analyze(a);
  auto ab = analyze(b);
  const int na = static_cast<int>(aa.components.size());
  const int nb = static_cast<int>(ab.components.size());
  if (ca < 0 || ca >= na + a.free_loops() || cb < 0 || cb >= nb + b.free_loops())
    throw DomainError("component index out of range");
  const bool free_a = ca >= na;
  const bool free_b = cb >= nb;

  if (free_a || free_b) {
    // Summing with a crossing-free circle glues nothing: drop the circle(s)
    // and keep one merged copy.
    const int offset = a.max_label();
    auto xs = a.crossings();
    for (const auto& x : b.crossings()) {
      Crossing y = x;
      for (auto& l : y.e) l += offset;
      xs.push_back(y);
    }
    int loops = a.free_loops() + b.free_loops();
    if (free_a && free_b)
      loops -= 1;
    else
      loops -= 1;  // exactly one crossing-free circle is consumed by the sum
    return SpliceResult{LinkDiagram::make(std::move(xs), loops), -1, -1};
  }

  const int ea = edge_a.value_or(aa.components[static_cast<std::size_t>(ca)][0]);
  const int eb = edge_b.value_or(ab.components[static_cast<std::size_t>(cb)][0]);
  if (aa.component_of.find(ea) == aa.component_of.end() || aa.component_of[ea] != ca)
    throw DomainError("splice edge is not on the chosen component");
  if (ab.component_of.find(eb) == ab.component_of.end() || ab.component_of[eb] != cb)
    throw DomainError("splice edge is not on the chosen component");

  const int offset = a.max_label();
  auto xs = a.crossings();
  const int base = static_cast<int>(xs.size());
  for (const auto& x : b.crossings()) {
    Crossing y = x;
    for (auto& l : y.e) l += offset;
    xs.push_back(y);
  }
  const int ebp = eb + offset;
  const CrossSlot ha = aa.edges[ea].head;
  const CrossSlot hb{ab.edges[eb].head.crossing + base, ab.edges[eb].head.slot};
  xs[static_cast<std::size_t>(ha.crossing)].e[static_cast<std::size_t>(ha.slot)] = ebp;
  xs[static_cast<std::size_t>(hb.crossing)].e[static_cast<std::size_t>(hb.slot)] = ea;
  return SpliceResult{LinkDiagram::make(std::move(xs), a.free_loops() + b.free_loops()), ea, ebp};
}

namespace {

LinkDiagram smooth_keeping(const LinkDiagram& d, const std::set<int>& kept) {
  const auto& xs = d.crossings();
  UnionFind uf;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    const auto& e = xs[static_cast<std::size_t>(c)].e;
    for (int l : e) uf.find(l);
    if (kept.count(c)) continue;
    uf.unite(e[0], e[2]);
    uf.unite(e[static_cast<std::size_t>(d.over_in_slot(c))], e[static_cast<std::size_t>(d.over_out_slot(c))]);
  }
  auto labels = uf.label_map();
  std::vector<Crossing> out;
  for (int c : kept) {
    Crossing y = xs[static_cast<std::size_t>(c)];
    for (auto& l : y.e) l = labels.at(l);
    out.push_back(y);
  }
  return LinkDiagram::make(std::move(out), out.empty() ? 1 : 0);
}

}  // namespace

LinkDiagram extract_component(const LinkDiagram& d, int comp) {
  auto a = analyze(d);
  const int n = static_cast<int>(a.components.size());
  if (comp < 0 || comp >= n + d.free_loops()) throw DomainError("component index out of range");
  if (comp >= n) return LinkDiagram::make({}, 1);
  std::set<int> kept;
  const auto& xs = d.crossings();
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    const auto& e = xs[static_cast<std::size_t>(c)].e;
    if (a.component_of[e[0]] == comp &&
        a.component_of[e[static_cast<std::size_t>(d.over_in_slot(c))]] == comp)
      kept.insert(c);
  }
  return smooth_keeping(d, kept);
}

bool anti_parallel_on_face(const LinkDiagram& d, const DiagramAnalysis& a, int e1, int e2, int face) {
  if (face < 0 || face >= static_cast<int>(a.faces.size())) throw DomainError("face id out of range");
  const auto& darts = a.faces[static_cast<std::size_t>(face)];
  int n1 = 0, n2 = 0;
  bool f1 = false, f2 = false;
  for (const auto& dart : darts) {
    const int l = label_at(d.crossings(), dart);
    const bool fwd = a.edges.at(l).tail == dart;
    if (l == e1) {
      ++n1;
      f1 = fwd;
    } else if (l == e2) {
      ++n2;
      f2 = fwd;
    }
  }
  if (n1 != 1 || n2 != 1) return false;
  // Equal boundary-traversal senses mean the two strands run through the face
  // in opposite directions.
  return f1 == f2;
}

std::optional<int> find_band_face(const LinkDiagram& d, const DiagramAnalysis& a, int e1, int e2) {
  for (int f = 0; f < static_cast<int>(a.faces.size()); ++f)
    if (anti_parallel_on_face(d, a, e1, e2, f)) return f;
  return std::nullopt;
}

LinkDiagram band_smooth(const LinkDiagram& d, int e1, int e2, int face) {
  auto a = analyze(d);
  if (e1 == e2) throw DomainError("band smoothing needs two distinct edges");
  if (a.edges.find(e1) == a.edges.end() || a.edges.find(e2) == a.edges.end())
    throw DomainError("band smoothing edge does not exist");
  if (!anti_parallel_on_face(d, a, e1, e2, face))
    throw DomainError("band smoothing requires anti-parallel strands bordering the chosen face");
  auto xs = d.crossings();
  const CrossSlot h1 = a.edges[e1].head;
  const CrossSlot h2 = a.edges[e2].head;
  xs[static_cast<std::size_t>(h1.crossing)].e[static_cast<std::size_t>(h1.slot)] = e2;
  xs[static_cast<std::size_t>(h2.crossing)].e[static_cast<std::size_t>(h2.slot)] = e1;
  auto out = LinkDiagram::make(std::move(xs), d.free_loops());
  const int before = total_components(d);
  const int after = total_components(out);
  if (after != before + 1 && after != before - 1)
    throw Error("band smoothing changed the component count by " + std::to_string(after - before));
  return out;
}

}  // namespace lipknot
