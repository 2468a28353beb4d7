#include "lipknot/germ.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lipknot/reidemeister.hpp"

namespace lipknot {

namespace {

void relocate_sites(const LinkDiagram& d, std::vector<BridgeSite>& sites) {
  auto a = analyze(d);
  for (auto& s : sites) {
    auto face = find_band_face(d, a, s.edges[0], s.edges[1]);
    if (!face)
      throw ValidationError("bridge site '" + s.id + "' no longer spans a face after the operation");
    s.face = *face;
  }
}

std::string diagram_detail(const LinkDiagram& d) { return to_pd_string(d); }

}  // namespace

void validate_germ(const Germ& g) {
  if (g.dimension != 4) throw DomainError("unsupported dimension " + std::to_string(g.dimension));
  auto a = analyze(g.diagram);
  std::set<std::string> ids;
  std::set<int> decorated;
  auto claim_edge = [&](int e, const std::string& what) {
    if (a.edges.find(e) == a.edges.end())
      throw ValidationError(what + " refers to missing edge " + std::to_string(e));
    if (!decorated.insert(e).second)
      throw ValidationError("edge " + std::to_string(e) + " carries more than one decoration");
  };
  for (const auto& s : g.bridges) {
    if (s.id.empty()) throw ValidationError("bridge site has an empty id");
    if (!ids.insert(s.id).second) throw ValidationError("duplicate bridge site id '" + s.id + "'");
    if (s.edges[0] == s.edges[1])
      throw ValidationError("bridge site '" + s.id + "' joins an edge to itself");
    claim_edge(s.edges[0], "bridge site '" + s.id + "'");
    claim_edge(s.edges[1], "bridge site '" + s.id + "'");
    if (!(Rational(1) < s.beta && s.beta < s.q))
      throw ValidationError("bridge site '" + s.id + "' needs exponents 1 < beta < q");
    if (!anti_parallel_on_face(g.diagram, a, s.edges[0], s.edges[1], s.face))
      throw ValidationError("bridge site '" + s.id +
                            "' does not span anti-parallel strands of its face");
  }
  for (const auto& p : g.pinches) {
    if (p.markers[0] == p.markers[1])
      throw ValidationError("pinch pair identifies an edge with itself");
    claim_edge(p.markers[0], "pinch pair");
    claim_edge(p.markers[1], "pinch pair");
    if (!(Rational(1) < p.tangency))
      throw ValidationError("pinch tangency exponent must exceed 1");
  }
}

Germ make_germ(std::string label, LinkDiagram d, std::vector<BridgeSite> bridges,
               std::vector<PinchPair> pinches) {
  Germ g;
  g.label = std::move(label);
  g.diagram = std::move(d);
  g.bridges = std::move(bridges);
  g.pinches = std::move(pinches);
  validate_germ(g);
  return g;
}

const BridgeSite* find_site(const Germ& g, const std::string& id) {
  for (const auto& s : g.bridges)
    if (s.id == id) return &s;
  return nullptr;
}

Germ insert_bridge(const Germ& g, const std::string& id, int e1, int e2, const Rational& q,
                   const Rational& beta, std::optional<int> face) {
  if (find_site(g, id)) throw ValidationError("bridge site id '" + id + "' already exists");
  auto a = analyze(g.diagram);
  int f;
  if (face) {
    f = *face;
    if (!anti_parallel_on_face(g.diagram, a, e1, e2, f))
      throw DomainError("the chosen strands are not anti-parallel across face " + std::to_string(f));
  } else {
    auto found = find_band_face(g.diagram, a, e1, e2);
    if (!found)
      throw DomainError("the chosen strands are nowhere anti-parallel across a common face");
    f = *found;
  }
  Germ out = g;
  out.bridges.push_back(BridgeSite{id, {e1, e2}, f, q, beta});
  validate_germ(out);
  std::ostringstream os;
  os << "id=" << id << " edges=(" << e1 << "," << e2 << ") face=" << f << " q=" << q.str()
     << " beta=" << beta.str();
  out.history.push_back({"insert_bridge", os.str()});
  return out;
}

Germ break_bridge(const Germ& g, const std::string& site_id, const Rational& p) {
  const BridgeSite* site = find_site(g, site_id);
  if (!site) throw DomainError("unknown bridge site '" + site_id + "'");
  if (!(site->q < p))
    throw DomainError("breaking exponent p = " + p.str() + " must exceed the bridge exponent q = " +
                      site->q.str());
  Germ out = g;
  out.diagram = band_smooth(g.diagram, site->edges[0], site->edges[1], site->face);
  out.bridges.clear();
  for (const auto& s : g.bridges)
    if (s.id != site_id) out.bridges.push_back(s);
  relocate_sites(out.diagram, out.bridges);
  validate_germ(out);
  std::ostringstream os;
  os << "site=" << site_id << " p=" << p.str() << " -> " << diagram_detail(out.diagram);
  out.history.push_back({"break_bridge", os.str()});
  return out;
}

Germ twist_bridge(const Germ& g, const std::string& site_id, int k) {
  const BridgeSite* site = find_site(g, site_id);
  if (!site) throw DomainError("unknown bridge site '" + site_id + "'");
  Germ out = g;
  if (k != 0) {
    const int e1 = site->edges[0];
    const int e2 = site->edges[1];
    const int sign = k > 0 ? +1 : -1;
    LinkDiagram d = g.diagram;
    // The twist leaves the band untouched and instead winds the two return
    // arcs (the strand continuations beyond the band) around each other.
    // Breaking the band then puts one return arc on each circle, so every
    // twist crossing becomes an inter-circle crossing and the circles link
    // once per full twist. Each full twist is a strand push (two cancelling
    // crossings) whose off-sign crossing is then switched.
    for (int unit = 0; unit < std::abs(k); ++unit) {
      auto a = analyze(d);
      auto successor = [&](int e) {
        CrossSlot h = a.edges.at(e).head;
        const auto& cr = d.crossings()[static_cast<std::size_t>(h.crossing)];
        int s = (h.slot == 0) ? 2 : d.over_out_slot(h.crossing);
        return cr.e[static_cast<std::size_t>(s)];
      };
      auto predecessor = [&](int e) {
        CrossSlot t = a.edges.at(e).tail;
        const auto& cr = d.crossings()[static_cast<std::size_t>(t.crossing)];
        int s = (t.slot == 2) ? 0 : d.over_in_slot(t.crossing);
        return cr.e[static_cast<std::size_t>(s)];
      };
      auto common_face = [&](int eu, int ev) {
        for (std::size_t f = 0; f < a.faces.size(); ++f) {
          bool has_u = false, has_v = false;
          for (const auto& dart : a.faces[f]) {
            int lbl = d.crossings()[static_cast<std::size_t>(dart.crossing)]
                          .e[static_cast<std::size_t>(dart.slot)];
            has_u = has_u || lbl == eu;
            has_v = has_v || lbl == ev;
          }
          if (has_u && has_v) return static_cast<int>(f);
        }
        return -1;
      };

      int u = -1, v = -1, face = -1;
      const std::array<int, 2> p_side{successor(e1), predecessor(e2)};
      const std::array<int, 2> q_side{successor(e2), predecessor(e1)};
      for (int pu : p_side) {
        for (int qv : q_side) {
          if (pu == qv || pu == e1 || pu == e2 || qv == e1 || qv == e2) continue;
          int f = common_face(pu, qv);
          if (f >= 0) {
            u = pu;
            v = qv;
            face = f;
            break;
          }
        }
        if (u != -1) break;
      }
      if (u == -1)
        throw DomainError("the return arcs of bridge site '" + site_id +
                          "' do not admit a twist region");

      ReidemeisterLocation loc;
      loc.face = face;
      loc.over_edge = u;
      loc.under_edge = v;
      const int before = static_cast<int>(d.crossings().size());
      d = reidemeister(d, "R2+", loc);
      int switched = 0;
      for (int c : {before, before + 1}) {
        if (d.crossing_sign(c) != sign) {
          auto xs = d.crossings();
          auto& cr = xs[static_cast<std::size_t>(c)];
          cr = d.over_in_slot(c) == 3
                   ? Crossing{{cr.e[3], cr.e[0], cr.e[1], cr.e[2]}}
                   : Crossing{{cr.e[1], cr.e[2], cr.e[3], cr.e[0]}};
          d = LinkDiagram::make(std::move(xs), d.free_loops());
          ++switched;
        }
      }
      if (switched != 1)
        throw Error("internal: strand push did not create one crossing of each sign");
    }
    out.diagram = d;
    relocate_sites(out.diagram, out.bridges);
    validate_germ(out);
  }
  std::ostringstream os;
  os << "site=" << site_id << " k=" << k;
  out.history.push_back({"twist_bridge", os.str()});
  return out;
}

Germ attach_knot(const Germ& g, int component, const LinkDiagram& knot) {
  if (total_components(knot) != 1)
    throw DomainError("attachment requires a knot diagram (exactly one circle)");
  auto a = analyze(g.diagram);
  const int edge_comps = static_cast<int>(a.components.size());
  const int total = edge_comps + g.diagram.free_loops();
  if (component < 0 || component >= total) throw DomainError("component index out of range");

  Germ out = g;
  std::ostringstream os;
  os << "component=" << component << " knot=" << diagram_detail(knot);
  if (knot.crossings().empty()) {
    // Summing with a plain circle changes nothing.
    out.history.push_back({"attach_knot", os.str()});
    return out;
  }
  if (component >= edge_comps) {
    out.diagram = connected_sum(g.diagram, component, knot, 0).diagram;
    relocate_sites(out.diagram, out.bridges);
    validate_germ(out);
    out.history.push_back({"attach_knot", os.str()});
    return out;
  }
  std::string last_error;
  for (int candidate : a.components[static_cast<std::size_t>(component)]) {
    try {
      Germ trial = g;
      trial.diagram = connected_sum(g.diagram, component, knot, 0, candidate).diagram;
      relocate_sites(trial.diagram, trial.bridges);
      validate_germ(trial);
      trial.history.push_back({"attach_knot", os.str() + " at=" + std::to_string(candidate)});
      return trial;
    } catch (const Error& err) {
      last_error = err.what();
    }
  }
  throw DomainError("no splice point on component " + std::to_string(component) +
                    " keeps every decoration valid (" + last_error + ")");
}

PinchedLink tangent_cone(const Germ& g) {
  validate_germ(g);
  // Bridge sheets meet at order beta at the origin, so at cone scale a bridge
  // is one more identified pair.
  std::vector<PinchPair> specs = g.pinches;
  for (const auto& s : g.bridges) specs.push_back(PinchPair{{s.edges[0], s.edges[1]}, s.beta});

  // Identify the two marked points of each pair.  When both markers lie on one
  // circle, bringing them together cuts it into two circles joined at the pinch
  // point; the diagram version is a band smoothing through a face the markers
  // co-border.  Markers on different circles leave the circles intact and only
  // record the wedge point.
  LinkDiagram cur = g.diagram;
  for (const auto& spec : specs) {
    auto a = analyze(cur);
    const int m0 = spec.markers[0], m1 = spec.markers[1];
    if (a.component_of.at(m0) != a.component_of.at(m1)) continue;
    auto face = find_band_face(cur, a, m0, m1);
    if (!face)
      throw DomainError("pinch markers " + std::to_string(m0) + " and " + std::to_string(m1) +
                        " do not co-border a face with anti-parallel strands");
    cur = band_smooth(cur, m0, m1, *face);
  }

  auto a = analyze(cur);
  PinchedLink out;
  for (int comp = 0; comp < static_cast<int>(a.components.size()); ++comp)
    out.circles.push_back(extract_component(cur, comp));
  for (int k = 0; k < cur.free_loops(); ++k) out.circles.push_back(LinkDiagram::make({}, 1));

  out.pinch_incidences.assign(specs.size(), {});
  for (int spec = 0; spec < static_cast<int>(specs.size()); ++spec) {
    auto& inc = out.pinch_incidences[static_cast<std::size_t>(spec)];
    for (int marker : specs[static_cast<std::size_t>(spec)].markers)
      inc.push_back(a.component_of.at(marker));
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  }
  for (const auto& circle : out.circles)
    if (total_components(circle) != 1)
      throw Error("tangent cone produced a piece that is not a single circle");
  return out;
}

Germ build_universal(const LinkDiagram& knot, const Rational& beta) {
  if (total_components(knot) != 1)
    throw DomainError("the universal construction starts from a knot diagram (one circle)");
  if (!(Rational(1) < beta)) throw DomainError("contact exponent must exceed 1");
  LinkDiagram base = knot;
  if (base.crossings().empty()) {
    ReidemeisterLocation loc;
    loc.on_free_loop = true;
    loc.sign = +1;
    base = reidemeister(base, "R1+", loc);
  }

  // Blackboard double: each edge splits into a left and right copy, each
  // crossing into a 2x2 grid of crossings of the original sign.
  auto a = analyze(base);
  std::map<int, std::pair<int, int>> copy;  // edge -> (left, right)
  int next = 1;
  for (const auto& [e, info] : a.edges) {
    (void)info;
    copy[e] = {next, next + 1};
    next += 2;
  }
  std::vector<Crossing> xs;
  for (int c = 0; c < static_cast<int>(base.crossings().size()); ++c) {
    const auto& e = base.crossings()[static_cast<std::size_t>(c)].e;
    const int u1 = next++;  // left under track, between the two rows
    const int u2 = next++;  // right under track
    const int m1 = next++;  // over track met first
    const int m2 = next++;  // over track met second
    const auto [aL, aR] = copy.at(e[0]);
    const auto [bL, bR] = copy.at(e[1]);
    const auto [cL, cR] = copy.at(e[2]);
    const auto [dL, dR] = copy.at(e[3]);
    if (base.crossing_sign(c) > 0) {
      // over-strand d -> b; left copies ride the far track
      xs.push_back(Crossing{{aL, m1, u1, dR}});
      xs.push_back(Crossing{{u1, m2, cL, dL}});
      xs.push_back(Crossing{{aR, bR, u2, m1}});
      xs.push_back(Crossing{{u2, bL, cR, m2}});
    } else {
      // over-strand b -> d
      xs.push_back(Crossing{{aL, m1, u1, dL}});
      xs.push_back(Crossing{{aR, bL, u2, m1}});
      xs.push_back(Crossing{{u1, m2, cL, dR}});
      xs.push_back(Crossing{{u2, bR, cR, m2}});
    }
  }
  LinkDiagram doubled = LinkDiagram::make(std::move(xs), 0);

  const int anchor = a.edges.begin()->first;
  const int left = copy.at(anchor).first;
  const int right = copy.at(anchor).second;
  auto ad = analyze(doubled);
  LinkDiagram reversed = reverse_component(doubled, ad.component_of.at(left));
  auto ar = analyze(reversed);
  auto face = find_band_face(reversed, ar, left, right);
  if (!face) throw Error("no band face between the doubled strands");
  LinkDiagram joined = band_smooth(reversed, left, right, *face);

  Germ g;
  g.label = "universal";
  g.diagram = joined;
  g.pinches.push_back(PinchPair{{left, right}, beta});
  validate_germ(g);
  std::ostringstream os;
  os << "knot=" << diagram_detail(knot) << " beta=" << beta.str();
  g.history.push_back({"build_universal", os.str()});
  return g;
}

Germ mirror_germ(const Germ& g) {
  Germ out = g;
  out.diagram = mirror(g.diagram);
  relocate_sites(out.diagram, out.bridges);
  validate_germ(out);
  out.history.push_back({"mirror", ""});
  return out;
}

}  // namespace lipknot
