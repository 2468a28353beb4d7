#include "lipknot/certifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lipknot/germ_json.hpp"
#include "lipknot/hash.hpp"

namespace lipknot {

std::string verdict_kind_name(VerdictKind k) {
  return k == VerdictKind::Distinguished ? "distinguished" : "inconclusive";
}

namespace {

std::string poly_list_repr(const std::vector<LaurentPoly>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << "; ";
    os << v[i].str();
  }
  os << '}';
  return os.str();
}

std::string signature_repr(const std::vector<std::vector<LaurentPoly>>& sig) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) os << " | ";
    os << '[';
    for (std::size_t k = 0; k < sig[i].size(); ++k) {
      if (k) os << "; ";
      os << sig[i][k].str();
    }
    os << ']';
  }
  os << '}';
  return os.str();
}

void sort_polys(std::vector<LaurentPoly>& v) {
  std::sort(v.begin(), v.end(),
            [](const LaurentPoly& a, const LaurentPoly& b) { return a.str() < b.str(); });
}

std::string pinched_link_repr(const PinchedLink& link) {
  std::ostringstream os;
  os << "circles[";
  for (std::size_t i = 0; i < link.circles.size(); ++i) {
    if (i) os << " | ";
    os << canonical_pd(link.circles[i]);
  }
  os << "]; pinches[";
  for (std::size_t i = 0; i < link.pinch_incidences.size(); ++i) {
    if (i) os << "; ";
    os << '(';
    for (std::size_t k = 0; k < link.pinch_incidences[i].size(); ++k) {
      if (k) os << ',';
      os << link.pinch_incidences[i][k];
    }
    os << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string PinchedProfile::str() const {
  std::ostringstream os;
  os << "circles=" << circle_count << "; jones" << poly_list_repr(circle_jones) << "; pinches"
     << signature_repr(pinch_signature);
  return os.str();
}

PinchedProfile pinched_profile(const PinchedLink& link, int max_crossings) {
  PinchedProfile p;
  p.circle_count = static_cast<int>(link.circles.size());
  std::vector<LaurentPoly> by_index;
  for (const auto& c : link.circles) by_index.push_back(jones(c, max_crossings));
  p.circle_jones = by_index;
  sort_polys(p.circle_jones);
  for (const auto& inc : link.pinch_incidences) {
    std::vector<LaurentPoly> sig;
    for (int idx : inc) sig.push_back(by_index[static_cast<std::size_t>(idx)]);
    sort_polys(sig);
    p.pinch_signature.push_back(std::move(sig));
  }
  std::sort(p.pinch_signature.begin(), p.pinch_signature.end(),
            [](const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
              return poly_list_repr(a) < poly_list_repr(b);
            });
  return p;
}

PinchedProfile mirror_pinched_profile(const PinchedProfile& p) {
  PinchedProfile m;
  m.circle_count = p.circle_count;
  for (const auto& j : p.circle_jones) m.circle_jones.push_back(j.invert_variable());
  sort_polys(m.circle_jones);
  for (const auto& sig : p.pinch_signature) {
    std::vector<LaurentPoly> s;
    for (const auto& j : sig) s.push_back(j.invert_variable());
    sort_polys(s);
    m.pinch_signature.push_back(std::move(s));
  }
  std::sort(m.pinch_signature.begin(), m.pinch_signature.end(),
            [](const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
              return poly_list_repr(a) < poly_list_repr(b);
            });
  return m;
}

std::optional<Witness> pinched_difference(const PinchedProfile& a, const PinchedProfile& b) {
  if (a.circle_count != b.circle_count)
    return Witness{"tangent-cone circle count", std::to_string(a.circle_count),
                   std::to_string(b.circle_count)};
  if (a.circle_jones.size() != b.circle_jones.size() ||
      !std::equal(a.circle_jones.begin(), a.circle_jones.end(), b.circle_jones.begin()))
    return Witness{"tangent-cone Jones multiset", poly_list_repr(a.circle_jones),
                   poly_list_repr(b.circle_jones)};
  if (a.pinch_signature.size() != b.pinch_signature.size())
    return Witness{"pinch count", std::to_string(a.pinch_signature.size()),
                   std::to_string(b.pinch_signature.size())};
  if (signature_repr(a.pinch_signature) != signature_repr(b.pinch_signature))
    return Witness{"pinch incidence signature", signature_repr(a.pinch_signature),
                   signature_repr(b.pinch_signature)};
  return std::nullopt;
}

Verdict sampaio_test(const Germ& a, const Germ& b) {
  Verdict v;
  v.method = "sampaio";
  const PinchedProfile pa = pinched_profile(tangent_cone(a));
  const PinchedProfile pb = pinched_profile(tangent_cone(b));
  auto diff = pinched_difference(pa, pb);
  if (!diff) {
    v.kind = VerdictKind::Inconclusive;
    v.note = "tangent cones agree on every compared invariant";
    return v;
  }
  if (!pinched_difference(pa, mirror_pinched_profile(pb))) {
    v.kind = VerdictKind::Inconclusive;
    v.note = "tangent cones agree up to mirror image";
    return v;
  }
  v.kind = VerdictKind::Distinguished;
  v.witness = diff;
  v.note = "tangent cones differ under both identity and mirror comparison";
  return v;
}

namespace {

std::vector<std::pair<Rational, Rational>> site_signature(const Germ& g) {
  std::vector<std::pair<Rational, Rational>> sig;
  for (const auto& s : g.bridges) sig.emplace_back(s.q, s.beta);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::string site_signature_repr(const std::vector<std::pair<Rational, Rational>>& sig) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) os << ", ";
    os << "(q=" << sig[i].first.str() << ", beta=" << sig[i].second.str() << ')';
  }
  os << '}';
  return os.str();
}

Germ break_all_sites(const Germ& g, const Rational& p) {
  Germ cur = g;
  while (!cur.bridges.empty()) cur = break_bridge(cur, cur.bridges.front().id, p);
  return cur;
}

Rational default_breaking_exponent(const Germ& a, const Germ& b) {
  Rational q_max(1);
  for (const auto& s : a.bridges) q_max = std::max(q_max, s.q);
  for (const auto& s : b.bridges) q_max = std::max(q_max, s.q);
  return q_max + Rational(1);
}

}  // namespace

Verdict bridge_break_test(const Germ& a, const Germ& b, std::optional<Rational> p) {
  if (a.bridges.empty() && b.bridges.empty())
    throw DomainError("bridge-break test needs at least one bridge site");
  Verdict v;
  v.method = "bridge_break";
  const auto sig_a = site_signature(a);
  const auto sig_b = site_signature(b);
  if (sig_a != sig_b) {
    v.kind = VerdictKind::Distinguished;
    v.witness = Witness{"bridge site signature", site_signature_repr(sig_a), site_signature_repr(sig_b)};
    v.note = "the (q, beta) site multisets already differ";
    return v;
  }
  const Rational pe = p ? *p : default_breaking_exponent(a, b);
  for (const auto& s : a.bridges)
    if (!(s.q < pe))
      throw DomainError("breaking exponent p = " + pe.str() + " must exceed every site exponent q");
  const InvariantProfile ia = invariant_profile(break_all_sites(a, pe).diagram);
  const InvariantProfile ib = invariant_profile(break_all_sites(b, pe).diagram);
  auto diff = profile_difference(ia, ib);
  std::ostringstream note;
  note << "all sites broken at p = " << pe.str()
       << "; matching sites share (q, beta), so every site correspondence breaks to the same links";
  if (!diff) {
    v.kind = VerdictKind::Inconclusive;
    v.note = note.str() + "; the broken links agree on every compared invariant";
    return v;
  }
  if (!profile_difference(ia, mirror_profile(ib))) {
    v.kind = VerdictKind::Inconclusive;
    v.note = note.str() + "; the broken links agree up to mirror image";
    return v;
  }
  v.kind = VerdictKind::Distinguished;
  v.witness = Witness{diff->invariant, diff->left, diff->right};
  v.note = note.str();
  return v;
}

Certificate certify(const Germ& a, const Germ& b, std::optional<Rational> p) {
  Certificate c;
  c.left_label = a.label;
  c.right_label = b.label;
  c.left_hash = fnv1a64_hex(germ_to_json(a));
  c.right_hash = fnv1a64_hex(germ_to_json(b));

  const PinchedLink cone_a = tangent_cone(a);
  const PinchedLink cone_b = tangent_cone(b);
  c.trace.push_back({"tangent_cone", "left", fnv1a64_hex(pinched_link_repr(cone_a))});
  c.trace.push_back({"tangent_cone", "right", fnv1a64_hex(pinched_link_repr(cone_b))});
  c.trace.push_back({"pinched_profile", "left", fnv1a64_hex(pinched_profile(cone_a).str())});
  c.trace.push_back({"pinched_profile", "right", fnv1a64_hex(pinched_profile(cone_b).str())});
  Verdict vs = sampaio_test(a, b);
  c.trace.push_back({"sampaio_verdict", "", fnv1a64_hex(verdict_kind_name(vs.kind))});
  c.verdicts.push_back(vs);

  if (!a.bridges.empty() || !b.bridges.empty()) {
    Verdict vb = bridge_break_test(a, b, p);
    if (site_signature(a) == site_signature(b)) {
      const Rational pe = p ? *p : default_breaking_exponent(a, b);
      const Germ ba = break_all_sites(a, pe);
      const Germ bb = break_all_sites(b, pe);
      c.trace.push_back({"break_all", "left", fnv1a64_hex(canonical_pd(ba.diagram))});
      c.trace.push_back({"break_all", "right", fnv1a64_hex(canonical_pd(bb.diagram))});
      c.trace.push_back({"link_profile", "left", fnv1a64_hex(invariant_profile(ba.diagram).str())});
      c.trace.push_back({"link_profile", "right", fnv1a64_hex(invariant_profile(bb.diagram).str())});
    }
    c.trace.push_back({"bridge_break_verdict", "", fnv1a64_hex(verdict_kind_name(vb.kind))});
    c.verdicts.push_back(vb);
  }

  c.overall = VerdictKind::Inconclusive;
  for (const auto& v : c.verdicts)
    if (v.kind == VerdictKind::Distinguished) c.overall = VerdictKind::Distinguished;
  return c;
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["left"] = {{"label", c.left_label}, {"germ_hash", c.left_hash}};
  j["right"] = {{"label", c.right_label}, {"germ_hash", c.right_hash}};
  j["overall"] = verdict_kind_name(c.overall);
  j["mirror_checked"] = c.mirror_checked;
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : c.verdicts) {
    nlohmann::ordered_json vj;
    vj["method"] = v.method;
    vj["verdict"] = verdict_kind_name(v.kind);
    if (v.witness)
      vj["witness"] = {{"invariant", v.witness->invariant},
                       {"left", v.witness->left},
                       {"right", v.witness->right}};
    vj["note"] = v.note;
    j["verdicts"].push_back(vj);
  }
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& t : c.trace)
    j["trace"].push_back({{"op", t.op}, {"subject", t.subject}, {"result_hash", t.result_hash}});
  return j.dump(2) + "\n";
}

namespace {

VerdictKind parse_verdict_kind(const std::string& name) {
  if (name == "distinguished") return VerdictKind::Distinguished;
  if (name == "inconclusive") return VerdictKind::Inconclusive;
  throw ParseError("unknown verdict kind '" + name + "'");
}

}  // namespace

Certificate certificate_from_json(const std::string& text) {
  try {
    auto j = nlohmann::ordered_json::parse(text);
    Certificate c;
    c.left_label = j.at("left").at("label").get<std::string>();
    c.left_hash = j.at("left").at("germ_hash").get<std::string>();
    c.right_label = j.at("right").at("label").get<std::string>();
    c.right_hash = j.at("right").at("germ_hash").get<std::string>();
    c.overall = parse_verdict_kind(j.at("overall").get<std::string>());
    c.mirror_checked = j.at("mirror_checked").get<bool>();
    for (const auto& vj : j.at("verdicts")) {
      Verdict v;
      v.method = vj.at("method").get<std::string>();
      v.kind = parse_verdict_kind(vj.at("verdict").get<std::string>());
      if (vj.contains("witness")) {
        Witness w;
        w.invariant = vj.at("witness").at("invariant").get<std::string>();
        w.left = vj.at("witness").at("left").get<std::string>();
        w.right = vj.at("witness").at("right").get<std::string>();
        v.witness = w;
      }
      v.note = vj.at("note").get<std::string>();
      c.verdicts.push_back(v);
    }
    for (const auto& tj : j.at("trace")) {
      TraceEntry t;
      t.op = tj.at("op").get<std::string>();
      t.subject = tj.at("subject").get<std::string>();
      t.result_hash = tj.at("result_hash").get<std::string>();
      c.trace.push_back(t);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON is missing or mistypes a field: ") + e.what());
  }
}

std::vector<std::string> replay_certificate(const Certificate& c, const Germ& a, const Germ& b,
                                            std::optional<Rational> p) {
  std::vector<std::string> mismatches;
  const Certificate fresh = certify(a, b, p);
  if (fresh.left_hash != c.left_hash)
    mismatches.push_back("left germ hash differs (certificate " + c.left_hash + ", replay " +
                         fresh.left_hash + ")");
  if (fresh.right_hash != c.right_hash)
    mismatches.push_back("right germ hash differs (certificate " + c.right_hash + ", replay " +
                         fresh.right_hash + ")");
  if (fresh.overall != c.overall)
    mismatches.push_back("overall verdict differs (certificate " + verdict_kind_name(c.overall) +
                         ", replay " + verdict_kind_name(fresh.overall) + ")");
  if (fresh.trace.size() != c.trace.size()) {
    mismatches.push_back("trace length differs (certificate " + std::to_string(c.trace.size()) +
                         ", replay " + std::to_string(fresh.trace.size()) + ")");
    return mismatches;
  }
  for (std::size_t i = 0; i < c.trace.size(); ++i) {
    const auto& want = c.trace[i];
    const auto& got = fresh.trace[i];
    if (want.op != got.op || want.subject != got.subject || want.result_hash != got.result_hash)
      mismatches.push_back("trace step " + std::to_string(i) + " (" + want.op +
                           (want.subject.empty() ? "" : " " + want.subject) +
                           ") does not reproduce: certificate " + want.result_hash + ", replay " +
                           got.result_hash);
  }
  return mismatches;
}

}  // namespace lipknot
