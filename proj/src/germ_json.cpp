#include "lipknot/germ_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lipknot {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_exponent_field(const ordered_json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError(what + " must be an integer or a \"p/q\" string");
}

std::string crossings_only(const LinkDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << x.e[0] << ',' << x.e[1] << ',' << x.e[2] << ',' << x.e[3] << ']';
  }
  return os.str();
}

}  // namespace

std::string germ_to_json(const Germ& g) {
  ordered_json j;
  j["label"] = g.label;
  j["dimension"] = g.dimension;
  j["diagram"] = {{"pd", crossings_only(g.diagram)}, {"free_loops", g.diagram.free_loops()}};
  j["bridges"] = ordered_json::array();
  for (const auto& s : g.bridges)
    j["bridges"].push_back({{"id", s.id},
                            {"edges", {s.edges[0], s.edges[1]}},
                            {"face", s.face},
                            {"q", s.q.str()},
                            {"beta", s.beta.str()}});
  j["pinches"] = ordered_json::array();
  for (const auto& p : g.pinches)
    j["pinches"].push_back({{"arcs", {p.markers[0], p.markers[1]}}, {"tord", p.tangency.str()}});
  j["history"] = ordered_json::array();
  for (const auto& h : g.history) j["history"].push_back({{"op", h.op}, {"detail", h.detail}});
  return j.dump(2) + "\n";
}

Germ germ_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid germ JSON: ") + e.what());
  }
  try {
    Germ g;
    g.label = j.at("label").get<std::string>();
    g.dimension = j.value("dimension", 4);
    const auto& dj = j.at("diagram");
    g.diagram = parse_pd(dj.at("pd").get<std::string>());
    if (dj.contains("free_loops")) {
      const int loops = dj.at("free_loops").get<int>();
      const int in_pd = g.diagram.free_loops();
      if (in_pd == 0 && loops != 0) {
        std::vector<Crossing> xs = g.diagram.crossings();
        g.diagram = LinkDiagram::make(std::move(xs), loops);
      } else if (in_pd != loops) {
        throw ParseError("free_loops disagrees with the 'O' circles in the pd string");
      }
    }
    for (const auto& bj : j.value("bridges", ordered_json::array())) {
      BridgeSite s;
      s.id = bj.at("id").get<std::string>();
      s.edges = {bj.at("edges").at(0).get<int>(), bj.at("edges").at(1).get<int>()};
      s.face = bj.at("face").get<int>();
      s.q = parse_exponent_field(bj.at("q"), "bridge exponent q");
      s.beta = parse_exponent_field(bj.at("beta"), "bridge exponent beta");
      g.bridges.push_back(s);
    }
    for (const auto& pj : j.value("pinches", ordered_json::array())) {
      PinchPair p;
      p.markers = {pj.at("arcs").at(0).get<int>(), pj.at("arcs").at(1).get<int>()};
      p.tangency = parse_exponent_field(pj.at("tord"), "pinch tangency");
      g.pinches.push_back(p);
    }
    for (const auto& hj : j.value("history", ordered_json::array()))
      g.history.push_back({hj.at("op").get<std::string>(), hj.value("detail", "")});
    validate_germ(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("germ JSON is missing or mistypes a field: ") + e.what());
  }
}

Germ load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open germ file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return germ_from_json(buf.str());
}

void save_germ_file(const Germ& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write germ file '" + path + "'");
  out << germ_to_json(g);
}

}  // namespace lipknot
