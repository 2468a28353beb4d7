// lipknot command line: parse diagrams, compute invariants, apply germ
// operations, certify germ pairs, manage the built-in corpus, render SVG.
// Reports are JSON with a deterministic payload and a separate timing field.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lipknot/certifier.hpp"
#include "lipknot/corpus.hpp"
#include "lipknot/diagram.hpp"
#include "lipknot/errors.hpp"
#include "lipknot/germ.hpp"
#include "lipknot/germ_json.hpp"
#include "lipknot/hash.hpp"
#include "lipknot/invariants.hpp"
#include "lipknot/random_gen.hpp"
#include "lipknot/render.hpp"

namespace {

using lipknot::Germ;
using lipknot::LinkDiagram;
using nlohmann::ordered_json;

constexpr const char* kToolVersion = "lipknot 1.0.0";

struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json outputs = ordered_json::object();
};

std::chrono::steady_clock::time_point g_start;

void emit_report(const Report& r, bool quiet) {
    ordered_json payload;
    payload["command"] = r.command;
    payload["version"] = kToolVersion;
    payload["inputs"] = r.inputs;
    payload["outputs"] = r.outputs;
    std::string hash = lipknot::fnv1a64_hex(payload.dump());
    if (quiet) {
        std::cout << hash << "\n";
        return;
    }
    payload["payload_hash"] = hash;
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - g_start)
                    .count();
    payload["timing_ms"] = ms;
    std::cout << payload.dump(2) << "\n";
}

// Accepts either a germ JSON file path or a built-in corpus germ name.
Germ resolve_germ(const std::string& ref) {
    if (std::filesystem::exists(ref)) return lipknot::load_germ_file(ref);
    const auto names = lipknot::corpus_names();
    if (std::find(names.begin(), names.end(), ref) != names.end())
        return lipknot::corpus_germ(ref);
    throw lipknot::ParseError("'" + ref +
                              "' is neither a germ file nor a corpus germ name");
}

// Exactly one of --pd / --braid / --germ. Returns the diagram; fills *germ_out
// when the input was a germ. Records input hashes in the report.
LinkDiagram resolve_diagram(const std::string& pd, const std::string& braid,
                            const std::string& germ_ref, Report& report,
                            std::optional<Germ>* germ_out = nullptr) {
    int given = (!pd.empty()) + (!braid.empty()) + (!germ_ref.empty());
    if (given != 1)
        throw lipknot::ValidationError(
            "give exactly one of --pd, --braid, --germ");
    if (!pd.empty()) {
        report.inputs["pd"] = lipknot::fnv1a64_hex(pd);
        return lipknot::parse_pd(pd);
    }
    if (!braid.empty()) {
        report.inputs["braid"] = lipknot::fnv1a64_hex(braid);
        return lipknot::parse_braid(braid);
    }
    Germ g = resolve_germ(germ_ref);
    report.inputs["germ"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(g));
    LinkDiagram d = g.diagram;
    if (germ_out) *germ_out = std::move(g);
    return d;
}

ordered_json germ_summary(const Germ& g) {
    ordered_json j;
    j["label"] = g.label;
    j["dimension"] = g.dimension;
    j["bridges"] = ordered_json::array();
    for (const auto& b : g.bridges)
        j["bridges"].push_back({{"id", b.id},
                                {"edges", {b.edges[0], b.edges[1]}},
                                {"face", b.face},
                                {"q", b.q.str()},
                                {"beta", b.beta.str()}});
    j["pinches"] = ordered_json::array();
    for (const auto& p : g.pinches)
        j["pinches"].push_back(
            {{"arcs", {p.markers[0], p.markers[1]}}, {"tord", p.tangency.str()}});
    j["history"] = ordered_json::array();
    for (const auto& h : g.history)
        j["history"].push_back({{"op", h.op}, {"detail", h.detail}});
    return j;
}

// Embeds the resulting germ in the report and optionally writes it to a file.
void put_germ_result(Report& report, const Germ& g, const std::string& out) {
    std::string text = lipknot::germ_to_json(g);
    report.outputs["germ"] = ordered_json::parse(text);
    report.outputs["germ_hash"] = lipknot::fnv1a64_hex(text);
    if (!out.empty()) {
        lipknot::save_germ_file(g, out);
        report.outputs["written"] = out;
    }
}

lipknot::Rational parse_rational_flag(const std::string& text,
                                      const char* flag) {
    try {
        return lipknot::Rational::parse(text);
    } catch (const lipknot::Error& e) {
        throw lipknot::ParseError(std::string(flag) + ": " + e.what());
    }
}

std::string first_distinguishing_method(const lipknot::Certificate& cert) {
    for (const auto& v : cert.verdicts)
        if (v.kind == lipknot::VerdictKind::Distinguished) return v.method;
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    g_start = std::chrono::steady_clock::now();
    CLI::App app{
        "lipknot: exponent-decorated link diagrams for surface germs — "
        "operations, invariants, and non-equivalence certificates"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- parse ----
    auto* cmd_parse = app.add_subcommand(
        "parse", "parse and validate a diagram or germ; report its structure");
    struct {
        std::string pd, braid, germ;
        bool quiet = false;
    } po;
    cmd_parse->add_option("--pd", po.pd, "PD code, e.g. \"X[1,4,2,3] X[3,2,4,1]\"");
    cmd_parse->add_option("--braid", po.braid,
                          "braid word, e.g. \"braid 2: s1 s1 s1\"");
    cmd_parse->add_option("--germ", po.germ, "germ JSON file or corpus name");
    cmd_parse->add_flag("--quiet", po.quiet, "print only the payload hash");
    cmd_parse->callback([&]() {
        Report report{"parse"};
        std::optional<Germ> germ;
        LinkDiagram d = resolve_diagram(po.pd, po.braid, po.germ, report, &germ);
        lipknot::DiagramAnalysis a = lipknot::analyze(d);
        report.outputs["canonical_pd"] = lipknot::canonical_pd(d);
        report.outputs["crossings"] = static_cast<int>(d.crossings().size());
        report.outputs["free_loops"] = d.free_loops();
        report.outputs["components"] = lipknot::total_components(d);
        report.outputs["faces"] = static_cast<int>(a.faces.size());
        report.outputs["writhe"] = lipknot::writhe(d);
        ordered_json comps = ordered_json::array();
        for (const auto& cycle : a.components) comps.push_back(cycle);
        report.outputs["component_edges"] = comps;
        if (germ) report.outputs["germ"] = germ_summary(*germ);
        emit_report(report, po.quiet);
    });

    // ---- invariants ----
    auto* cmd_inv = app.add_subcommand(
        "invariants", "writhe, linking numbers, Kauffman bracket, Jones");
    struct {
        std::string pd, braid, germ;
        bool quiet = false;
    } io;
    cmd_inv->add_option("--pd", io.pd, "PD code");
    cmd_inv->add_option("--braid", io.braid, "braid word");
    cmd_inv->add_option("--germ", io.germ, "germ JSON file or corpus name");
    cmd_inv->add_flag("--quiet", io.quiet, "print only the payload hash");
    cmd_inv->callback([&]() {
        Report report{"invariants"};
        LinkDiagram d = resolve_diagram(io.pd, io.braid, io.germ, report);
        lipknot::InvariantProfile prof = lipknot::invariant_profile(d);
        report.outputs["component_count"] = prof.component_count;
        report.outputs["writhe"] = lipknot::writhe(d);
        report.outputs["kauffman_bracket"] = lipknot::kauffman_bracket(d).str();
        report.outputs["whole_jones"] = prof.whole_jones.str();
        ordered_json cj = ordered_json::array();
        for (const auto& p : prof.component_jones) cj.push_back(p.str());
        report.outputs["component_jones"] = cj;
        report.outputs["pairwise_linking"] = prof.pairwise_linking;
        emit_report(report, io.quiet);
    });

    // ---- op ----
    auto* cmd_op =
        app.add_subcommand("op", "apply a construction to a germ");
    cmd_op->require_subcommand(1);
    struct {
        std::string germ, site, out, p = "", knot, id, face;
        std::string q = "3", beta = "2";
        int k = 0, component = 0;
        std::vector<int> edges;
        bool quiet = false;
    } oo;

    auto* op_break = cmd_op->add_subcommand(
        "break", "break a bridge site at exponent p > q (band smoothing)");
    op_break->add_option("--germ", oo.germ, "germ JSON file or corpus name")
        ->required();
    op_break->add_option("--site", oo.site, "bridge site id")->required();
    op_break->add_option("-p,--exponent", oo.p,
                         "breaking exponent (rational; default max q + 1)");
    op_break->add_option("--out", oo.out, "write the resulting germ here");
    op_break->add_flag("--quiet", oo.quiet, "print only the payload hash");
    op_break->callback([&]() {
        Report report{"op break"};
        Germ g = resolve_germ(oo.germ);
        report.inputs["germ"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(g));
        lipknot::Rational p;
        if (!oo.p.empty()) {
            p = parse_rational_flag(oo.p, "-p");
        } else {
            if (g.bridges.empty())
                throw lipknot::ValidationError("germ has no bridge sites");
            p = g.bridges.front().q;
            for (const auto& b : g.bridges)
                if (b.q > p) p = b.q;
            p += lipknot::Rational(1);
        }
        report.inputs["p"] = p.str();
        Germ out = lipknot::break_bridge(g, oo.site, p);
        put_germ_result(report, out, oo.out);
        emit_report(report, oo.quiet);
    });

    auto* op_twist = cmd_op->add_subcommand(
        "twist", "insert k signed full twists below a bridge site");
    op_twist->add_option("--germ", oo.germ, "germ JSON file or corpus name")
        ->required();
    op_twist->add_option("--site", oo.site, "bridge site id")->required();
    op_twist->add_option("-k,--twists", oo.k, "signed twist count")->required();
    op_twist->add_option("--out", oo.out, "write the resulting germ here");
    op_twist->add_flag("--quiet", oo.quiet, "print only the payload hash");
    op_twist->callback([&]() {
        Report report{"op twist"};
        Germ g = resolve_germ(oo.germ);
        report.inputs["germ"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(g));
        report.inputs["k"] = oo.k;
        Germ out = lipknot::twist_bridge(g, oo.site, oo.k);
        put_germ_result(report, out, oo.out);
        emit_report(report, oo.quiet);
    });

    auto* op_attach = cmd_op->add_subcommand(
        "attach", "connected-sum a knot into one link component");
    op_attach->add_option("--germ", oo.germ, "germ JSON file or corpus name")
        ->required();
    op_attach
        ->add_option("--knot", oo.knot,
                     "knot name (unknot, trefoil, fig8, 5_1) or PD code")
        ->required();
    op_attach->add_option("--component", oo.component,
                          "component index (default 0)");
    op_attach->add_option("--out", oo.out, "write the resulting germ here");
    op_attach->add_flag("--quiet", oo.quiet, "print only the payload hash");
    op_attach->callback([&]() {
        Report report{"op attach"};
        Germ g = resolve_germ(oo.germ);
        report.inputs["germ"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(g));
        const auto names = lipknot::knot_names();
        LinkDiagram knot =
            std::find(names.begin(), names.end(), oo.knot) != names.end()
                ? lipknot::named_knot(oo.knot)
                : lipknot::parse_pd(oo.knot);
        report.inputs["knot"] = lipknot::fnv1a64_hex(lipknot::canonical_pd(knot));
        Germ out = lipknot::attach_knot(g, oo.component, knot);
        put_germ_result(report, out, oo.out);
        emit_report(report, oo.quiet);
    });

    auto* op_insert = cmd_op->add_subcommand(
        "insert-bridge", "add a bridge site between two anti-parallel strands");
    op_insert->add_option("--germ", oo.germ, "germ JSON file or corpus name")
        ->required();
    op_insert->add_option("--id", oo.id, "new site id")->required();
    op_insert->add_option("--edges", oo.edges, "the two strand labels")
        ->expected(2)
        ->required();
    op_insert->add_option("--face", oo.face,
                          "face id (default: lowest shared face)");
    op_insert->add_option("-q", oo.q, "outer exponent (rational, default 3)");
    op_insert->add_option("--beta", oo.beta,
                          "bridge exponent (rational, default 2)");
    op_insert->add_option("--out", oo.out, "write the resulting germ here");
    op_insert->add_flag("--quiet", oo.quiet, "print only the payload hash");
    op_insert->callback([&]() {
        Report report{"op insert-bridge"};
        Germ g = resolve_germ(oo.germ);
        report.inputs["germ"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(g));
        std::optional<int> face;
        if (!oo.face.empty()) {
            lipknot::Rational f = parse_rational_flag(oo.face, "--face");
            if (!f.is_integer())
                throw lipknot::ParseError("--face: expected an integer");
            face = static_cast<int>(f.num());
        }
        Germ out = lipknot::insert_bridge(
            g, oo.id, oo.edges.at(0), oo.edges.at(1),
            parse_rational_flag(oo.q, "-q"),
            parse_rational_flag(oo.beta, "--beta"), face);
        put_germ_result(report, out, oo.out);
        emit_report(report, oo.quiet);
    });

    auto* op_cone = cmd_op->add_subcommand(
        "tangent-cone", "cut the link at its pinch points into circles");
    op_cone->add_option("--germ", oo.germ, "germ JSON file or corpus name")
        ->required();
    op_cone->add_flag("--quiet", oo.quiet, "print only the payload hash");
    op_cone->callback([&]() {
        Report report{"op tangent-cone"};
        Germ g = resolve_germ(oo.germ);
        report.inputs["germ"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(g));
        lipknot::PinchedLink cone = lipknot::tangent_cone(g);
        ordered_json circles = ordered_json::array();
        ordered_json jones = ordered_json::array();
        for (const auto& c : cone.circles) {
            circles.push_back(lipknot::canonical_pd(c));
            jones.push_back(lipknot::jones(c).str());
        }
        report.outputs["circle_count"] = static_cast<int>(cone.circles.size());
        report.outputs["circles"] = circles;
        report.outputs["circle_jones"] = jones;
        ordered_json inc = ordered_json::array();
        for (const auto& pi : cone.pinch_incidences) inc.push_back(pi);
        report.outputs["pinch_incidences"] = inc;
        emit_report(report, oo.quiet);
    });

    // ---- certify ----
    auto* cmd_cert = app.add_subcommand(
        "certify", "certify NON-equivalence of two germs (or replay a certificate)");
    struct {
        std::string left, right, out, replay, p;
        bool quiet = false;
    } co;
    cmd_cert->add_option("left", co.left, "germ JSON file or corpus name")
        ->required();
    cmd_cert->add_option("right", co.right, "germ JSON file or corpus name")
        ->required();
    cmd_cert->add_option("-p,--exponent", co.p,
                         "common breaking exponent (rational)");
    cmd_cert->add_option("--out", co.out, "write the certificate here");
    cmd_cert->add_option("--replay", co.replay,
                         "recompute this certificate and report mismatches");
    cmd_cert->add_flag("--quiet", co.quiet, "print only the payload hash");
    cmd_cert->callback([&]() {
        Report report{"certify"};
        Germ left = resolve_germ(co.left);
        Germ right = resolve_germ(co.right);
        report.inputs["left"] = lipknot::fnv1a64_hex(lipknot::germ_to_json(left));
        report.inputs["right"] =
            lipknot::fnv1a64_hex(lipknot::germ_to_json(right));
        std::optional<lipknot::Rational> p;
        if (!co.p.empty()) p = parse_rational_flag(co.p, "-p");
        if (!co.replay.empty()) {
            std::ifstream in(co.replay);
            if (!in)
                throw lipknot::Error("cannot open certificate '" + co.replay +
                                     "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            lipknot::Certificate cert =
                lipknot::certificate_from_json(buf.str());
            report.inputs["certificate"] = lipknot::fnv1a64_hex(buf.str());
            auto mismatches =
                lipknot::replay_certificate(cert, left, right, p);
            report.outputs["replay_ok"] = mismatches.empty();
            report.outputs["mismatches"] = mismatches;
            emit_report(report, co.quiet);
            return;
        }
        lipknot::Certificate cert = lipknot::certify(left, right, p);
        std::string text = lipknot::certificate_to_json(cert);
        report.outputs["certificate"] = ordered_json::parse(text);
        report.outputs["overall"] = lipknot::verdict_kind_name(cert.overall);
        if (!co.out.empty()) {
            std::ofstream out(co.out);
            if (!out)
                throw lipknot::Error("cannot write certificate '" + co.out +
                                     "'");
            out << text;
            report.outputs["written"] = co.out;
        }
        emit_report(report, co.quiet);
    });

    // ---- render ----
    auto* cmd_render =
        app.add_subcommand("render", "write a deterministic SVG figure");
    struct {
        std::string pd, braid, germ, svg;
        bool quiet = false;
    } ro;
    cmd_render->add_option("--pd", ro.pd, "PD code");
    cmd_render->add_option("--braid", ro.braid, "braid word");
    cmd_render->add_option("--germ", ro.germ, "germ JSON file or corpus name");
    cmd_render->add_option("--svg", ro.svg, "output SVG path")->required();
    cmd_render->add_flag("--quiet", ro.quiet, "print only the payload hash");
    cmd_render->callback([&]() {
        Report report{"render"};
        std::optional<Germ> germ;
        LinkDiagram d = resolve_diagram(ro.pd, ro.braid, ro.germ, report, &germ);
        std::string svg =
            germ ? lipknot::render_svg(*germ) : lipknot::render_svg(d);
        std::ofstream out(ro.svg);
        if (!out) throw lipknot::Error("cannot write SVG '" + ro.svg + "'");
        out << svg;
        out.close();
        if (!out) throw lipknot::Error("cannot write SVG '" + ro.svg + "'");
        report.outputs["svg"] = ro.svg;
        report.outputs["svg_hash"] = lipknot::fnv1a64_hex(svg);
        report.outputs["bytes"] = static_cast<int>(svg.size());
        emit_report(report, ro.quiet);
    });

    // ---- corpus ----
    auto* cmd_corpus =
        app.add_subcommand("corpus", "built-in example germs");
    cmd_corpus->require_subcommand(1);
    struct {
        std::string dir;
        bool quiet = false;
    } cpo;

    auto* corpus_list =
        cmd_corpus->add_subcommand("list", "list corpus germs and knots");
    corpus_list->add_flag("--quiet", cpo.quiet, "print only the payload hash");
    corpus_list->callback([&]() {
        Report report{"corpus list"};
        report.outputs["germs"] = lipknot::corpus_names();
        report.outputs["knots"] = lipknot::knot_names();
        emit_report(report, cpo.quiet);
    });

    auto* corpus_make = cmd_corpus->add_subcommand(
        "make", "write every corpus germ as a JSON file");
    corpus_make->add_option("--dir", cpo.dir, "output directory")->required();
    corpus_make->add_flag("--quiet", cpo.quiet, "print only the payload hash");
    corpus_make->callback([&]() {
        Report report{"corpus make"};
        std::filesystem::create_directories(cpo.dir);
        ordered_json files = ordered_json::array();
        for (const auto& name : lipknot::corpus_names()) {
            Germ g = lipknot::corpus_germ(name);
            std::string path =
                (std::filesystem::path(cpo.dir) / (name + ".germ.json"))
                    .string();
            lipknot::save_germ_file(g, path);
            files.push_back(
                {{"name", name},
                 {"path", path},
                 {"hash", lipknot::fnv1a64_hex(lipknot::germ_to_json(g))}});
        }
        report.outputs["written"] = files;
        emit_report(report, cpo.quiet);
    });

    auto* corpus_verify = cmd_corpus->add_subcommand(
        "verify", "check every corpus pair against its expected verdict");
    corpus_verify->add_flag("--quiet", cpo.quiet, "print only the payload hash");
    corpus_verify->callback([&]() {
        Report report{"corpus verify"};
        struct Case {
            std::string left_name, right_name, expected;
            Germ left, right;
        };
        std::vector<Case> cases;
        auto add_named = [&](const std::string& l, const std::string& r,
                             const std::string& expected) {
            cases.push_back({l, r, expected, lipknot::corpus_germ(l),
                             lipknot::corpus_germ(r)});
        };
        add_named("ex2.X1", "ex2.X2", "distinguished");
        add_named("ex3.X", "ex3.Y", "distinguished");
        for (int i = 0; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                add_named("twist." + std::to_string(i),
                          "twist." + std::to_string(j), "distinguished");
        const std::vector<std::string> knots{"trefoil", "fig8", "5_1"};
        for (std::size_t i = 0; i < knots.size(); ++i)
            for (std::size_t j = i + 1; j < knots.size(); ++j)
                add_named("universal." + knots[i], "universal." + knots[j],
                          "distinguished");
        for (const auto& name : lipknot::corpus_names()) {
            Germ g = lipknot::corpus_germ(name);
            cases.push_back({name, name, "inconclusive", g, g});
            cases.push_back({name, "mirror(" + name + ")", "inconclusive", g,
                             lipknot::mirror_germ(g)});
        }

        ordered_json rows = ordered_json::array();
        bool all_ok = true;
        for (const auto& c : cases) {
            lipknot::Certificate cert = lipknot::certify(c.left, c.right);
            std::string got = lipknot::verdict_kind_name(cert.overall);
            bool ok = got == c.expected;
            all_ok = all_ok && ok;
            rows.push_back({{"left", c.left_name},
                            {"right", c.right_name},
                            {"expected", c.expected},
                            {"got", got},
                            {"method", first_distinguishing_method(cert)},
                            {"ok", ok}});
        }
        report.outputs["pairs"] = rows;
        report.outputs["all_ok"] = all_ok;
        if (!all_ok) exit_code = 1;
        emit_report(report, cpo.quiet);
    });

    // ---- selftest ----
    auto* cmd_self = app.add_subcommand(
        "selftest", "randomized internal consistency checks");
    cmd_self->require_subcommand(1);
    struct {
        int seed = 1;
        int count = 25;
        bool quiet = false;
    } so;
    auto* self_rm = cmd_self->add_subcommand(
        "reidemeister",
        "Jones and linking numbers must survive random diagram moves");
    self_rm->add_option("--seed", so.seed, "RNG seed (default 1)");
    self_rm->add_option("--count", so.count, "number of diagrams (default 25)");
    self_rm->add_flag("--quiet", so.quiet, "print only the payload hash");
    self_rm->callback([&]() {
        Report report{"selftest reidemeister"};
        report.inputs["seed"] = so.seed;
        report.inputs["count"] = so.count;
        std::mt19937 rng(static_cast<unsigned>(so.seed));
        ordered_json failures = ordered_json::array();
        for (int i = 0; i < so.count; ++i) {
            LinkDiagram d = lipknot::random_braid_diagram(rng, 8);
            lipknot::InvariantProfile before = lipknot::invariant_profile(d);
            std::vector<std::string> moves;
            for (int m = 0; m < 6; ++m)
                moves.push_back(lipknot::random_stabilization(d, rng));
            lipknot::InvariantProfile after = lipknot::invariant_profile(d);
            auto diff = lipknot::profile_difference(before, after);
            if (diff) {
                std::string joined;
                for (const auto& mv : moves)
                    joined += (joined.empty() ? "" : " ") + mv;
                failures.push_back({{"index", i},
                                    {"moves", joined},
                                    {"invariant", diff->invariant},
                                    {"left", diff->left},
                                    {"right", diff->right}});
            }
        }
        report.outputs["checked"] = so.count;
        report.outputs["failures"] = failures;
        report.outputs["ok"] = failures.empty();
        if (!failures.empty()) exit_code = 1;
        emit_report(report, so.quiet);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const lipknot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
