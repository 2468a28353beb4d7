// SVG renderer: Tutte barycentric layout with circle fallback, cubic-Bezier
// edges, white-disc under-gaps with over-strand stubs, decoration chords.
#include "lipknot/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "lipknot/errors.hpp"

namespace lipknot {
namespace {

struct P {
    double x = 0.0;
    double y = 0.0;
};

P operator+(P a, P b) { return {a.x + b.x, a.y + b.y}; }
P operator-(P a, P b) { return {a.x - b.x, a.y - b.y}; }
P operator*(P a, double s) { return {a.x * s, a.y * s}; }

double norm(P a) { return std::sqrt(a.x * a.x + a.y * a.y); }

P unit_or(P a, P fallback) {
    double n = norm(a);
    if (n < 1e-9) return fallback;
    return a * (1.0 / n);
}

P rot(P a, double deg) {
    double r = deg * 3.14159265358979323846 / 180.0;
    double c = std::cos(r), s = std::sin(r);
    return {a.x * c - a.y * s, a.x * s + a.y * c};
}

std::string fmt(double v) {
    if (std::fabs(v) < 0.005) v = 0.0;  // avoid "-0.00"
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

// Cubic Bezier with de Casteljau subdivision.
struct Cubic {
    P a, c1, c2, b;

    P eval(double t) const {
        double u = 1.0 - t;
        P p = a * (u * u * u) + c1 * (3 * u * u * t) + c2 * (3 * u * t * t) +
              b * (t * t * t);
        return p;
    }

    double approx_len() const {
        double len = 0.0;
        P prev = a;
        for (int i = 1; i <= 16; ++i) {
            P cur = eval(i / 16.0);
            len += norm(cur - prev);
            prev = cur;
        }
        return len;
    }

    Cubic sub(double t0, double t1) const {
        // Split off [t0, 1], then [0, s] of the remainder.
        auto split_tail = [](const Cubic& c, double t) {
            P ab = c.a + (c.c1 - c.a) * t;
            P bc = c.c1 + (c.c2 - c.c1) * t;
            P cd = c.c2 + (c.b - c.c2) * t;
            P abbc = ab + (bc - ab) * t;
            P bccd = bc + (cd - bc) * t;
            P mid = abbc + (bccd - abbc) * t;
            return Cubic{mid, bccd, cd, c.b};
        };
        auto split_head = [](const Cubic& c, double t) {
            P ab = c.a + (c.c1 - c.a) * t;
            P bc = c.c1 + (c.c2 - c.c1) * t;
            P cd = c.c2 + (c.b - c.c2) * t;
            P abbc = ab + (bc - ab) * t;
            P bccd = bc + (cd - bc) * t;
            P mid = abbc + (bccd - abbc) * t;
            return Cubic{c.a, ab, abbc, mid};
        };
        Cubic tail = split_tail(*this, t0);
        double s = (t1 - t0) / (1.0 - t0);
        return split_head(tail, s);
    }

    std::string path() const {
        return "M " + fmt(a.x) + " " + fmt(a.y) + " C " + fmt(c1.x) + " " +
               fmt(c1.y) + ", " + fmt(c2.x) + " " + fmt(c2.y) + ", " +
               fmt(b.x) + " " + fmt(b.y);
    }
};

constexpr double kSize = 500.0;
constexpr P kCenter{250.0, 250.0};
constexpr double kRadius = 200.0;

std::vector<P> circle_layout(int n) {
    std::vector<P> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double ang = (-90.0 + 360.0 * i / n) * 3.14159265358979323846 / 180.0;
        pos[static_cast<size_t>(i)] = {kCenter.x + kRadius * std::cos(ang),
                                       kCenter.y + kRadius * std::sin(ang)};
    }
    return pos;
}

// Solve the barycentric system for interior vertices; returns false on a
// (near-)singular system, in which case the caller falls back to a circle.
bool solve_tutte(const std::vector<std::map<int, int>>& adj,
                 const std::vector<int>& boundary, std::vector<P>& pos) {
    int n = static_cast<int>(adj.size());
    std::vector<bool> pinned(static_cast<size_t>(n), false);
    for (int b : boundary) pinned[static_cast<size_t>(b)] = true;
    std::vector<int> interior;
    for (int v = 0; v < n; ++v)
        if (!pinned[static_cast<size_t>(v)]) interior.push_back(v);
    if (interior.empty()) return true;

    std::vector<int> index(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < interior.size(); ++i)
        index[static_cast<size_t>(interior[i])] = static_cast<int>(i);

    size_t m = interior.size();
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 2, 0.0));
    for (size_t i = 0; i < m; ++i) {
        int v = interior[i];
        double deg = 0.0;
        for (const auto& [u, w] : adj[static_cast<size_t>(v)]) {
            deg += w;
            if (pinned[static_cast<size_t>(u)]) {
                a[i][m] += w * pos[static_cast<size_t>(u)].x;
                a[i][m + 1] += w * pos[static_cast<size_t>(u)].y;
            } else {
                a[i][static_cast<size_t>(index[static_cast<size_t>(u)])] -= w;
            }
        }
        a[i][i] += deg;
        if (deg == 0.0) return false;
    }

    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < m; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-9) return false;
        std::swap(a[piv], a[col]);
        for (size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (size_t c = col; c < m + 2; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (size_t i = 0; i < m; ++i) {
        pos[static_cast<size_t>(interior[i])] = {a[i][m] / a[i][i],
                                                 a[i][m + 1] / a[i][i]};
    }
    return true;
}

std::vector<P> layout_crossings(const LinkDiagram& d,
                                const DiagramAnalysis& a) {
    int n = static_cast<int>(d.crossings().size());
    if (n == 0) return {};
    if (n == 1) return {kCenter};
    if (n == 2) return {P{kCenter.x - 110.0, kCenter.y},
                        P{kCenter.x + 110.0, kCenter.y}};

    // Pick the outer face: most distinct crossings, tie broken by orbit size
    // then by discovery order.
    int best = 0;
    size_t best_distinct = 0, best_darts = 0;
    for (size_t f = 0; f < a.faces.size(); ++f) {
        std::vector<int> cs;
        for (const auto& dart : a.faces[f]) cs.push_back(dart.crossing);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        if (cs.size() > best_distinct ||
            (cs.size() == best_distinct && a.faces[f].size() > best_darts)) {
            best = static_cast<int>(f);
            best_distinct = cs.size();
            best_darts = a.faces[f].size();
        }
    }

    std::vector<int> boundary;
    for (const auto& dart : a.faces[static_cast<size_t>(best)]) {
        if (std::find(boundary.begin(), boundary.end(), dart.crossing) ==
            boundary.end())
            boundary.push_back(dart.crossing);
    }

    std::vector<P> pos(static_cast<size_t>(n), kCenter);
    if (boundary.size() < 3) return circle_layout(n);
    for (size_t i = 0; i < boundary.size(); ++i) {
        double ang = (-90.0 + 360.0 * static_cast<double>(i) /
                                  static_cast<double>(boundary.size())) *
                     3.14159265358979323846 / 180.0;
        pos[static_cast<size_t>(boundary[i])] = {
            kCenter.x + kRadius * std::cos(ang),
            kCenter.y + kRadius * std::sin(ang)};
    }

    std::vector<std::map<int, int>> adj(static_cast<size_t>(n));
    for (const auto& [label, info] : a.edges) {
        (void)label;
        if (info.tail.crossing == info.head.crossing) continue;
        adj[static_cast<size_t>(info.tail.crossing)][info.head.crossing] += 1;
        adj[static_cast<size_t>(info.head.crossing)][info.tail.crossing] += 1;
    }
    if (!solve_tutte(adj, boundary, pos)) return circle_layout(n);

    // Collapsed interior (e.g. repeated edges overpowering the pinning) makes
    // an unreadable picture; fall back if any two crossings nearly coincide.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (norm(pos[static_cast<size_t>(i)] -
                     pos[static_cast<size_t>(j)]) < 4.0)
                return circle_layout(n);
    return pos;
}

}  // namespace

std::string render_svg(const Germ& g) {
    const LinkDiagram& d = g.diagram;
    DiagramAnalysis a = analyze(d);
    std::vector<P> pos = layout_crossings(d, a);

    // Build one cubic per edge; bow parallel edges apart, loop self-edges.
    std::map<int, Cubic> curves;
    std::map<std::pair<int, int>, std::vector<int>> grouped;
    for (const auto& [label, info] : a.edges) {
        int u = std::min(info.tail.crossing, info.head.crossing);
        int v = std::max(info.tail.crossing, info.head.crossing);
        grouped[{u, v}].push_back(label);
    }
    for (const auto& [key, labels] : grouped) {
        int k = static_cast<int>(labels.size());
        for (int i = 0; i < k; ++i) {
            int label = labels[static_cast<size_t>(i)];
            const EdgeInfo& info = a.edges.at(label);
            P pt = pos[static_cast<size_t>(info.tail.crossing)];
            P ph = pos[static_cast<size_t>(info.head.crossing)];
            if (key.first == key.second) {
                // Self-loop: petal pointing away from the canvas center.
                P dir = unit_or(pt - kCenter, P{0.0, -1.0});
                dir = rot(dir, 75.0 * i);
                double reach = 80.0 + 30.0 * i;
                P pa = pt + rot(dir, -35.0) * 7.0;
                P pb = pt + rot(dir, 35.0) * 7.0;
                P ca = pt + rot(dir, -32.0) * reach;
                P cb = pt + rot(dir, 32.0) * reach;
                curves[label] = Cubic{pa, ca, cb, pb};
            } else {
                P base = pos[static_cast<size_t>(key.first)];
                P other = pos[static_cast<size_t>(key.second)];
                P perp = unit_or(rot(other - base, 90.0), P{0.0, -1.0});
                double off = (i - (k - 1) / 2.0) * 34.0;
                P q = (pt + ph) * 0.5 + perp * off;
                P c1 = pt + (q - pt) * (2.0 / 3.0);
                P c2 = ph + (q - ph) * (2.0 / 3.0);
                curves[label] = Cubic{pt, c1, c2, ph};
            }
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
        << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << " "
        << kSize << "\">\n";
    svg << "<rect width=\"" << kSize << "\" height=\"" << kSize
        << "\" fill=\"#ffffff\"/>\n";

    const char* strand = "fill=\"none\" stroke=\"#222222\" stroke-width=\"2.2\"";
    for (const auto& [label, curve] : curves) {
        (void)label;
        svg << "<path d=\"" << curve.path() << "\" " << strand << "/>\n";
    }

    // Under-strand gaps: erase a disc at each crossing, then redraw the stubs
    // of the over strand through it.
    for (size_t c = 0; c < d.crossings().size(); ++c) {
        P p = pos[c];
        svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"7\" fill=\"#ffffff\"/>\n";
        int ci = static_cast<int>(c);
        for (int slot : {d.over_in_slot(ci), d.over_out_slot(ci)}) {
            int label = d.crossings()[c].e[static_cast<size_t>(slot)];
            const Cubic& curve = curves.at(label);
            const EdgeInfo& info = a.edges.at(label);
            double len = std::max(curve.approx_len(), 1.0);
            double tf = std::min(0.45, 16.0 / len);
            CrossSlot here{ci, slot};
            Cubic stub = (info.tail == here) ? curve.sub(0.0, tf)
                                             : curve.sub(1.0 - tf, 1.0);
            svg << "<path d=\"" << stub.path() << "\" " << strand << "/>\n";
        }
    }

    // Free loops along the bottom edge of the canvas.
    for (int i = 0; i < d.free_loops(); ++i) {
        svg << "<circle cx=\"" << fmt(56.0 + 44.0 * i)
            << "\" cy=\"445.00\" r=\"16\" fill=\"none\" stroke=\"#222222\" "
               "stroke-width=\"2.2\"/>\n";
    }

    // Decoration chords between edge midpoints.
    auto midpoint = [&](int label) { return curves.at(label).eval(0.5); };
    auto chord = [&](int e1, int e2, const char* color,
                     const std::string& text) {
        P m1 = midpoint(e1);
        P m2 = midpoint(e2);
        svg << "<line x1=\"" << fmt(m1.x) << "\" y1=\"" << fmt(m1.y)
            << "\" x2=\"" << fmt(m2.x) << "\" y2=\"" << fmt(m2.y)
            << "\" stroke=\"" << color
            << "\" stroke-width=\"1.4\" stroke-dasharray=\"5 4\"/>\n";
        P mid = (m1 + m2) * 0.5;
        svg << "<text x=\"" << fmt(mid.x + 5.0) << "\" y=\"" << fmt(mid.y - 5.0)
            << "\" font-size=\"11\" font-family=\"monospace\" fill=\"" << color
            << "\">" << escape_text(text) << "</text>\n";
    };
    for (const auto& b : g.bridges) {
        if (curves.count(b.edges[0]) == 0 || curves.count(b.edges[1]) == 0)
            continue;
        chord(b.edges[0], b.edges[1], "#bb2222",
              b.id + " (q=" + b.q.str() + ", beta=" + b.beta.str() + ")");
    }
    for (const auto& p : g.pinches) {
        if (curves.count(p.markers[0]) == 0 || curves.count(p.markers[1]) == 0)
            continue;
        chord(p.markers[0], p.markers[1], "#2255bb",
              "tord=" + p.tangency.str());
    }

    // Edge labels on top, nudged off the curve.
    for (const auto& [label, curve] : curves) {
        P m = curve.eval(0.5);
        P t = curve.eval(0.56) - curve.eval(0.44);
        P off = unit_or(rot(t, 90.0), P{0.0, -1.0}) * 9.0;
        svg << "<text x=\"" << fmt(m.x + off.x) << "\" y=\"" << fmt(m.y + off.y)
            << "\" font-size=\"9\" font-family=\"monospace\" fill=\"#888888\" "
               "text-anchor=\"middle\">"
            << label << "</text>\n";
    }

    if (!g.label.empty()) {
        svg << "<text x=\"12\" y=\"22\" font-size=\"13\" "
               "font-family=\"monospace\" fill=\"#333333\">"
            << escape_text(g.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_svg(const LinkDiagram& d) {
    Germ g;
    g.diagram = d;
    return render_svg(g);
}

}  // namespace lipknot
