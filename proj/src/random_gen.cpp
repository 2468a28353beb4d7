// Random diagram and random move generation, deterministic per seed.
#include "lipknot/random_gen.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "lipknot/reidemeister.hpp"

namespace lipknot {

LinkDiagram random_braid_diagram(std::mt19937& rng, int max_crossings) {
    int strands = std::uniform_int_distribution<int>(2, 5)(rng);
    int length =
        std::uniform_int_distribution<int>(1, std::max(1, max_crossings))(rng);
    std::string word = "braid " + std::to_string(strands) + ":";
    for (int i = 0; i < length; ++i) {
        int gen = std::uniform_int_distribution<int>(1, strands - 1)(rng);
        bool inverse = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        word += " s" + std::to_string(gen);
        if (inverse) word += "^-1";
    }
    return parse_braid(word);
}

std::string random_stabilization(LinkDiagram& d, std::mt19937& rng) {
    DiagramAnalysis a = analyze(d);
    std::vector<int> edges;
    for (const auto& [label, info] : a.edges) {
        (void)info;
        edges.push_back(label);
    }

    ReidemeisterLocation loc;
    bool want_push =
        !edges.empty() && std::uniform_int_distribution<int>(0, 9)(rng) < 4;
    if (want_push) {
        // A push needs a face bordered by two distinct strands.
        std::vector<std::vector<int>> face_edges;
        for (const auto& face : a.faces) {
            std::set<int> distinct;
            for (const auto& dart : face)
                distinct.insert(
                    d.crossings()[static_cast<std::size_t>(dart.crossing)]
                        .e[static_cast<std::size_t>(dart.slot)]);
            if (distinct.size() >= 2)
                face_edges.emplace_back(distinct.begin(), distinct.end());
            else
                face_edges.emplace_back();
        }
        std::vector<int> candidates;
        for (std::size_t f = 0; f < face_edges.size(); ++f)
            if (face_edges[f].size() >= 2) candidates.push_back(static_cast<int>(f));
        if (!candidates.empty()) {
            int f = candidates[std::uniform_int_distribution<std::size_t>(
                0, candidates.size() - 1)(rng)];
            const auto& pool = face_edges[static_cast<std::size_t>(f)];
            std::size_t i = std::uniform_int_distribution<std::size_t>(
                0, pool.size() - 1)(rng);
            std::size_t j = std::uniform_int_distribution<std::size_t>(
                0, pool.size() - 2)(rng);
            if (j >= i) ++j;
            loc.face = f;
            loc.over_edge = pool[i];
            loc.under_edge = pool[j];
            d = reidemeister(d, "R2+", loc);
            return "R2+";
        }
    }

    loc.sign = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? +1 : -1;
    loc.side = std::uniform_int_distribution<int>(0, 1)(rng);
    if (edges.empty()) {
        loc.on_free_loop = true;
    } else {
        loc.edge = edges[std::uniform_int_distribution<std::size_t>(
            0, edges.size() - 1)(rng)];
    }
    d = reidemeister(d, "R1+", loc);
    return "R1+";
}

}  // namespace lipknot
