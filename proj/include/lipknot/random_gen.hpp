#pragma once
// Seeded random inputs for property testing: random braid-closure diagrams
// and random diagram stabilizations (kink and strand-push insertions).
#include <random>
#include <string>

#include "lipknot/diagram.hpp"

namespace lipknot {

// Closure of a random braid word on 2..5 strands with at most max_crossings
// letters; every output is a valid planar diagram.
LinkDiagram random_braid_diagram(std::mt19937& rng, int max_crossings);

// Applies one random invariance-preserving move (R1+ kink or R2+ push) in
// place and returns the move name.
std::string random_stabilization(LinkDiagram& d, std::mt19937& rng);

}  // namespace lipknot
