#pragma once
// Built-in example germs: the bridge/twist family on a doubly-kinked circle,
// the two pinched granny-knot germs, and the universal germs whose links are
// unknots but whose tangent cones carry arbitrary knots.
#include <string>
#include <vector>

#include "lipknot/germ.hpp"

namespace lipknot {

// "unknot", "trefoil", "fig8", "5_1".
LinkDiagram named_knot(const std::string& name);
std::vector<std::string> knot_names();

std::vector<std::string> corpus_names();
Germ corpus_germ(const std::string& name);

}  // namespace lipknot
