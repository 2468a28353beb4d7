#pragma once
// Deterministic SVG rendering of diagrams and decorated germs: planar layout
// via barycentric (Tutte) embedding pinned to the largest face, under-strand
// gaps at crossings, bowed parallel edges, and dashed decoration chords.
#include <string>

#include "lipknot/germ.hpp"

namespace lipknot {

std::string render_svg(const Germ& g);
std::string render_svg(const LinkDiagram& d);

}  // namespace lipknot
