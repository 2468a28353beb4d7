#pragma once
// Planar link diagrams in PD form, with orientation resolution, face tracing,
// and the splicing operations the germ calculus is built from.
//
// Conventions: a crossing X[a,b,c,d] lists the four edge labels
// counterclockwise starting from the incoming under-strand edge (slot 0);
// the under-strand leaves at slot 2. The over-strand occupies slots 1 and 3;
// which of those is its incoming end is resolved from the global orientation.
// A crossing is positive when the over-strand enters at slot 3.
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lipknot/errors.hpp"

namespace lipknot {

struct Crossing {
  std::array<int, 4> e{0, 0, 0, 0};
};

struct CrossSlot {
  int crossing = -1;
  int slot = -1;
  auto operator<=>(const CrossSlot&) const = default;
};

struct EdgeInfo {
  CrossSlot tail;  // outgoing occurrence
  CrossSlot head;  // incoming occurrence
};

class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Validates labels, resolves strand orientations, checks sphere planarity.
  static LinkDiagram make(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  // Slot (1 or 3) where the over-strand enters crossing i.
  int over_in_slot(int i) const { return over_in_[static_cast<std::size_t>(i)]; }
  int over_out_slot(int i) const { return 4 - over_in_[static_cast<std::size_t>(i)]; }
  int crossing_sign(int i) const { return over_in_slot(i) == 3 ? +1 : -1; }

  int max_label() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> over_in_;
  int free_loops_ = 0;
};

// Derived combinatorial structure, recomputed on demand.
struct DiagramAnalysis {
  std::map<int, EdgeInfo> edges;
  // Edge-label cycles, ordered by smallest label, each starting at its
  // smallest label. Crossing-free circles are not listed here.
  std::vector<std::vector<int>> components;
  std::map<int, int> component_of;
  // Faces as dart cycles, in canonical order (sorted by smallest dart).
  std::vector<std::vector<CrossSlot>> faces;
};

DiagramAnalysis analyze(const LinkDiagram& d);

// Total circles: edge components plus crossing-free loops. Component indices
// used throughout: 0..k-1 are the edge components in canonical order, then one
// index per free loop.
int total_components(const LinkDiagram& d);

// Per face: (edge label, traversed with its orientation?) incidences in
// boundary order. An edge bordering a face on both sides appears twice.
std::vector<std::vector<std::pair<int, bool>>> face_edge_incidences(const LinkDiagram& d,
                                                                    const DiagramAnalysis& a);

// Text formats -------------------------------------------------------------

// "X[a,b,c,d] ... O O" with whitespace/comma separation; each O is one
// crossing-free loop. Empty text gives the empty diagram.
LinkDiagram parse_pd(const std::string& text);

// "braid <n>: s1 s2^-1 ..." closure of a braid word on n strands.
// Generator si crosses strand i+1 over strand i; exponents allowed.
LinkDiagram parse_braid(const std::string& text);

std::string to_pd_string(const LinkDiagram& d);

// Relabels edges 1..2n in traversal order; serialization of the result is the
// canonical form used for diagram equality.
LinkDiagram canonicalized(const LinkDiagram& d);
std::string canonical_pd(const LinkDiagram& d);
bool same_diagram(const LinkDiagram& a, const LinkDiagram& b);

// Structural operations ----------------------------------------------------

// Switches every crossing (mirror image link).
LinkDiagram mirror(const LinkDiagram& d);

// Reverses the orientation of one component (total-component index).
LinkDiagram reverse_component(const LinkDiagram& d, int comp);

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

struct SpliceResult {
  LinkDiagram diagram;
  // The two strands joining the summands (labels in the result).
  int strand_a = -1;
  int strand_b = -1;
};

// Connected sum joining component ca of a with component cb of b. Optional
// explicit splice edges; defaults are the lowest-labeled edges.
SpliceResult connected_sum(const LinkDiagram& a, int ca, const LinkDiagram& b, int cb,
                           std::optional<int> edge_a = {}, std::optional<int> edge_b = {});

// Keeps one component, letting it pass straight through every crossing shared
// with deleted components.
LinkDiagram extract_component(const LinkDiagram& d, int comp);

// Oriented band smoothing across a face: the heads of anti-parallel co-facial
// edges e1, e2 are exchanged (e1 = u1->v1, e2 = u2->v2 become u1->v2, u2->v1).
// Changes the component count by exactly one.
LinkDiagram band_smooth(const LinkDiagram& d, int e1, int e2, int face);

// True when e1 and e2 each border the face exactly once with opposite
// boundary-traversal sense (i.e. as anti-parallel strands).
bool anti_parallel_on_face(const LinkDiagram& d, const DiagramAnalysis& a, int e1, int e2,
                           int face);

// Lowest-id face on which e1 and e2 are anti-parallel, if any.
std::optional<int> find_band_face(const LinkDiagram& d, const DiagramAnalysis& a, int e1, int e2);

}  // namespace lipknot
