#pragma once
// Link invariants computed from PD diagrams: writhe, linking numbers, the
// Kauffman bracket (state-sum and strand-contraction forms), the Jones
// polynomial, a numerical Gauss linking integral, and the combined profile
// used to compare links.
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lipknot/diagram.hpp"
#include "lipknot/laurent.hpp"

namespace lipknot {

inline constexpr int kBracketLimit = 24;       // contraction algorithm default
inline constexpr int kBruteBracketLimit = 16;  // 2^n state-sum default

int writhe(const LinkDiagram& d);

// Half the signed count of crossings between two distinct total-component
// indices; pairs involving crossing-free circles link zero times.
std::int64_t linking_number(const LinkDiagram& d, int ci, int cj);

// Kauffman bracket in A, normalized so a single circle gives 1 (the empty
// diagram also gives 1). The bruteforce form sums all 2^n smoothings; the
// other contracts crossings along a frontier and handles more crossings.
LaurentPoly kauffman_bracket_bruteforce(const LinkDiagram& d, int max_crossings = kBruteBracketLimit);
LaurentPoly kauffman_bracket(const LinkDiagram& d, int max_crossings = kBracketLimit);

// (-A)^(-3w) times the bracket, written in t = A^(-4).
LaurentPoly jones(const LinkDiagram& d, int max_crossings = kBracketLimit);

// Gauss linking integral of two disjoint closed polylines, via exact solid
// angles of segment pairs. Throws when the curves come closer than min_sep.
double gauss_linking_integral(const std::vector<std::array<double, 3>>& a,
                              const std::vector<std::array<double, 3>>& b,
                              double min_sep = 1e-7);

struct InvariantProfile {
  int component_count = 0;
  std::vector<LaurentPoly> component_jones;     // sorted multiset
  std::vector<std::int64_t> pairwise_linking;   // sorted multiset
  LaurentPoly whole_jones{"t"};

  std::string str() const;
};

InvariantProfile invariant_profile(const LinkDiagram& d, int max_crossings = kBracketLimit);

// Profile of the mirror-image link: Jones variables invert, linkings negate.
InvariantProfile mirror_profile(const InvariantProfile& p);

struct ProfileDifference {
  std::string invariant;
  std::string left;
  std::string right;
};

// First field (component count, per-component Jones multiset, pairwise
// linking numbers, whole-link Jones) where the profiles disagree.
std::optional<ProfileDifference> profile_difference(const InvariantProfile& a,
                                                    const InvariantProfile& b);

}  // namespace lipknot
