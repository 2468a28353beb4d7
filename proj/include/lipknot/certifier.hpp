#pragma once
// Non-equivalence certification for germ pairs. Two tests are available: the
// tangent-cone comparison (pinched profiles) and the bridge-break test
// (break every bridge at a common exponent p > q, then compare link
// profiles). Both quotient by mirror images before declaring a difference,
// and both record a replayable trace.
#include <optional>
#include <string>
#include <vector>

#include "lipknot/germ.hpp"
#include "lipknot/invariants.hpp"

namespace lipknot {

struct Witness {
  std::string invariant;
  std::string left;
  std::string right;
};

enum class VerdictKind { Distinguished, Inconclusive };

std::string verdict_kind_name(VerdictKind k);

struct Verdict {
  std::string method;  // "sampaio" or "bridge_break"
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<Witness> witness;
  std::string note;
};

struct PinchedProfile {
  int circle_count = 0;
  std::vector<LaurentPoly> circle_jones;                  // sorted multiset
  std::vector<std::vector<LaurentPoly>> pinch_signature;  // per pinch, sorted

  std::string str() const;
};

PinchedProfile pinched_profile(const PinchedLink& link, int max_crossings = kBracketLimit);
PinchedProfile mirror_pinched_profile(const PinchedProfile& p);
std::optional<Witness> pinched_difference(const PinchedProfile& a, const PinchedProfile& b);

// Compares the links of the tangent cones circle by circle. Linking numbers
// between circles are not part of the comparison: cutting the link at its
// pinch points forgets how the pieces wound around each other.
Verdict sampaio_test(const Germ& a, const Germ& b);

// Breaks every bridge site at a common exponent p exceeding every q (default:
// max q + 1) and compares the resulting link profiles. Site signatures
// ((q, beta) multisets) must match first; a mismatch is itself a difference.
Verdict bridge_break_test(const Germ& a, const Germ& b, std::optional<Rational> p = {});

struct TraceEntry {
  std::string op;
  std::string subject;      // "left" / "right" / ""
  std::string result_hash;  // FNV-1a 64 over the canonical result text
};

struct Certificate {
  std::string left_label;
  std::string right_label;
  std::string left_hash;   // hash of the canonical germ JSON
  std::string right_hash;
  std::vector<Verdict> verdicts;
  VerdictKind overall = VerdictKind::Inconclusive;
  bool mirror_checked = true;
  std::vector<TraceEntry> trace;
};

// Runs sampaio always and bridge_break when either germ has bridge sites.
Certificate certify(const Germ& a, const Germ& b, std::optional<Rational> p = {});

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// Recomputes every traced step from the germs; returns human-readable
// mismatch descriptions (empty list = certificate reproduces exactly).
std::vector<std::string> replay_certificate(const Certificate& c, const Germ& a, const Germ& b,
                                            std::optional<Rational> p = {});

}  // namespace lipknot
