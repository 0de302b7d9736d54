#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/spaces.hpp"

namespace orlicz {

// Decides X -> Y (continuous embedding of the unit balls up to a constant).
Verdict embeds(const SpaceDescriptor& x, const SpaceDescriptor& y);

enum class Side { Target, Domain };
enum class OutcomeKind { Optimal, NoOptimal, Undecided };

std::string to_string(Side s);
std::string to_string(OutcomeKind k);

struct AlternativeOutcome {
  Side side = Side::Target;
  OutcomeKind kind = OutcomeKind::Undecided;
  std::optional<SpaceDescriptor> space;  // the optimal Orlicz space when kind == Optimal
  Verdict evidence;                      // the embedding verdict the outcome rests on
  std::string relation;                  // the inclusion tested, e.g. "L^{4,2} -> L^4"
  std::string reason;                    // short explanation for NoOptimal / Undecided
  std::vector<std::pair<std::string, std::string>> details;  // extra witnesses for reports

  // "Optimal(L^4)", "NoOptimal" or "Undecided".
  std::string summary() const;
};

AlternativeOutcome outcome_from(Side side, const SpaceDescriptor& candidate, Verdict evidence, std::string relation);

AlternativeOutcome principal_alternative_target(const SpaceDescriptor& y);
AlternativeOutcome principal_alternative_domain(const SpaceDescriptor& x);

// Lorentz-Zygmund coordinates (p, q, alpha) of a space on (0, 1) when its family and
// generator admit them.
struct LzCoordinates {
  double p;
  double q;
  double alpha;
};
std::optional<LzCoordinates> lz_coordinates(const SpaceDescriptor& x);
// Exact embedding rule between Lorentz-Zygmund coordinates on (0, 1).
bool lz_embeds(const LzCoordinates& a, const LzCoordinates& b);

}  // namespace orlicz
