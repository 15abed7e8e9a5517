#pragma once

#include "stg/game.hpp"

namespace stg {

// The outcome set Z of a game: every partial assignment z such that
//   (1) every root point is assigned, and
//   (2) a non-root point M is assigned iff, for every edge (N, M), z(N) equals
//       the edge label -- i.e. all of M's parents are reached and chose the
//       activating action.
// Assigned actions always belong to the point's action set.

// Enumerates Z sorted lexicographically by canonical key. Requires a valid
// game structure (acyclic, legal labels); payoff completeness is not needed.
std::vector<Outcome> enumerate_outcomes(const SpacetimeGame& g);

// Declarative membership test for the two constraints above. Returns false on
// any violation, including assigned actions outside the action set. Throws
// UnknownPoint if z mentions an id the game does not have.
bool is_consistent_assignment(const SpacetimeGame& g, const Outcome& z);

// A pure strategy: one action per information set. Information sets are in
// one-to-one correspondence with the live (non-dead) decision points of the
// game -- every path that reaches a point pins all of its causal ancestors to
// the same values -- so the map is keyed by decision-point id.
struct StrategyProfile {
  std::map<std::string, std::string> choice;

  bool operator==(const StrategyProfile& o) const { return choice == o.choice; }
  bool operator<(const StrategyProfile& o) const { return choice < o.choice; }
};

// Plays the profile: roots take their chosen action, activation propagates
// along satisfied edges, unreached points stay unassigned. Total profiles over
// the live points always yield an element of Z. Throws Domain if the profile
// misses (or mislabels) a point that becomes active.
Outcome induced_outcome(const SpacetimeGame& g, const StrategyProfile& p);

// Points assigned in at least one outcome. Everything else is dead weight the
// validator warns about; strategies do not cover dead points.
std::set<std::string> live_points(const SpacetimeGame& g);

}  // namespace stg
