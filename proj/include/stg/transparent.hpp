#pragma once

#include "stg/convert.hpp"

#include <variant>

namespace stg {

// Transparent (perfectly predicted) equilibria. Instead of fixing opponents
// and checking deviations, the solver iteratively deletes histories that some
// certainly-reached decision maker can preempt: a player who sees the whole
// game and is seen deciding by everyone never lets a history happen that pays
// them less than what they can guarantee by choice alone.
//
// Round structure (fixed; the trace mirrors it):
//   1. For every certainly-active point d and action a, m(d,a) is the worst
//      payoff for d's owner among surviving histories with d = a (actions with
//      no survivors are skipped). maximin(d) = max_a m(d,a).
//   2. All histories paying some certainly-active owner strictly less than
//      that owner's maximin are deleted simultaneously.
//   3. Points on which all survivors agree become determined; every point
//      whose contingency coordinates now hold in every survivor becomes
//      certainly active for the following rounds.
// Rounds repeat until one deletes nothing. Elimination can only raise a
// point's maximin while it stays certainly active, never lower it.

struct EliminationRound {
  int round_index = 0;  // 1-based
  std::vector<std::string> certainly_active;          // round-start, sorted
  std::map<std::string, Rational> maximins;           // per certainly-active point
  std::vector<Outcome> eliminated;                    // canonical-key order
  std::map<std::string, std::string> determined;      // newly forced this round
  // Points a dominance shortcut would have decided although the survivors
  // still disagree on them. Tracked to document that elimination alone already
  // subsumes dominance; expected empty in generic position.
  std::vector<std::string> dominance_gap;
};

struct NoEquilibrium {
  bool operator==(const NoEquilibrium&) const { return true; }
};

struct NonGeneric {
  PayoffTie tie;  // one witnessing per-player payoff tie
};

struct TransparentResolution {
  std::variant<Outcome, NoEquilibrium, NonGeneric> result;
  std::vector<EliminationRound> trace;  // rounds that deleted something

  const Outcome* outcome() const { return std::get_if<Outcome>(&result); }
  bool no_equilibrium() const { return std::holds_alternative<NoEquilibrium>(result); }
  const NonGeneric* non_generic() const { return std::get_if<NonGeneric>(&result); }
};

// The equilibrium of the spacetime game itself. Genericity is checked up
// front (NonGeneric short-circuits with an empty trace). Returns the unique
// survivor, or NoEquilibrium when the deletions crossed out everything.
TransparentResolution pte(const SpacetimeGame& g);

// Worst-case-best-action value for one point over a set of surviving
// histories: returns maximin value and the action attaining it. Survivors are
// given by indices into enumerate_outcomes(g). Throws Domain if no action has
// a surviving history with the point assigned.
std::pair<Rational, std::string> maximin(const SpacetimeGame& g,
                                         const std::vector<Outcome>& surviving,
                                         const std::string& point_id);

// True iff no other outcome in the table weakly dominates o (>= for every
// player, > for at least one). Throws UnknownOutcome when o is not in Z.
bool pareto_optimal(const SpacetimeGame& g, const Outcome& o);

// Perfect-information trees re-expressed as spacetime games: one point per
// decision node, one contingency edge to the parent node labeled with the
// branch action, leaf payoffs keyed by the path. `leaf_for_key` maps an
// embedding outcome back to the tree leaf it describes.
struct TreeEmbedding {
  SpacetimeGame game;
  std::map<std::string, int> leaf_for_key;  // embedding outcome key -> leaf node
};

TreeEmbedding embed_extensive(const ExtensiveGame& eg);

// Transparent equilibrium of a perfect-information tree: pte of the embedding,
// with results and trace translated back to the tree's own outcomes. Exists
// for every tree in generic position. Throws ImperfectInformation when a set
// has more than one node.
TransparentResolution ppe(const ExtensiveGame& eg);

}  // namespace stg
