#pragma once

#include "stg/error.hpp"
#include "stg/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stg {

// A game whose decisions sit at points of Minkowski spacetime instead of on a
// tree. Structure:
//   - a list of players,
//   - decision points, each owned by one player and carrying an ordered set of
//     at least two actions, optionally a spacetime position,
//   - contingency edges between points, forming a DAG: edge (N -> M, a) means
//     "M is reached only if N is reached and the decision at N is a",
//   - a payoff table keyed by outcome (one exact rational per player).
//
// A point with no incoming edges is a root and is decided in every history.
// A non-root point is decided exactly when all of its parent edges are
// satisfied. Payoffs are required to be complete over the outcome set.

struct MinkowskiPosition {
  Rational t, x, y, z;

  bool operator==(const MinkowskiPosition& o) const {
    return t == o.t && x == o.x && y == o.y && z == o.z;
  }
};

struct ContingencyEdge {
  std::string parent;           // id of the parent decision point
  std::string required_action;  // parent action that activates this edge
};

struct DecisionPoint {
  std::string id;
  std::string player;
  std::vector<std::string> actions;  // ordered, distinct, size >= 2
  std::vector<ContingencyEdge> parents;
  std::optional<MinkowskiPosition> position;
};

// One row of the payoff table; values are aligned with SpacetimeGame::players.
struct Payoff {
  std::vector<Rational> values;

  bool operator==(const Payoff& o) const { return values == o.values; }
};

// Partial assignment of actions to decision points. Unassigned points are the
// points that are not reached in this history. The canonical key is the
// assigned (id, action) pairs sorted by id and joined as "id=action,...";
// outcome enumeration and payoff-table keys use exactly this string.
class Outcome {
 public:
  Outcome() = default;
  explicit Outcome(std::map<std::string, std::string> assignment)
      : assignment_(std::move(assignment)) {}

  void assign(const std::string& id, const std::string& action) {
    assignment_[id] = action;
  }

  // nullopt = the point is not reached in this history.
  std::optional<std::string> value(const std::string& id) const;
  bool assigns(const std::string& id) const { return assignment_.count(id) > 0; }

  const std::map<std::string, std::string>& assignment() const { return assignment_; }
  std::size_t size() const { return assignment_.size(); }

  std::string key() const;

  bool operator==(const Outcome& o) const { return assignment_ == o.assignment_; }
  bool operator!=(const Outcome& o) const { return assignment_ != o.assignment_; }
  bool operator<(const Outcome& o) const { return assignment_ < o.assignment_; }

 private:
  std::map<std::string, std::string> assignment_;
};

struct SpacetimeGame {
  std::vector<std::string> players;
  std::vector<DecisionPoint> points;  // declaration order is meaningful (tie-breaks)
  std::map<std::string, Payoff> payoffs;  // canonical outcome key -> payoff

  const DecisionPoint* find_point(const std::string& id) const;
  // Index into `points`, -1 when absent.
  int point_index(const std::string& id) const;
  // Index into `players`, -1 when absent.
  int player_index(const std::string& name) const;
};

// ---- validation ------------------------------------------------------------

struct Violation {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string code;     // short machine tag: "cycle", "bad-label", ...
  std::string subject;  // offending id / key, empty when global
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Pure, idempotent. Checks: player/point id uniqueness and non-emptiness,
// action arity >= 2 and distinctness, edge targets exist with legal labels,
// acyclicity, payoff-table completeness (exactly one row per outcome, one
// value per player), and, when every point is positioned, consistency of the
// edge relation with the light-cone order (edges future-directed causal, every
// causally ordered pair inside the transitive closure of the edges).
// Dead points (never reached in any outcome) are legal and reported as
// warnings. A game is valid iff the report holds no Error entries.
ValidationReport validate_game(const SpacetimeGame& g);
bool is_valid(const ValidationReport& report);

// ---- causal structure ------------------------------------------------------

// Strict partial order induced by the positions: (B, A) means B is in the past
// light cone of A, boundary included, tip excluded:
//   t(A) > t(B)  and  (dt)^2 >= dx^2 + dy^2 + dz^2.
// Lightlike separation counts as causal. Requires a position on every point;
// throws DuplicatePosition if two points share a position.
std::set<std::pair<std::string, std::string>> causal_order_from_positions(
    const SpacetimeGame& g);

// Transitive closure of the contingency-edge relation, as (ancestor, descendant).
std::set<std::pair<std::string, std::string>> edge_closure(const SpacetimeGame& g);

// True iff the decision at `a` sits in the strict causal future of `b`:
// positions are used when every point has one, the edge DAG otherwise.
bool causally_ordered(const SpacetimeGame& g, const std::string& b, const std::string& a);

// Topological order of the points; ready points are taken in declaration
// order, so the result is deterministic. Throws Validation on a cycle.
std::vector<std::string> topological_order(const SpacetimeGame& g);

// ---- genericity ------------------------------------------------------------

struct PayoffTie {
  std::string player;
  std::string outcome_a, outcome_b;  // canonical keys, a < b
};

struct GenericityResult {
  bool generic = true;
  std::vector<PayoffTie> ties;  // deterministic order, empty iff generic
};

// Generic position = for each single player, payoffs are pairwise distinct
// across all outcomes. Ties across different players are fine. Exact
// comparison; there is no tolerance to tune.
GenericityResult genericity_check(const SpacetimeGame& g);

}  // namespace stg
