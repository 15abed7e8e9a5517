#pragma once

#include "stg/outcomes.hpp"

#include <iosfwd>

namespace stg {

// Conversion of a spacetime game to the two classical representations. The
// extensive form is built over a linear extension of the causal DAG (default:
// topological order with spacelike ties broken by declaration order). The
// strategic form does not depend on any ordering at all.

// One information set per live decision point: the tree nodes where the point
// is decided, all of which agree on the values of the point's causal ancestors
// (those values are forced by the contingency labels).
struct InformationSet {
  std::string id;      // equals the decision-point id
  std::string point;
  std::string player;
  std::vector<std::string> actions;
  std::map<std::string, std::string> known_ancestors;  // ancestor id -> forced value
  std::vector<int> nodes;  // indices of the tree nodes in this set, in tree order
};

struct ExtTreeNode {
  // Decision node when info_set >= 0 (indexes ExtensiveGame::info_sets),
  // leaf otherwise.
  int info_set = -1;
  std::vector<std::pair<std::string, int>> children;  // (action, node index)
  Outcome outcome;  // leaves only
  Payoff payoff;    // leaves only
};

struct ExtensiveGame {
  std::vector<std::string> players;
  std::vector<InformationSet> info_sets;
  std::vector<ExtTreeNode> nodes;         // nodes[0] is the root
  std::vector<std::string> level_order;   // the linear extension used
};

// Builds the tree. `order`, when given, must be a linear extension of the DAG
// over exactly the game's points (else BadOrder). Leaves biject with the
// outcome set; inactive points are skipped on their branches.
ExtensiveGame to_extensive(const SpacetimeGame& g);
ExtensiveGame to_extensive(const SpacetimeGame& g, const std::vector<std::string>& order);

bool perfect_information(const ExtensiveGame& eg);

// Strategic form: per player the strategy list (one action per owned
// information set, enumerated lexicographically by action index, set order =
// point declaration order) and the payoff of every pure profile. Profile index
// is mixed-radix over the player strategy indices, first player slowest.
struct PlayerStrategies {
  std::string player;
  std::vector<std::string> set_ids;
  std::vector<std::vector<int>> strategies;  // action index per set
};

struct StrategicGame {
  std::vector<std::string> players;
  std::vector<PlayerStrategies> strategy_sets;
  std::map<std::string, std::vector<std::string>> set_actions;  // set id -> labels
  std::vector<Outcome> outcomes;  // by profile index
  std::vector<Payoff> payoffs;    // by profile index

  std::size_t profile_count() const { return outcomes.size(); }
  StrategyProfile profile(std::size_t index) const;
  // Per-player strategy indices for a flat profile index and back.
  std::vector<std::size_t> unrank(std::size_t index) const;
  std::size_t rank(const std::vector<std::size_t>& per_player) const;
};

StrategicGame to_strategic(const SpacetimeGame& g);

// Deterministic DOT text. The tree variant draws dashed, unconstrained links
// between consecutive nodes of every multi-node information set.
std::string to_dot(const SpacetimeGame& g);
std::string to_dot(const ExtensiveGame& eg);

}  // namespace stg
