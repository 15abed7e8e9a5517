#include "stg/nash.hpp"

#include <algorithm>

namespace stg {

bool is_nash(const StrategicGame& sg, std::size_t profile_index,
             std::optional<Deviation>* witness) {
  std::vector<std::size_t> per_player = sg.unrank(profile_index);
  for (std::size_t pi = 0; pi < sg.strategy_sets.size(); ++pi) {
    const Rational& current = sg.payoffs[profile_index].values[pi];
    std::vector<std::size_t> candidate = per_player;
    for (std::size_t s = 0; s < sg.strategy_sets[pi].strategies.size(); ++s) {
      if (s == per_player[pi]) continue;
      candidate[pi] = s;
      const Rational& alt = sg.payoffs[sg.rank(candidate)].values[pi];
      if (alt > current) {
        if (witness) {
          Deviation d;
          d.player = sg.players[pi];
          d.player_index = pi;
          d.strategy = sg.strategy_sets[pi].strategies[s];
          d.payoff_before = current;
          d.payoff_after = alt;
          *witness = std::move(d);
        }
        return false;
      }
    }
  }
  if (witness) witness->reset();
  return true;
}

std::vector<std::size_t> pure_nash(const StrategicGame& sg) {
  std::vector<std::size_t> found;
  for (std::size_t index = 0; index < sg.profile_count(); ++index)
    if (is_nash(sg, index)) found.push_back(index);
  return found;
}

std::vector<NashResolution> nash_resolutions(const SpacetimeGame& g) {
  StrategicGame sg = to_strategic(g);
  std::vector<NashResolution> out;
  for (std::size_t index : pure_nash(sg)) {
    NashResolution r;
    r.profile = sg.profile(index);
    r.outcome = sg.outcomes[index];
    r.payoff = sg.payoffs[index];
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Backward induction: value of the subtree for every player, recording the
// chosen action at every decision node on the way.
Payoff induct(const ExtensiveGame& eg, int node_index, StrategyProfile& profile,
              std::map<int, std::string>& chosen) {
  const ExtTreeNode& node = eg.nodes[node_index];
  if (node.info_set < 0) return node.payoff;

  const InformationSet& set = eg.info_sets[node.info_set];
  std::size_t owner = 0;
  for (; owner < eg.players.size(); ++owner)
    if (eg.players[owner] == set.player) break;

  std::optional<Payoff> best;
  std::string best_action;
  for (const auto& [action, child] : node.children) {
    Payoff value = induct(eg, child, profile, chosen);
    if (!best) {
      best = value;
      best_action = action;
      continue;
    }
    if (value.values[owner] == best->values[owner])
      throw Error(ErrorCode::NonGeneric,
                  "backward induction tie for " + set.player + " at " + set.point);
    if (value.values[owner] > best->values[owner]) {
      best = value;
      best_action = action;
    }
  }
  profile.choice[set.id] = best_action;
  chosen[node_index] = best_action;
  return *best;
}

}  // namespace

NashResolution spe(const ExtensiveGame& eg) {
  if (!perfect_information(eg))
    throw Error(ErrorCode::ImperfectInformation,
                "backward induction needs singleton information sets");
  NashResolution r;
  std::map<int, std::string> chosen;
  r.payoff = induct(eg, 0, r.profile, chosen);

  // walk the chosen actions down to the induced leaf
  int node_index = 0;
  while (eg.nodes[node_index].info_set >= 0) {
    const std::string& action = chosen.at(node_index);
    for (const auto& [a, child] : eg.nodes[node_index].children)
      if (a == action) {
        node_index = child;
        break;
      }
  }
  r.outcome = eg.nodes[node_index].outcome;
  return r;
}

}  // namespace stg
