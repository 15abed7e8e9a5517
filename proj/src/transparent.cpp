#include "stg/transparent.hpp"

#include <algorithm>

namespace stg {

namespace {

struct MaximinValue {
  Rational value;
  std::string action;
};

// Worst payoff for the owner of `point` under each action, over `survivors`
// (indices into z); best action wins. nullopt when the point is unassigned in
// every survivor.
std::optional<MaximinValue> maximin_over(const SpacetimeGame& g,
                                         const std::vector<Outcome>& z,
                                         const std::vector<std::size_t>& survivors,
                                         const DecisionPoint& point,
                                         std::size_t owner) {
  std::optional<MaximinValue> best;
  for (const auto& action : point.actions) {
    std::optional<Rational> worst;
    for (std::size_t s : survivors) {
      auto v = z[s].value(point.id);
      if (!v || *v != action) continue;
      const Rational& u = g.payoffs.at(z[s].key()).values[owner];
      if (!worst || u < *worst) worst = u;
    }
    if (!worst) continue;  // no surviving history plays this action
    if (!best || *worst > best->value) best = {*worst, action};
  }
  return best;
}

}  // namespace

std::pair<Rational, std::string> maximin(const SpacetimeGame& g,
                                         const std::vector<Outcome>& surviving,
                                         const std::string& point_id) {
  const DecisionPoint* point = g.find_point(point_id);
  if (!point) throw Error(ErrorCode::UnknownPoint, "unknown point " + point_id);
  std::size_t owner = static_cast<std::size_t>(g.player_index(point->player));
  std::vector<std::size_t> survivors(surviving.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) survivors[i] = i;
  auto best = maximin_over(g, surviving, survivors, *point, owner);
  if (!best)
    throw Error(ErrorCode::Domain,
                "no surviving history decides " + point_id);
  return {best->value, best->action};
}

bool pareto_optimal(const SpacetimeGame& g, const Outcome& o) {
  auto row = g.payoffs.find(o.key());
  if (row == g.payoffs.end())
    throw Error(ErrorCode::UnknownOutcome, "not an outcome of this game: " + o.key());
  const std::vector<Rational>& mine = row->second.values;
  for (const auto& [key, payoff] : g.payoffs) {
    if (key == row->first) continue;
    bool weakly_better = true, strictly_somewhere = false;
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (payoff.values[i] < mine[i]) { weakly_better = false; break; }
      if (payoff.values[i] > mine[i]) strictly_somewhere = true;
    }
    if (weakly_better && strictly_somewhere) return false;
  }
  return true;
}

TransparentResolution pte(const SpacetimeGame& g) {
  TransparentResolution res;
  GenericityResult gen = genericity_check(g);
  if (!gen.generic) {
    res.result = NonGeneric{gen.ties.front()};
    return res;
  }

  const std::vector<Outcome> z = enumerate_outcomes(g);
  std::vector<std::size_t> surviving(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) surviving[i] = i;

  std::map<std::string, std::size_t> owner;
  for (const auto& p : g.points)
    owner[p.id] = static_cast<std::size_t>(g.player_index(p.player));

  std::set<std::string> already_determined;
  int round_index = 1;

  while (!surviving.empty()) {
    // Certainly active: assigned in every surviving history. Roots always
    // qualify; the rest join once their contingency coordinates is settled.
    std::vector<const DecisionPoint*> certainly_active;
    for (const auto& p : g.points) {
      bool in_all = std::all_of(surviving.begin(), surviving.end(),
                                [&](std::size_t s) { return z[s].assigns(p.id); });
      if (in_all) certainly_active.push_back(&p);
    }

    EliminationRound round;
    round.round_index = round_index;
    for (const auto* p : certainly_active) round.certainly_active.push_back(p->id);
    std::sort(round.certainly_active.begin(), round.certainly_active.end());

    for (const auto* p : certainly_active) {
      auto best = maximin_over(g, z, surviving, *p, owner[p->id]);
      round.maximins[p->id] = best->value;  // certainly active => some action survives
    }

    // Simultaneous deletion against the round-start maximins.
    std::vector<std::size_t> next;
    for (std::size_t s : surviving) {
      const Payoff& payoff = g.payoffs.at(z[s].key());
      bool preempted = false;
      for (const auto* p : certainly_active) {
        if (payoff.values[owner[p->id]] < round.maximins[p->id]) {
          preempted = true;
          break;
        }
      }
      if (preempted)
        round.eliminated.push_back(z[s]);
      else
        next.push_back(s);
    }
    if (round.eliminated.empty()) {
      // Elimination has stopped. If several histories survive, a rational-
      // choice shortcut ("every history under a beats every history under the
      // other actions") would be the only way forward; flag any point it
      // would decide that survivor agreement has not. Generic payoffs make a
      // multi-survivor stall impossible, so this stays dead in practice.
      if (surviving.size() > 1) {
        for (const auto* p : certainly_active) {
          if (already_determined.count(p->id)) continue;
          for (const auto& action : p->actions) {
            std::optional<Rational> min_under_action;
            std::optional<Rational> max_elsewhere;
            for (std::size_t s : surviving) {
              const Rational& u = g.payoffs.at(z[s].key()).values[owner[p->id]];
              if (*z[s].value(p->id) == action) {
                if (!min_under_action || u < *min_under_action) min_under_action = u;
              } else if (!max_elsewhere || u > *max_elsewhere) {
                max_elsewhere = u;
              }
            }
            if (min_under_action && max_elsewhere && *min_under_action > *max_elsewhere) {
              round.dominance_gap.push_back(p->id);
              break;
            }
          }
        }
        if (!round.dominance_gap.empty()) res.trace.push_back(std::move(round));
        throw Error(ErrorCode::Domain, "elimination stalled with several survivors");
      }
      break;
    }
    surviving = std::move(next);

    // Newly determined points: all survivors agree on an assigned action.
    if (!surviving.empty()) {
      for (const auto& p : g.points) {
        if (already_determined.count(p.id)) continue;
        auto first = z[surviving.front()].value(p.id);
        if (!first) continue;
        bool agree = std::all_of(surviving.begin(), surviving.end(), [&](std::size_t s) {
          auto v = z[s].value(p.id);
          return v && *v == *first;
        });
        if (agree) {
          round.determined[p.id] = *first;
          already_determined.insert(p.id);
        }
      }
    }

    res.trace.push_back(std::move(round));
    ++round_index;
  }

  if (surviving.empty()) {
    res.result = NoEquilibrium{};
  } else {
    res.result = z[surviving.front()];
  }
  return res;
}

// ---- perfect-information trees ------------------------------------------------

TreeEmbedding embed_extensive(const ExtensiveGame& eg) {
  if (!perfect_information(eg))
    throw Error(ErrorCode::ImperfectInformation,
                "tree embedding needs singleton information sets");
  TreeEmbedding emb;
  emb.game.players = eg.players;

  // Pre-order walk; each decision node becomes one point whose single parent
  // edge records how the node is reached, so activation equals the tree path.
  struct Frame {
    int node;
    std::string parent_point;
    std::string via_action;
    Outcome path;
  };
  std::vector<Frame> stack{{0, "", "", Outcome()}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const ExtTreeNode& node = eg.nodes[f.node];
    if (node.info_set < 0) {
      emb.game.payoffs[f.path.key()] = node.payoff;
      emb.leaf_for_key[f.path.key()] = f.node;
      continue;
    }
    const InformationSet& set = eg.info_sets[node.info_set];
    DecisionPoint point;
    point.id = set.id;
    point.player = set.player;
    point.actions = set.actions;
    if (!f.parent_point.empty())
      point.parents.push_back({f.parent_point, f.via_action});
    emb.game.points.push_back(std::move(point));

    // push in reverse so children are visited in declaration order
    for (std::size_t c = node.children.size(); c-- > 0;) {
      const auto& [action, child] = node.children[c];
      Frame next{child, set.id, action, f.path};
      next.path.assign(set.id, action);
      stack.push_back(std::move(next));
    }
  }
  return emb;
}

TransparentResolution ppe(const ExtensiveGame& eg) {
  TreeEmbedding emb = embed_extensive(eg);
  TransparentResolution inner = pte(emb.game);

  auto leaf_outcome = [&](const Outcome& embedded) {
    return eg.nodes[emb.leaf_for_key.at(embedded.key())].outcome;
  };

  TransparentResolution out;
  out.trace = std::move(inner.trace);
  for (auto& round : out.trace) {
    std::vector<Outcome> translated;
    translated.reserve(round.eliminated.size());
    for (const auto& e : round.eliminated) translated.push_back(leaf_outcome(e));
    std::sort(translated.begin(), translated.end());
    round.eliminated = std::move(translated);
  }
  if (const Outcome* o = inner.outcome()) {
    out.result = leaf_outcome(*o);
  } else if (inner.no_equilibrium()) {
    out.result = NoEquilibrium{};
  } else {
    NonGeneric ng = *inner.non_generic();
    auto to_leaf_key = [&](const std::string& key) {
      return eg.nodes[emb.leaf_for_key.at(key)].outcome.key();
    };
    ng.tie.outcome_a = to_leaf_key(ng.tie.outcome_a);
    ng.tie.outcome_b = to_leaf_key(ng.tie.outcome_b);
    if (ng.tie.outcome_b < ng.tie.outcome_a) std::swap(ng.tie.outcome_a, ng.tie.outcome_b);
    out.result = ng;
  }
  return out;
}

}  // namespace stg
