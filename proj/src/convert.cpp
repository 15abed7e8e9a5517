#include "stg/convert.hpp"

#include <algorithm>
#include <sstream>

namespace stg {

namespace {

bool edges_satisfied(const DecisionPoint& p, const Outcome& z) {
  for (const auto& e : p.parents) {
    auto v = z.value(e.parent);
    if (!v || *v != e.required_action) return false;
  }
  return true;
}

// The values every causal ancestor of `pid` is pinned to on any branch that
// reaches it: each parent edge forces its label, recursively. nullopt when two
// paths force different values -- such a point is dead and never enters the tree.
std::optional<std::map<std::string, std::string>> forced_ancestors(
    const SpacetimeGame& g, const std::string& pid) {
  std::map<std::string, std::string> forced;
  std::vector<std::string> frontier{pid};
  std::set<std::string> expanded;
  while (!frontier.empty()) {
    std::string cur = frontier.back();
    frontier.pop_back();
    if (!expanded.insert(cur).second) continue;
    const DecisionPoint* p = g.find_point(cur);
    for (const auto& e : p->parents) {
      auto it = forced.find(e.parent);
      if (it != forced.end() && it->second != e.required_action) return std::nullopt;
      forced[e.parent] = e.required_action;
      frontier.push_back(e.parent);
    }
  }
  return forced;
}

struct TreeBuilder {
  const SpacetimeGame& g;
  const std::vector<int>& order;  // point indices in the linear extension
  ExtensiveGame& eg;
  std::map<std::string, int> set_index;  // point id -> info set

  int build(std::size_t depth, Outcome& partial) {
    // skip points that are inactive on this branch
    while (depth < order.size() &&
           !edges_satisfied(g.points[order[depth]], partial))
      ++depth;
    if (depth == order.size()) {
      ExtTreeNode leaf;
      leaf.outcome = partial;
      auto row = g.payoffs.find(partial.key());
      if (row == g.payoffs.end())
        throw Error(ErrorCode::Validation,
                    "payoff table has no row for outcome " + partial.key());
      leaf.payoff = row->second;
      eg.nodes.push_back(std::move(leaf));
      return static_cast<int>(eg.nodes.size()) - 1;
    }
    const DecisionPoint& p = g.points[order[depth]];
    int node_index = static_cast<int>(eg.nodes.size());
    eg.nodes.emplace_back();

    auto it = set_index.find(p.id);
    if (it == set_index.end()) {
      InformationSet set;
      set.id = p.id;
      set.point = p.id;
      set.player = p.player;
      set.actions = p.actions;
      auto forced = forced_ancestors(g, p.id);
      // reached in the tree, so the forced values cannot be contradictory
      set.known_ancestors = std::move(*forced);
      eg.info_sets.push_back(std::move(set));
      it = set_index.emplace(p.id, static_cast<int>(eg.info_sets.size()) - 1).first;
    }
    eg.nodes[node_index].info_set = it->second;
    eg.info_sets[it->second].nodes.push_back(node_index);

    for (const auto& a : p.actions) {
      partial.assign(p.id, a);
      int child = build(depth + 1, partial);
      eg.nodes[node_index].children.emplace_back(a, child);
    }
    auto assignment = partial.assignment();
    assignment.erase(p.id);
    partial = Outcome(std::move(assignment));
    return node_index;
  }
};

}  // namespace

ExtensiveGame to_extensive(const SpacetimeGame& g) {
  return to_extensive(g, topological_order(g));
}

ExtensiveGame to_extensive(const SpacetimeGame& g, const std::vector<std::string>& order) {
  // `order` must be a linear extension of the DAG over exactly the points.
  if (order.size() != g.points.size())
    throw Error(ErrorCode::BadOrder, "order must list every decision point once");
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (g.find_point(order[i]) == nullptr)
      throw Error(ErrorCode::BadOrder, "order names unknown point " + order[i]);
    if (!position.emplace(order[i], i).second)
      throw Error(ErrorCode::BadOrder, "order repeats point " + order[i]);
  }
  std::vector<int> indices;
  indices.reserve(order.size());
  for (const auto& id : order) {
    const DecisionPoint* p = g.find_point(id);
    for (const auto& e : p->parents)
      if (position.at(e.parent) > position.at(id))
        throw Error(ErrorCode::BadOrder,
                    "order places " + id + " before its parent " + e.parent);
    indices.push_back(g.point_index(id));
  }

  ExtensiveGame eg;
  eg.players = g.players;
  eg.level_order = order;
  TreeBuilder builder{g, indices, eg, {}};
  Outcome partial;
  builder.build(0, partial);
  return eg;
}

bool perfect_information(const ExtensiveGame& eg) {
  return std::all_of(eg.info_sets.begin(), eg.info_sets.end(),
                     [](const InformationSet& s) { return s.nodes.size() == 1; });
}

// ---- strategic form ---------------------------------------------------------

StrategyProfile StrategicGame::profile(std::size_t index) const {
  std::vector<std::size_t> per_player = unrank(index);
  StrategyProfile p;
  for (std::size_t pi = 0; pi < strategy_sets.size(); ++pi) {
    const PlayerStrategies& ps = strategy_sets[pi];
    const std::vector<int>& strategy = ps.strategies[per_player[pi]];
    for (std::size_t si = 0; si < ps.set_ids.size(); ++si)
      p.choice[ps.set_ids[si]] = set_actions.at(ps.set_ids[si])[strategy[si]];
  }
  return p;
}

std::vector<std::size_t> StrategicGame::unrank(std::size_t index) const {
  std::vector<std::size_t> per_player(strategy_sets.size(), 0);
  for (std::size_t pi = strategy_sets.size(); pi-- > 0;) {
    std::size_t n = strategy_sets[pi].strategies.size();
    per_player[pi] = index % n;
    index /= n;
  }
  return per_player;
}

std::size_t StrategicGame::rank(const std::vector<std::size_t>& per_player) const {
  std::size_t index = 0;
  for (std::size_t pi = 0; pi < strategy_sets.size(); ++pi)
    index = index * strategy_sets[pi].strategies.size() + per_player[pi];
  return index;
}

StrategicGame to_strategic(const SpacetimeGame& g) {
  StrategicGame sg;
  sg.players = g.players;
  std::set<std::string> live = live_points(g);

  for (const auto& player : g.players) {
    PlayerStrategies ps;
    ps.player = player;
    for (const auto& p : g.points)
      if (p.player == player && live.count(p.id)) {
        ps.set_ids.push_back(p.id);
        sg.set_actions[p.id] = p.actions;
      }
    // lexicographic product of action indices, last set fastest
    std::size_t count = 1;
    for (const auto& id : ps.set_ids) count *= sg.set_actions[id].size();
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<int> strategy(ps.set_ids.size(), 0);
      std::size_t rest = s;
      for (std::size_t si = ps.set_ids.size(); si-- > 0;) {
        std::size_t arity = sg.set_actions[ps.set_ids[si]].size();
        strategy[si] = static_cast<int>(rest % arity);
        rest /= arity;
      }
      ps.strategies.push_back(std::move(strategy));
    }
    sg.strategy_sets.push_back(std::move(ps));
  }

  std::size_t total = 1;
  for (const auto& ps : sg.strategy_sets) total *= ps.strategies.size();
  sg.outcomes.reserve(total);
  sg.payoffs.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    StrategyProfile p = sg.profile(index);
    Outcome z = induced_outcome(g, p);
    auto row = g.payoffs.find(z.key());
    if (row == g.payoffs.end())
      throw Error(ErrorCode::Validation,
                  "payoff table has no row for outcome " + z.key());
    sg.outcomes.push_back(std::move(z));
    sg.payoffs.push_back(row->second);
  }
  return sg;
}

// ---- dot rendering ------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string to_dot(const SpacetimeGame& g) {
  std::ostringstream os;
  os << "digraph spacetime_game {\n";
  os << "  rankdir=TB;\n";
  for (const auto& p : g.points) {
    os << "  \"" << dot_escape(p.id) << "\" [label=\"" << dot_escape(p.id) << "\\n"
       << dot_escape(p.player) << ": " << dot_escape(join(p.actions, "|"))
       << "\"];\n";
  }
  for (const auto& p : g.points)
    for (const auto& e : p.parents)
      os << "  \"" << dot_escape(e.parent) << "\" -> \"" << dot_escape(p.id)
         << "\" [label=\"" << dot_escape(e.required_action) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ExtensiveGame& eg) {
  std::ostringstream os;
  os << "digraph extensive_game {\n";
  os << "  rankdir=TB;\n";
  for (std::size_t i = 0; i < eg.nodes.size(); ++i) {
    const ExtTreeNode& node = eg.nodes[i];
    if (node.info_set >= 0) {
      const InformationSet& set = eg.info_sets[node.info_set];
      os << "  t" << i << " [label=\"" << dot_escape(set.point) << "\\n"
         << dot_escape(set.player) << "\"];\n";
    } else {
      std::vector<std::string> values;
      for (const auto& v : node.payoff.values) values.push_back(to_string(v));
      os << "  t" << i << " [shape=box,label=\"" << dot_escape(node.outcome.key())
         << "\\n(" << dot_escape(join(values, ", ")) << ")\"];\n";
    }
  }
  for (std::size_t i = 0; i < eg.nodes.size(); ++i)
    for (const auto& [action, child] : eg.nodes[i].children)
      os << "  t" << i << " -> t" << child << " [label=\"" << dot_escape(action)
         << "\"];\n";
  // dashed link per consecutive pair inside each multi-node information set
  for (const auto& set : eg.info_sets)
    for (std::size_t k = 0; k + 1 < set.nodes.size(); ++k)
      os << "  t" << set.nodes[k] << " -> t" << set.nodes[k + 1]
         << " [style=dashed,dir=none,constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace stg
