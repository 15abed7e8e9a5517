#include "stg/outcomes.hpp"

#include <algorithm>

namespace stg {

namespace {

// All parent edges satisfied by the partial assignment built so far.
bool edges_satisfied(const DecisionPoint& p, const Outcome& z) {
  for (const auto& e : p.parents) {
    auto v = z.value(e.parent);
    if (!v || *v != e.required_action) return false;
  }
  return true;
}

void enumerate_rec(const SpacetimeGame& g, const std::vector<int>& order,
                   std::size_t depth, Outcome& partial, std::vector<Outcome>& out) {
  if (depth == order.size()) {
    out.push_back(partial);
    return;
  }
  const DecisionPoint& p = g.points[order[depth]];
  if (!edges_satisfied(p, partial)) {
    enumerate_rec(g, order, depth + 1, partial, out);
    return;
  }
  for (const auto& a : p.actions) {
    partial.assign(p.id, a);
    enumerate_rec(g, order, depth + 1, partial, out);
  }
  // undo: reassigning overwrote in place, so drop the key explicitly
  auto assignment = partial.assignment();
  assignment.erase(p.id);
  partial = Outcome(std::move(assignment));
}

}  // namespace

std::vector<Outcome> enumerate_outcomes(const SpacetimeGame& g) {
  std::vector<int> order;
  for (const auto& id : topological_order(g)) order.push_back(g.point_index(id));
  std::vector<Outcome> out;
  Outcome partial;
  enumerate_rec(g, order, 0, partial, out);
  std::sort(out.begin(), out.end(),
            [](const Outcome& a, const Outcome& b) { return a.key() < b.key(); });
  return out;
}

bool is_consistent_assignment(const SpacetimeGame& g, const Outcome& z) {
  for (const auto& [id, action] : z.assignment()) {
    const DecisionPoint* p = g.find_point(id);
    if (p == nullptr)
      throw Error(ErrorCode::UnknownPoint, "assignment names unknown point " + id);
    if (std::find(p->actions.begin(), p->actions.end(), action) == p->actions.end())
      return false;
  }
  for (const auto& p : g.points) {
    bool active = edges_satisfied(p, z);  // roots: vacuously true
    if (active != z.assigns(p.id)) return false;
  }
  return true;
}

Outcome induced_outcome(const SpacetimeGame& g, const StrategyProfile& p) {
  Outcome z;
  for (const auto& id : topological_order(g)) {
    const DecisionPoint& point = g.points[g.point_index(id)];
    if (!edges_satisfied(point, z)) continue;
    auto it = p.choice.find(id);
    if (it == p.choice.end())
      throw Error(ErrorCode::Domain, "profile has no action for active point " + id);
    if (std::find(point.actions.begin(), point.actions.end(), it->second) ==
        point.actions.end())
      throw Error(ErrorCode::Domain,
                  "profile assigns " + it->second + " at " + id +
                      ", not one of its actions");
    z.assign(id, it->second);
  }
  return z;
}

std::set<std::string> live_points(const SpacetimeGame& g) {
  std::set<std::string> live;
  for (const Outcome& z : enumerate_outcomes(g))
    for (const auto& [id, action] : z.assignment()) live.insert(id);
  return live;
}

}  // namespace stg
