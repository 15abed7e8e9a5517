#include "stg/game.hpp"

#include "stg/outcomes.hpp"

#include <algorithm>
#include <sstream>

namespace stg {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::UnknownPoint: return "unknown-point";
    case ErrorCode::UnknownOutcome: return "unknown-outcome";
    case ErrorCode::DuplicatePosition: return "duplicate-position";
    case ErrorCode::BadOrder: return "bad-order";
    case ErrorCode::ImperfectInformation: return "imperfect-information";
    case ErrorCode::NonGeneric: return "non-generic";
    case ErrorCode::NoEquilibrium: return "no-equilibrium";
    case ErrorCode::MissingSettingPair: return "missing-setting-pair";
    case ErrorCode::Domain: return "domain";
  }
  return "unknown";
}

std::optional<std::string> Outcome::value(const std::string& id) const {
  auto it = assignment_.find(id);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

std::string Outcome::key() const {
  std::string out;
  for (const auto& [id, action] : assignment_) {
    if (!out.empty()) out += ',';
    out += id;
    out += '=';
    out += action;
  }
  return out;
}

const DecisionPoint* SpacetimeGame::find_point(const std::string& id) const {
  for (const auto& p : points)
    if (p.id == id) return &p;
  return nullptr;
}

int SpacetimeGame::point_index(const std::string& id) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].id == id) return static_cast<int>(i);
  return -1;
}

int SpacetimeGame::player_index(const std::string& name) const {
  for (std::size_t i = 0; i < players.size(); ++i)
    if (players[i] == name) return static_cast<int>(i);
  return -1;
}

// ---- topological order / closure --------------------------------------------

std::vector<std::string> topological_order(const SpacetimeGame& g) {
  const std::size_t n = g.points.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> children(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : g.points[i].parents) {
      int pi = g.point_index(e.parent);
      if (pi < 0 || static_cast<std::size_t>(pi) == i) continue;  // validator's business
      children[pi].push_back(static_cast<int>(i));
      ++indegree[i];
    }
  }
  std::vector<std::string> order;
  order.reserve(n);
  std::vector<bool> emitted(n, false);
  // Kahn's algorithm; among ready points always the lowest declaration index,
  // so spacelike ties resolve deterministically.
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!emitted[i] && indegree[i] == 0) {
        pick = static_cast<int>(i);
        break;
      }
    }
    if (pick < 0) throw Error(ErrorCode::Validation, "contingency edges form a cycle");
    emitted[pick] = true;
    order.push_back(g.points[pick].id);
    for (int c : children[pick]) --indegree[c];
  }
  return order;
}

std::set<std::pair<std::string, std::string>> edge_closure(const SpacetimeGame& g) {
  const std::size_t n = g.points.size();
  // reach[i] = set of ancestor indices of i, built along a topological order.
  std::vector<std::set<int>> ancestors(n);
  std::vector<std::string> order = topological_order(g);
  for (const auto& id : order) {
    int i = g.point_index(id);
    for (const auto& e : g.points[i].parents) {
      int pi = g.point_index(e.parent);
      if (pi < 0) continue;
      ancestors[i].insert(pi);
      ancestors[i].insert(ancestors[pi].begin(), ancestors[pi].end());
    }
  }
  std::set<std::pair<std::string, std::string>> closure;
  for (std::size_t i = 0; i < n; ++i)
    for (int a : ancestors[i]) closure.emplace(g.points[a].id, g.points[i].id);
  return closure;
}

namespace {

bool all_positioned(const SpacetimeGame& g) {
  return std::all_of(g.points.begin(), g.points.end(),
                     [](const DecisionPoint& p) { return p.position.has_value(); });
}

// Past-light-cone membership, boundary included, tip excluded.
bool lightcone_ordered(const MinkowskiPosition& past, const MinkowskiPosition& future) {
  Rational dt = future.t - past.t;
  if (dt <= 0) return false;
  Rational dx = future.x - past.x;
  Rational dy = future.y - past.y;
  Rational dz = future.z - past.z;
  return dt * dt >= dx * dx + dy * dy + dz * dz;
}

}  // namespace

std::set<std::pair<std::string, std::string>> causal_order_from_positions(
    const SpacetimeGame& g) {
  for (const auto& p : g.points)
    if (!p.position)
      throw Error(ErrorCode::Domain, "point " + p.id + " has no position");
  for (std::size_t i = 0; i < g.points.size(); ++i)
    for (std::size_t j = i + 1; j < g.points.size(); ++j)
      if (*g.points[i].position == *g.points[j].position)
        throw Error(ErrorCode::DuplicatePosition,
                    "points " + g.points[i].id + " and " + g.points[j].id +
                        " share a position");
  std::set<std::pair<std::string, std::string>> order;
  for (const auto& b : g.points)
    for (const auto& a : g.points)
      if (&a != &b && lightcone_ordered(*b.position, *a.position))
        order.emplace(b.id, a.id);
  return order;
}

bool causally_ordered(const SpacetimeGame& g, const std::string& b, const std::string& a) {
  if (a == b) return false;
  if (all_positioned(g)) {
    const DecisionPoint* pa = g.find_point(a);
    const DecisionPoint* pb = g.find_point(b);
    if (!pa || !pb) throw Error(ErrorCode::UnknownPoint, "unknown point id");
    return lightcone_ordered(*pb->position, *pa->position);
  }
  return edge_closure(g).count({b, a}) > 0;
}

// ---- genericity --------------------------------------------------------------

GenericityResult genericity_check(const SpacetimeGame& g) {
  GenericityResult result;
  for (std::size_t pi = 0; pi < g.players.size(); ++pi) {
    // Sort (value, key) so ties sit next to each other; report each tying
    // adjacent pair once, deterministically.
    std::vector<std::pair<Rational, std::string>> column;
    column.reserve(g.payoffs.size());
    for (const auto& [key, payoff] : g.payoffs) {
      if (pi < payoff.values.size()) column.emplace_back(payoff.values[pi], key);
    }
    std::sort(column.begin(), column.end());
    for (std::size_t i = 0; i + 1 < column.size(); ++i) {
      if (column[i].first == column[i + 1].first) {
        PayoffTie tie;
        tie.player = g.players[pi];
        tie.outcome_a = std::min(column[i].second, column[i + 1].second);
        tie.outcome_b = std::max(column[i].second, column[i + 1].second);
        result.ties.push_back(std::move(tie));
      }
    }
  }
  result.generic = result.ties.empty();
  return result;
}

// ---- validation ----------------------------------------------------------------

namespace {

void add(ValidationReport& r, Violation::Severity sev, std::string code,
         std::string subject, std::string message) {
  r.push_back({sev, std::move(code), std::move(subject), std::move(message)});
}

}  // namespace

ValidationReport validate_game(const SpacetimeGame& g) {
  ValidationReport report;
  const auto err = Violation::Severity::Error;
  const auto warn = Violation::Severity::Warning;

  if (g.players.empty()) add(report, err, "no-players", "", "game declares no players");
  std::set<std::string> seen_players;
  for (const auto& name : g.players) {
    if (name.empty()) add(report, err, "empty-name", "", "empty player name");
    if (!seen_players.insert(name).second)
      add(report, err, "duplicate-player", name, "player declared twice: " + name);
  }

  if (g.points.empty())
    add(report, err, "no-points", "", "game declares no decision points");

  std::set<std::string> seen_points;
  for (const auto& p : g.points) {
    if (p.id.empty()) add(report, err, "empty-id", "", "empty decision point id");
    if (!seen_points.insert(p.id).second)
      add(report, err, "duplicate-point", p.id, "decision point declared twice: " + p.id);
    if (g.player_index(p.player) < 0)
      add(report, err, "unknown-player", p.id,
          "point " + p.id + " names unknown player " + p.player);
    if (p.actions.size() < 2)
      add(report, err, "arity", p.id,
          "point " + p.id + " needs at least two actions");
    std::set<std::string> actions(p.actions.begin(), p.actions.end());
    if (actions.size() != p.actions.size())
      add(report, err, "duplicate-action", p.id,
          "point " + p.id + " repeats an action label");
    for (const auto& a : p.actions)
      if (a.empty()) add(report, err, "empty-action", p.id, "empty action label");

    std::set<std::string> parent_ids;
    for (const auto& e : p.parents) {
      const DecisionPoint* parent = g.find_point(e.parent);
      if (parent == nullptr) {
        add(report, err, "unknown-parent", p.id,
            "point " + p.id + " references unknown parent " + e.parent);
        continue;
      }
      if (e.parent == p.id)
        add(report, err, "self-edge", p.id, "point " + p.id + " is its own parent");
      if (!parent_ids.insert(e.parent).second)
        add(report, err, "duplicate-parent", p.id,
            "point " + p.id + " has two edges from " + e.parent);
      if (std::find(parent->actions.begin(), parent->actions.end(),
                    e.required_action) == parent->actions.end())
        add(report, err, "bad-label", p.id,
            "edge " + e.parent + " -> " + p.id + " labeled with " + e.required_action +
                ", not an action of " + e.parent);
    }
  }
  if (!is_valid(report)) return report;  // structure broken; later checks assume it

  bool acyclic = true;
  try {
    topological_order(g);
  } catch (const Error&) {
    acyclic = false;
    add(report, err, "cycle", "", "contingency edges form a cycle");
  }
  if (!acyclic) return report;

  // Payoff table must cover the outcome set exactly, one value per player.
  std::vector<Outcome> outcomes = enumerate_outcomes(g);
  std::set<std::string> keys;
  for (const auto& z : outcomes) keys.insert(z.key());
  for (const auto& z : outcomes)
    if (g.payoffs.find(z.key()) == g.payoffs.end())
      add(report, err, "missing-payoff", z.key(),
          "payoff table incomplete: no row for outcome " + z.key());
  for (const auto& [key, payoff] : g.payoffs) {
    if (keys.find(key) == keys.end())
      add(report, err, "extra-payoff", key,
          "payoff row for " + key + ", which is not an outcome");
    else if (payoff.values.size() != g.players.size())
      add(report, err, "payoff-arity", key,
          "payoff row for " + key + " must list one value per player");
  }

  // Geometry, when every point is positioned: the edge relation and the
  // light-cone order must tell the same story.
  if (all_positioned(g) && !g.points.empty()) {
    bool dup = false;
    for (std::size_t i = 0; i < g.points.size() && !dup; ++i)
      for (std::size_t j = i + 1; j < g.points.size() && !dup; ++j)
        if (*g.points[i].position == *g.points[j].position) {
          add(report, err, "duplicate-position", g.points[i].id,
              "points " + g.points[i].id + " and " + g.points[j].id +
                  " share a position");
          dup = true;
        }
    if (!dup) {
      auto causal = causal_order_from_positions(g);
      auto closure = edge_closure(g);
      for (const auto& p : g.points) {
        for (const auto& e : p.parents) {
          if (causal.count({e.parent, p.id}) == 0)
            add(report, err, "acausal-edge", p.id,
                "edge " + e.parent + " -> " + p.id +
                    " is not future-directed causal");
        }
      }
      for (const auto& [b, a] : causal) {
        if (closure.count({b, a}) == 0)
          add(report, err, "missing-edge", a,
              b + " causally precedes " + a +
                  " but no edge path connects them");
      }
    }
  }

  if (is_valid(report)) {
    std::set<std::string> live = live_points(g);
    for (const auto& p : g.points)
      if (live.find(p.id) == live.end())
        add(report, warn, "dead-point", p.id,
            "point " + p.id + " is reached in no outcome");
  }
  return report;
}

bool is_valid(const ValidationReport& report) {
  return std::none_of(report.begin(), report.end(), [](const Violation& v) {
    return v.severity == Violation::Severity::Error;
  });
}

}  // namespace stg
