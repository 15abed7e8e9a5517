#include "stg/counterfactuals.hpp"

#include "stg/outcomes.hpp"

#include <algorithm>

namespace stg {

namespace {

std::set<std::string> outcome_keys(const SpacetimeGame& g) {
  std::set<std::string> keys;
  for (const auto& o : enumerate_outcomes(g)) keys.insert(o.key());
  return keys;
}

const Outcome* find_history(const std::vector<Outcome>& histories, const std::string& key) {
  for (const auto& h : histories)
    if (h.key() == key) return &h;
  return nullptr;
}

Outcome play_deviation(const SpacetimeGame& g, const StrategyProfile& reference,
                       const Outcome& w, const std::string& n, const std::string& a) {
  // The history's own moves override the reference; the reference only fills
  // parameters the history never reached. The intervention wins at n.
  StrategyProfile p = reference;
  for (const auto& [id, action] : w.assignment()) p.choice[id] = action;
  p.choice[n] = a;
  return induced_outcome(g, p);
}

Outcome solve_constrained(const SpacetimeGame& g, const std::string& n, const std::string& a) {
  SpacetimeGame constrained = g;
  for (auto& p : constrained.points) {
    if (p.id == n) p.actions = {a};
  }
  // Drop payoff rows the constraint makes unreachable, so ties among dead
  // histories cannot poison the genericity check.
  std::set<std::string> keys = outcome_keys(constrained);
  for (auto it = constrained.payoffs.begin(); it != constrained.payoffs.end();) {
    if (keys.count(it->first))
      ++it;
    else
      it = constrained.payoffs.erase(it);
  }
  TransparentResolution r = pte(constrained);
  if (r.no_equilibrium())
    throw Error(ErrorCode::NoEquilibrium,
                "no history survives the intervention " + n + ":=" + a);
  if (const NonGeneric* ng = r.non_generic())
    throw Error(ErrorCode::NonGeneric,
                "payoff tie for " + ng->tie.player + " under the intervention " + n + ":=" + a);
  return *r.outcome();
}

}  // namespace

Multihistory::Multihistory(SpacetimeGame game, std::vector<Outcome> histories,
                           ClosestHistorySelector selector)
    : game_(std::move(game)),
      histories_(std::move(histories)),
      selector_(std::move(selector)) {
  ValidationReport report = validate_game(game_);
  if (!is_valid(report))
    throw Error(ErrorCode::Validation,
                "underlying game invalid: " + report.front().message);
  if (histories_.empty()) throw Error(ErrorCode::Validation, "empty universe");

  std::set<std::string> z = outcome_keys(game_);
  std::set<std::string> seen;
  for (const auto& h : histories_) {
    if (!z.count(h.key()))
      throw Error(ErrorCode::UnknownOutcome, "history is not a valid outcome: " + h.key());
    if (!seen.insert(h.key()).second)
      throw Error(ErrorCode::Validation, "duplicate history " + h.key());
  }

  if (const auto* table = std::get_if<ExplicitTable>(&selector_)) {
    for (const auto& [key, to] : table->map) {
      const auto& [from, point, action] = key;
      if (!seen.count(from))
        throw Error(ErrorCode::Validation, "table row for foreign history " + from);
      const DecisionPoint* p = game_.find_point(point);
      if (!p) throw Error(ErrorCode::Validation, "table row for unknown parameter " + point);
      if (std::find(p->actions.begin(), p->actions.end(), action) == p->actions.end())
        throw Error(ErrorCode::Validation,
                    "table row for foreign action " + point + ":=" + action);
      if (!seen.count(to))
        throw Error(ErrorCode::Validation,
                    "table leaves the universe at " + from + ", " + point + ":=" + action);
      const Outcome* w = find_history(histories_, from);
      const Outcome* result = find_history(histories_, to);
      if (w->value(point) == action && to != from)
        throw Error(ErrorCode::Validation,
                    "table breaks centering at " + from + ", " + point + ":=" + action);
      auto carried = result->value(point);
      if (carried && *carried != action)
        throw Error(ErrorCode::Validation,
                    "table contradicts its own intervention at " + from + ", " + point +
                        ":=" + action);
    }
    for (const auto& h : histories_) {
      for (const auto& p : game_.points) {
        for (const auto& action : p.actions) {
          if (!table->map.count({h.key(), p.id, action}))
            throw Error(ErrorCode::Validation,
                        "table misses " + h.key() + ", " + p.id + ":=" + action);
        }
      }
    }
  } else if (const auto* dev = std::get_if<NashDeviation>(&selector_)) {
    for (const auto& [id, action] : dev->profile.choice) {
      const DecisionPoint* p = game_.find_point(id);
      if (!p) throw Error(ErrorCode::Validation, "reference profile names unknown point " + id);
      if (std::find(p->actions.begin(), p->actions.end(), action) == p->actions.end())
        throw Error(ErrorCode::Validation,
                    "reference profile plays foreign action " + id + ":=" + action);
    }
    for (const auto& id : live_points(game_)) {
      if (!dev->profile.choice.count(id))
        throw Error(ErrorCode::Validation, "reference profile leaves " + id + " unplayed");
    }
    for (const auto& h : histories_) {
      for (const auto& p : game_.points) {
        for (const auto& action : p.actions) {
          Outcome played = play_deviation(game_, dev->profile, h, p.id, action);
          if (!seen.count(played.key()))
            throw Error(ErrorCode::Validation,
                        "deviation leaves the universe at " + h.key() + ", " + p.id +
                            ":=" + action);
        }
      }
    }
  }
}

bool Multihistory::contains(const Outcome& w) const {
  return find_history(histories_, w.key()) != nullptr;
}

Outcome closest_history(const Multihistory& m, const Outcome& w, const std::string& n,
                        const std::string& a) {
  if (!m.contains(w))
    throw Error(ErrorCode::UnknownOutcome, "history outside the universe: " + w.key());
  const DecisionPoint* p = m.game().find_point(n);
  if (!p) throw Error(ErrorCode::UnknownPoint, "unknown parameter " + n);
  if (std::find(p->actions.begin(), p->actions.end(), a) == p->actions.end())
    throw Error(ErrorCode::Validation, "not an action of " + n + ": " + a);

  // Centering: a factual "intervention" changes nothing, whatever the selector.
  if (auto actual = w.value(n); actual && *actual == a) return w;

  if (const auto* table = std::get_if<ExplicitTable>(&m.selector())) {
    const std::string& to = table->map.at({w.key(), n, a});
    return *find_history(m.histories(), to);
  }
  if (const auto* dev = std::get_if<NashDeviation>(&m.selector())) {
    Outcome played = play_deviation(m.game(), dev->profile, w, n, a);
    const Outcome* inside = find_history(m.histories(), played.key());
    if (!inside)
      throw Error(ErrorCode::Domain, "closest history left the universe: " + played.key());
    return *inside;
  }
  Outcome solved = solve_constrained(m.game(), n, a);
  const Outcome* inside = find_history(m.histories(), solved.key());
  if (!inside)
    throw Error(ErrorCode::Domain, "closest history left the universe: " + solved.key());
  return *inside;
}

bool counterfactually_implies(const Multihistory& m, const Outcome& w, const std::string& n,
                              const std::string& a, const std::string& k,
                              const std::optional<std::string>& b) {
  if (!m.game().find_point(k))
    throw Error(ErrorCode::UnknownPoint, "unknown parameter " + k);
  Outcome closest = closest_history(m, w, n, a);
  return closest.value(k) == b;
}

bool counterfactually_independent(const Multihistory& m, const std::string& n,
                                  const std::string& k) {
  const DecisionPoint* pn = m.game().find_point(n);
  const DecisionPoint* pk = m.game().find_point(k);
  if (!pn) throw Error(ErrorCode::UnknownPoint, "unknown parameter " + n);
  if (!pk) throw Error(ErrorCode::UnknownPoint, "unknown parameter " + k);
  for (const auto& w : m.histories()) {
    auto before = w.value(n);
    if (!before || !w.value(k)) continue;
    for (const auto& b : pk->actions) {
      Outcome moved = closest_history(m, w, k, b);
      auto after = moved.value(n);
      if (!after || *after != *before) return false;
    }
  }
  return true;
}

bool causally_dependent(const SpacetimeGame& g, const std::string& a, const std::string& b) {
  if (!g.find_point(a)) throw Error(ErrorCode::UnknownPoint, "unknown point " + a);
  if (!g.find_point(b)) throw Error(ErrorCode::UnknownPoint, "unknown point " + b);
  if (a == b) return false;
  return causally_ordered(g, b, a);
}

bool nashian_free_choice(const Multihistory& m, const std::string& n,
                         std::optional<FreeChoiceViolation>* witness) {
  const SpacetimeGame& g = m.game();
  const DecisionPoint* pn = g.find_point(n);
  if (!pn) throw Error(ErrorCode::UnknownPoint, "unknown parameter " + n);
  for (const auto& other : g.points) {
    if (other.id == n) continue;
    if (causally_dependent(g, other.id, n)) continue;  // downstream may react
    for (const auto& w : m.histories()) {
      auto before = w.value(other.id);
      if (!before || !w.value(n)) continue;
      for (const auto& a : pn->actions) {
        Outcome moved = closest_history(m, w, n, a);
        auto after = moved.value(other.id);
        if (!after || *after != *before) {
          if (witness) *witness = FreeChoiceViolation{other.id, w, a};
          return false;
        }
      }
    }
  }
  return true;
}

bool full_support(const Multihistory& m) {
  for (const auto& id : live_points(m.game())) {
    const DecisionPoint* p = m.game().find_point(id);
    for (const auto& action : p->actions) {
      bool hit = std::any_of(m.histories().begin(), m.histories().end(), [&](const Outcome& w) {
        auto v = w.value(id);
        return v && *v == action;
      });
      if (!hit) return false;
    }
  }
  return true;
}

ContextualityClass contextuality_class(const SpacetimeGame&, const NashResolution&) {
  // A strategy profile answers every information set, reached or not.
  return Complete{};
}

ContextualityClass contextuality_class(const SpacetimeGame& g, const TransparentResolution& r) {
  const Outcome* o = r.outcome();
  if (!o) throw Error(ErrorCode::Domain, "resolution produced no history to classify");
  return Partial{o->size(), live_points(g).size()};
}

}  // namespace stg
