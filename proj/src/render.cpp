#include "stg/render.hpp"

#include "stg/outcomes.hpp"

#include <sstream>

namespace stg {

namespace {

std::string join_values(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += " ";
    s += to_string(values[i]);
  }
  return s;
}

std::string choice_key(const StrategyProfile& p) {
  std::string s;
  bool first = true;
  for (const auto& [id, action] : p.choice) {
    if (!first) s += ",";
    first = false;
    s += id + "=" + action;
  }
  return s;
}

std::string join_ids(const std::vector<std::string>& ids, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += sep;
    s += ids[i];
  }
  return s;
}

void render_node(const ExtensiveGame& eg, int node_index, int depth, std::ostringstream& out) {
  const ExtTreeNode& node = eg.nodes[node_index];
  for (const auto& [action, child] : node.children) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << action << ": ";
    const ExtTreeNode& c = eg.nodes[child];
    if (c.info_set < 0)
      out << "(" << c.outcome.key() << ") = " << join_values(c.payoff.values) << "\n";
    else
      out << eg.info_sets[c.info_set].id << "\n";
    render_node(eg, child, depth + 1, out);
  }
}

}  // namespace

std::string render_validation(const ValidationReport& report) {
  std::ostringstream out;
  bool any_error = false;
  for (const auto& v : report) {
    bool error = v.severity == Violation::Severity::Error;
    any_error = any_error || error;
    out << (error ? "error " : "warning ") << v.code << ": " << v.message << "\n";
  }
  out << (any_error ? "invalid" : "valid") << "\n";
  return out.str();
}

std::string render_outcomes(const SpacetimeGame& g) {
  std::ostringstream out;
  for (const auto& o : enumerate_outcomes(g))
    out << o.key() << " = " << join_values(g.payoffs.at(o.key()).values) << "\n";
  return out.str();
}

std::string render_extensive(const ExtensiveGame& eg) {
  std::ostringstream out;
  for (const auto& set : eg.info_sets) {
    out << "set " << set.id << " player=" << set.player << " actions=" << join_ids(set.actions, "|")
        << " nodes=" << set.nodes.size() << "\n";
  }
  out << "tree:\n";
  if (!eg.nodes.empty() && eg.nodes[0].info_set >= 0) {
    out << eg.info_sets[eg.nodes[0].info_set].id << "\n";
    render_node(eg, 0, 1, out);
  } else if (!eg.nodes.empty()) {
    out << "(" << eg.nodes[0].outcome.key() << ") = " << join_values(eg.nodes[0].payoff.values)
        << "\n";
  }
  return out.str();
}

std::string render_strategic(const StrategicGame& sg) {
  std::ostringstream out;
  out << "players " << join_ids(sg.players, ",") << "\n";
  for (const auto& ps : sg.strategy_sets) {
    out << "sets " << ps.player << ": " << join_ids(ps.set_ids, ",")
        << " strategies=" << ps.strategies.size() << "\n";
  }
  out << "profiles " << sg.profile_count() << "\n";
  for (std::size_t i = 0; i < sg.profile_count(); ++i) {
    out << "profile " << choice_key(sg.profile(i)) << " = " << join_values(sg.payoffs[i].values)
        << "\n";
  }
  return out.str();
}

std::string render_payoff(const Payoff& p) { return join_values(p.values); }

std::string render_nash(const std::vector<NashResolution>& rs) {
  std::ostringstream out;
  out << "count " << rs.size() << "\n";
  for (const auto& r : rs) {
    out << "profile " << choice_key(r.profile) << " -> " << r.outcome.key() << " = "
        << join_values(r.payoff.values) << "\n";
  }
  return out.str();
}

std::string render_spe(const NashResolution& r) {
  std::ostringstream out;
  out << "profile " << choice_key(r.profile) << " -> " << r.outcome.key() << " = "
      << join_values(r.payoff.values) << "\n";
  return out.str();
}

std::string render_transparent(const TransparentResolution& r, bool with_trace) {
  std::ostringstream out;
  if (const Outcome* o = r.outcome()) {
    out << "outcome " << o->key() << "\n";
  } else if (r.no_equilibrium()) {
    out << "no equilibrium\n";
  } else if (const NonGeneric* ng = r.non_generic()) {
    out << "non-generic: tie for " << ng->tie.player << " between " << ng->tie.outcome_a
        << " and " << ng->tie.outcome_b << "\n";
  }
  if (!with_trace) return out.str();
  for (const auto& round : r.trace) {
    out << "round " << round.round_index
        << " certainly-active=" << join_ids(round.certainly_active, ",") << "\n";
    for (const auto& [id, value] : round.maximins)
      out << "  maximin " << id << "=" << to_string(value) << "\n";
    for (const auto& o : round.eliminated) out << "  eliminate " << o.key() << "\n";
    for (const auto& [id, action] : round.determined)
      out << "  determine " << id << "=" << action << "\n";
    for (const auto& id : round.dominance_gap) out << "  dominance-gap " << id << "\n";
  }
  return out.str();
}

std::string render_contextuality(const SpacetimeGame& g) {
  std::ostringstream out;
  std::size_t live = live_points(g).size();

  std::vector<NashResolution> nash = nash_resolutions(g);
  if (nash.empty()) {
    out << "nash: none\n";
  } else {
    ContextualityClass c = contextuality_class(g, nash.front());
    (void)c;  // Nashian resolutions are complete by construction
    out << "nash: complete " << live << "/" << live << "\n";
  }

  TransparentResolution t = pte(g);
  if (t.outcome()) {
    ContextualityClass c = contextuality_class(g, t);
    const Partial& p = std::get<Partial>(c);
    out << "transparent: partial " << p.assigned << "/" << p.total << "\n";
  } else if (t.no_equilibrium()) {
    out << "transparent: none\n";
  } else {
    out << "transparent: non-generic\n";
  }
  return out.str();
}

std::string render_free_choice(const Multihistory& m, const std::string& point) {
  std::ostringstream out;
  std::optional<FreeChoiceViolation> witness;
  bool free = nashian_free_choice(m, point, &witness);
  out << "free-choice " << point << " " << (free ? "true" : "false") << "\n";
  if (!free && witness) {
    out << "witness parameter=" << witness->parameter << " history=" << witness->at.key()
        << " action=" << witness->action << "\n";
  }
  return out.str();
}

}  // namespace stg
