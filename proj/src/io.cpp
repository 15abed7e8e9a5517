#include "stg/io.hpp"

#include "stg/convert.hpp"
#include "stg/error.hpp"
#include "stg/nash.hpp"
#include "stg/outcomes.hpp"
#include "stg/rng.hpp"
#include "stg/transparent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

namespace stg {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '.' ||
           c == '+' || c == '-';
  });
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message);
}

Rational need_rational(int line, const std::string& token) {
  auto r = parse_rational(token);
  if (!r) fail(line, "bad rational '" + token + "'");
  return *r;
}

std::string need_ident(int line, const std::string& token, const char* what) {
  if (!is_ident(token)) fail(line, std::string(what) + " '" + token + "' is not an identifier");
  return token;
}

}  // namespace

SpacetimeGame parse_game_unchecked(const std::string& text) {
  SpacetimeGame g;
  enum Section { Header, Players, Points, Payoffs };
  Section section = Header;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string trimmed = raw;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> tokens = tokenize(trimmed);

    if (section == Header) {
      if (tokens[0] != "stgame") fail(line_no, "expected header 'stgame 1'");
      if (tokens.size() != 2) fail(line_no, "expected header 'stgame 1'");
      if (tokens[1] != "1") fail(line_no, "unsupported format version '" + tokens[1] + "'");
      section = Players;
      continue;
    }

    if (tokens[0] == "player") {
      if (section > Players) fail(line_no, "player line after a point or payoff line");
      if (tokens.size() != 2) fail(line_no, "expected 'player NAME'");
      g.players.push_back(need_ident(line_no, tokens[1], "player name"));
    } else if (tokens[0] == "point") {
      if (section > Points) fail(line_no, "point line after a payoff line");
      section = Points;
      if (tokens.size() < 2) fail(line_no, "expected 'point ID attributes...'");
      DecisionPoint p;
      p.id = need_ident(line_no, tokens[1], "point id");
      bool saw_player = false, saw_actions = false, saw_when = false, saw_pos = false;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos) fail(line_no, "expected KEY=VALUE, got '" + tokens[i] + "'");
        std::string key = tokens[i].substr(0, eq);
        std::string value = tokens[i].substr(eq + 1);
        if (key == "player") {
          if (saw_player) fail(line_no, "duplicate attribute 'player'");
          saw_player = true;
          p.player = need_ident(line_no, value, "player name");
        } else if (key == "actions") {
          if (saw_actions) fail(line_no, "duplicate attribute 'actions'");
          saw_actions = true;
          for (const auto& a : split(value, ','))
            p.actions.push_back(need_ident(line_no, a, "action"));
        } else if (key == "when") {
          if (saw_when) fail(line_no, "duplicate attribute 'when'");
          saw_when = true;
          for (const auto& part : split(value, ',')) {
            auto mid = part.find('=');
            if (mid == std::string::npos)
              fail(line_no, "expected PARENT=ACTION in when-list, got '" + part + "'");
            ContingencyEdge e;
            e.parent = need_ident(line_no, part.substr(0, mid), "parent id");
            e.required_action = need_ident(line_no, part.substr(mid + 1), "action");
            p.parents.push_back(std::move(e));
          }
        } else if (key == "pos") {
          if (saw_pos) fail(line_no, "duplicate attribute 'pos'");
          saw_pos = true;
          auto coords = split(value, ',');
          if (coords.size() != 4) fail(line_no, "pos needs exactly four coordinates t,x,y,z");
          MinkowskiPosition pos;
          pos.t = need_rational(line_no, coords[0]);
          pos.x = need_rational(line_no, coords[1]);
          pos.y = need_rational(line_no, coords[2]);
          pos.z = need_rational(line_no, coords[3]);
          p.position = std::move(pos);
        } else {
          fail(line_no, "unknown attribute '" + key + "'");
        }
      }
      if (!saw_player) fail(line_no, "point " + p.id + " misses attribute 'player'");
      if (!saw_actions) fail(line_no, "point " + p.id + " misses attribute 'actions'");
      g.points.push_back(std::move(p));
    } else if (tokens[0] == "payoff") {
      section = Payoffs;
      if (tokens.size() < 3 || tokens[2] != "=")
        fail(line_no, "expected 'payoff KEY = VALUES...'");
      Outcome o;
      for (const auto& part : split(tokens[1], ',')) {
        auto mid = part.find('=');
        if (mid == std::string::npos)
          fail(line_no, "expected ID=ACTION in outcome key, got '" + part + "'");
        std::string id = need_ident(line_no, part.substr(0, mid), "point id");
        std::string action = need_ident(line_no, part.substr(mid + 1), "action");
        if (o.assigns(id)) fail(line_no, "outcome key assigns " + id + " twice");
        o.assign(id, action);
      }
      if (g.payoffs.count(o.key())) fail(line_no, "duplicate payoff row for " + o.key());
      Payoff payoff;
      for (std::size_t i = 3; i < tokens.size(); ++i)
        payoff.values.push_back(need_rational(line_no, tokens[i]));
      g.payoffs[o.key()] = std::move(payoff);
    } else {
      fail(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (section == Header) fail(line_no + 1, "expected header 'stgame 1'");
  return g;
}

SpacetimeGame parse_game(const std::string& text) {
  SpacetimeGame g = parse_game_unchecked(text);
  ValidationReport report = validate_game(g);
  for (const auto& v : report) {
    if (v.severity == Violation::Severity::Error)
      throw Error(ErrorCode::Validation, v.code + ": " + v.message);
  }
  return g;
}

std::string serialize_game(const SpacetimeGame& g) {
  std::ostringstream out;
  out << "stgame 1\n";
  for (const auto& p : g.players) out << "player " << p << "\n";
  for (const auto& p : g.points) {
    out << "point " << p.id << " player=" << p.player << " actions=";
    for (std::size_t i = 0; i < p.actions.size(); ++i)
      out << (i ? "," : "") << p.actions[i];
    if (!p.parents.empty()) {
      auto parents = p.parents;
      std::sort(parents.begin(), parents.end(),
                [](const ContingencyEdge& a, const ContingencyEdge& b) {
                  return a.parent < b.parent;
                });
      out << " when=";
      for (std::size_t i = 0; i < parents.size(); ++i)
        out << (i ? "," : "") << parents[i].parent << "=" << parents[i].required_action;
    }
    if (p.position) {
      out << " pos=" << to_string(p.position->t) << "," << to_string(p.position->x) << ","
          << to_string(p.position->y) << "," << to_string(p.position->z);
    }
    out << "\n";
  }
  for (const auto& [key, payoff] : g.payoffs) {
    out << "payoff " << key << " =";
    for (const auto& v : payoff.values) out << " " << to_string(v);
    out << "\n";
  }
  return out.str();
}

// ---- random games -------------------------------------------------------------

SpacetimeGame gen_random(const GenParams& params, std::uint64_t seed) {
  if (params.node_count == 0) throw Error(ErrorCode::Validation, "nodeCount must be positive");
  if (params.max_actions < 2) throw Error(ErrorCode::Validation, "maxActions must be at least 2");
  if (params.player_count == 0)
    throw Error(ErrorCode::Validation, "playerCount must be positive");
  if (params.edge_density < 0 || params.edge_density > 1)
    throw Error(ErrorCode::Validation, "edgeDensity must lie in [0, 1]");

  Rng rng(seed);
  SpacetimeGame g;
  for (unsigned p = 1; p <= params.player_count; ++p)
    g.players.push_back("p" + std::to_string(p));

  for (unsigned i = 1; i <= params.node_count; ++i) {
    DecisionPoint p;
    p.id = "n" + std::to_string(i);
    p.player = g.players[rng.bounded(params.player_count)];
    std::uint64_t arity = 2 + rng.bounded(params.max_actions - 1);
    for (std::uint64_t a = 1; a <= arity; ++a) p.actions.push_back("a" + std::to_string(a));
    g.points.push_back(std::move(p));
  }

  // Declaration order doubles as topological order, so candidate edges only
  // ever point forward.
  for (unsigned i = 0; i + 1 < params.node_count; ++i) {
    for (unsigned j = i + 1; j < params.node_count; ++j) {
      if (!rng.chance(params.edge_density)) continue;
      const auto& actions = g.points[i].actions;
      std::string label = actions[rng.bounded(actions.size())];
      g.points[j].parents.push_back({g.points[i].id, label});
    }
  }

  std::vector<Outcome> z = enumerate_outcomes(g);
  std::vector<std::vector<uint32_t>> ranks;
  for (std::size_t p = 0; p < g.players.size(); ++p)
    ranks.push_back(rng.permutation(static_cast<uint32_t>(z.size())));
  for (std::size_t i = 0; i < z.size(); ++i) {
    Payoff row;
    for (std::size_t p = 0; p < g.players.size(); ++p)
      row.values.push_back(Rational(ranks[p][i] + 1));
    g.payoffs[z[i].key()] = std::move(row);
  }
  return g;
}

// ---- statistics ---------------------------------------------------------------

const char* const kStatsHeader =
    "gameId,seed,nodeCount,actionArity,outcomeCount,nashCount,nashExists,pteExists,"
    "pteParetoOptimal,nashMaxSocialUtility,pteSocialUtility";

std::string stats_row(const SpacetimeGame& g, const std::string& game_id, std::uint64_t seed) {
  std::size_t arity = 0;
  for (const auto& p : g.points) arity = std::max(arity, p.actions.size());
  std::size_t outcome_count = enumerate_outcomes(g).size();

  StrategicGame sg = to_strategic(g);
  std::vector<std::size_t> nash = pure_nash(sg);
  std::optional<Rational> nash_max;
  for (std::size_t idx : nash) {
    Rational social = 0;
    for (const auto& v : sg.payoffs[idx].values) social += v;
    if (!nash_max || social > *nash_max) nash_max = social;
  }

  TransparentResolution t = pte(g);
  const Outcome* pte_outcome = t.outcome();
  bool pte_pareto = false;
  std::optional<Rational> pte_social;
  if (pte_outcome) {
    pte_pareto = pareto_optimal(g, *pte_outcome);
    Rational social = 0;
    for (const auto& v : g.payoffs.at(pte_outcome->key()).values) social += v;
    pte_social = social;
  }

  std::ostringstream out;
  out << game_id << "," << seed << "," << g.points.size() << "," << arity << ","
      << outcome_count << "," << nash.size() << "," << (nash.empty() ? "false" : "true")
      << "," << (pte_outcome ? "true" : "false") << "," << (pte_pareto ? "true" : "false") << ","
      << (nash_max ? to_string(*nash_max) : "") << ","
      << (pte_social ? to_string(*pte_social) : "");
  return out.str();
}

std::string stats_run(unsigned count, const GenParams& params, std::uint64_t seed,
                      unsigned workers) {
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, std::max(1u, count));

  std::vector<std::string> rows(count);
  auto work = [&](unsigned start) {
    for (unsigned i = start; i < count; i += workers) {
      std::uint64_t game_seed = mix_seed(seed, i);
      SpacetimeGame g = gen_random(params, game_seed);
      rows[i] = stats_row(g, std::to_string(i + 1), game_seed);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::ostringstream out;
  out << kStatsHeader << "\n";
  for (const auto& row : rows) out << row << "\n";
  return out.str();
}

}  // namespace stg
