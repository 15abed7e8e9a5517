#include "stgame.h"

#include "stg/bell.hpp"
#include "stg/convert.hpp"
#include "stg/counterfactuals.hpp"
#include "stg/io.hpp"
#include "stg/nash.hpp"
#include "stg/outcomes.hpp"
#include "stg/render.hpp"
#include "stg/transparent.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct stg_game {
  stg::SpacetimeGame game;
};

namespace {

thread_local std::string g_last_error = "no error";

stg_status map_code(stg::ErrorCode code) {
  switch (code) {
    case stg::ErrorCode::Parse:
      return STG_ERR_PARSE;
    case stg::ErrorCode::Validation:
      return STG_ERR_INVALID;
    case stg::ErrorCode::UnknownPoint:
    case stg::ErrorCode::UnknownOutcome:
      return STG_ERR_USAGE;
    default:
      return STG_ERR_DOMAIN;
  }
}

stg_status usage(const char* message) {
  g_last_error = message;
  return STG_ERR_USAGE;
}

template <typename F>
stg_status guarded(F&& f) {
  try {
    return f();
  } catch (const stg::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return STG_ERR_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// "outcome KEY" first line -> insert the payoff row right after it.
std::string with_payoff_line(const stg::SpacetimeGame& g, const stg::TransparentResolution& r,
                             std::string text) {
  if (const stg::Outcome* o = r.outcome()) {
    auto nl = text.find('\n');
    std::string payoff = "payoff " + stg::render_payoff(g.payoffs.at(o->key())) + "\n";
    text.insert(nl + 1, payoff);
  }
  return text;
}

}  // namespace

extern "C" {

const char* stg_version(void) { return "1.0.0"; }

const char* stg_last_error(void) { return g_last_error.c_str(); }

void stg_string_free(char* s) { std::free(s); }

void stg_game_free(stg_game* g) { delete g; }

stg_status stg_game_parse(const char* text, stg_game** out) {
  if (!text || !out) return usage("null argument");
  return guarded([&] {
    *out = new stg_game{stg::parse_game(text)};
    return STG_OK;
  });
}

stg_status stg_game_validate_text(const char* text, char** report, int* error_count) {
  if (!text || !report || !error_count) return usage("null argument");
  return guarded([&] {
    stg::SpacetimeGame g = stg::parse_game_unchecked(text);
    stg::ValidationReport rep = stg::validate_game(g);
    int errors = 0;
    for (const auto& v : rep)
      if (v.severity == stg::Violation::Severity::Error) ++errors;
    *report = dup_string(stg::render_validation(rep));
    *error_count = errors;
    return STG_OK;
  });
}

stg_status stg_game_serialize(const stg_game* g, char** text) {
  if (!g || !text) return usage("null argument");
  return guarded([&] {
    *text = dup_string(stg::serialize_game(g->game));
    return STG_OK;
  });
}

stg_status stg_game_outcomes(const stg_game* g, char** text) {
  if (!g || !text) return usage("null argument");
  return guarded([&] {
    *text = dup_string(stg::render_outcomes(g->game));
    return STG_OK;
  });
}

stg_status stg_game_convert(const stg_game* g, const char* target, char** text) {
  if (!g || !target || !text) return usage("null argument");
  return guarded([&]() -> stg_status {
    std::string out;
    std::string t = target;
    if (t == "extensive")
      out = stg::render_extensive(stg::to_extensive(g->game));
    else if (t == "strategic")
      out = stg::render_strategic(stg::to_strategic(g->game));
    else if (t == "dot")
      out = stg::to_dot(g->game);
    else
      return usage("unknown conversion target");
    *text = dup_string(out);
    return STG_OK;
  });
}

stg_status stg_game_solve(const stg_game* g, const char* method, int with_trace, char** text) {
  if (!g || !method || !text) return usage("null argument");
  return guarded([&]() -> stg_status {
    std::string m = method;
    std::string out;
    if (m == "nash") {
      out = stg::render_nash(stg::nash_resolutions(g->game));
    } else if (m == "spe") {
      out = stg::render_spe(stg::spe(stg::to_extensive(g->game)));
    } else if (m == "pte" || m == "ppe") {
      stg::TransparentResolution r =
          m == "pte" ? stg::pte(g->game) : stg::ppe(stg::to_extensive(g->game));
      if (const stg::NonGeneric* ng = r.non_generic()) {
        g_last_error = "payoff tie for " + ng->tie.player + " between " + ng->tie.outcome_a +
                       " and " + ng->tie.outcome_b;
        return STG_ERR_DOMAIN;
      }
      out = with_payoff_line(g->game, r, stg::render_transparent(r, with_trace != 0));
    } else {
      return usage("unknown solve method");
    }
    *text = dup_string(out);
    return STG_OK;
  });
}

stg_status stg_game_contextuality(const stg_game* g, char** text) {
  if (!g || !text) return usage("null argument");
  return guarded([&] {
    *text = dup_string(stg::render_contextuality(g->game));
    return STG_OK;
  });
}

stg_status stg_game_free_choice(const stg_game* g, const char* point, const char* semantics,
                                char** text) {
  if (!g || !point || !semantics || !text) return usage("null argument");
  return guarded([&]() -> stg_status {
    std::string s = semantics;
    std::vector<stg::Outcome> universe = stg::enumerate_outcomes(g->game);
    stg::ClosestHistorySelector selector;
    if (s == "nash") {
      stg::StrategicGame sg = stg::to_strategic(g->game);
      std::vector<std::size_t> nash = stg::pure_nash(sg);
      if (nash.empty()) {
        g_last_error = "no pure nash profile to deviate from";
        return STG_ERR_DOMAIN;
      }
      selector = stg::NashDeviation{sg.profile(nash.front())};
    } else if (s == "transparent") {
      selector = stg::TransparentResolve{};
    } else {
      return usage("unknown semantics");
    }
    stg::Multihistory m(g->game, std::move(universe), std::move(selector));
    *text = dup_string(stg::render_free_choice(m, point));
    return STG_OK;
  });
}

stg_status stg_bell_game(char** text) {
  if (!text) return usage("null argument");
  return guarded([&] {
    *text = dup_string(stg::serialize_game(stg::build_bell_game()));
    return STG_OK;
  });
}

stg_status stg_bell_chsh(const char* e11, const char* e12, const char* e21, const char* e22,
                         char** text) {
  if (!e11 || !e12 || !e21 || !e22 || !text) return usage("null argument");
  return guarded([&]() -> stg_status {
    auto parse = [](const char* s) { return stg::parse_correlation(s); };
    auto v11 = parse(e11), v12 = parse(e12), v21 = parse(e21), v22 = parse(e22);
    if (!v11 || !v12 || !v21 || !v22) return usage("bad correlation value");
    stg::CorrelationTable c = stg::CorrelationTable::make(*v11, *v12, *v21, *v22);
    stg::Sqrt2Ext s = stg::chsh(c);
    std::string out = "chsh " + stg::to_string(s) + "\n";
    out += std::string("local ") + (stg::is_local(c) ? "true" : "false") + "\n";
    *text = dup_string(out);
    return STG_OK;
  });
}

stg_status stg_bell_scan(char** text) {
  if (!text) return usage("null argument");
  return guarded([&] {
    stg::ScanResult r = stg::local_deterministic_scan();
    auto pm = [](int v) { return v > 0 ? "+1" : "-1"; };
    std::string out = "max CHSH over deterministic strategies: " + stg::to_string(r.max_chsh) + "\n";
    out += "models attaining it: " + std::to_string(r.argmax.size()) + "\n";
    for (const auto& m : r.argmax) {
      out += std::string("model carol=") + pm(m.carol[0]) + "," + pm(m.carol[1]) +
             " david=" + pm(m.david[0]) + "," + pm(m.david[1]) + "\n";
    }
    *text = dup_string(out);
    return STG_OK;
  });
}

stg_status stg_generate(unsigned nodes, unsigned max_actions, unsigned players,
                        const char* edge_density, uint64_t seed, char** text) {
  if (!edge_density || !text) return usage("null argument");
  return guarded([&]() -> stg_status {
    auto density = stg::parse_rational(edge_density);
    if (!density) return usage("bad edge density");
    stg::GenParams params;
    params.node_count = nodes;
    params.max_actions = max_actions;
    params.player_count = players;
    params.edge_density = *density;
    *text = dup_string(stg::serialize_game(stg::gen_random(params, seed)));
    return STG_OK;
  });
}

stg_status stg_stats(unsigned count, unsigned nodes, unsigned max_actions, unsigned players,
                     const char* edge_density, uint64_t seed, unsigned workers, char** csv) {
  if (!edge_density || !csv) return usage("null argument");
  return guarded([&]() -> stg_status {
    auto density = stg::parse_rational(edge_density);
    if (!density) return usage("bad edge density");
    stg::GenParams params;
    params.node_count = nodes;
    params.max_actions = max_actions;
    params.player_count = players;
    params.edge_density = *density;
    *csv = dup_string(stg::stats_run(count, params, seed, workers));
    return STG_OK;
  });
}

}  // extern "C"
