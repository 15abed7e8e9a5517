#pragma once

#include "stg/game.hpp"

#include <cstdint>

namespace stg {

// GameDocument: the line-based text format the CLI reads and writes.
//
//   stgame 1
//   player Alice
//   player Bob
//   point A player=Alice actions=cooperate,defect [when B=x,C=y] [pos=t,x,y,z]
//   payoff A=cooperate,B=defect = 0 3
//
// Sections in that order. '#' starts a comment line; blank lines are ignored.
// Identifiers (players, point ids, actions) match [A-Za-z0-9_^.+-]+. Payoff
// values are listed in player order. Canonical form (what serialize_game
// emits): no comments, single spaces, attributes in the order player, actions,
// when, pos, when-lists sorted by parent id, payoff rows sorted by canonical
// outcome key, rationals normalized ("p/q", q > 0, integers without "/1"),
// trailing newline. Point declaration order is semantic (tie-breaking) and is
// preserved verbatim, not sorted.
//
// parse_game is strict: syntax problems throw Parse errors with 1-based line
// numbers, and a structurally invalid game throws a Validation error carrying
// the first reported violation. serialize(parse(doc)) is byte-identical for
// canonical documents, and parse(serialize(g)) == g for every valid game.

SpacetimeGame parse_game(const std::string& text);
// Syntax only: same Parse errors, but the result may be structurally invalid.
// parse_game is parse_game_unchecked followed by validate_game.
SpacetimeGame parse_game_unchecked(const std::string& text);
std::string serialize_game(const SpacetimeGame& g);

// Random game in generic position, fully determined by the arguments:
//   - points n1..nN; each owner uniform among p1..pK, arity uniform in
//     [2, maxActions], actions a1..a<arity>;
//   - one candidate edge per declaration-ordered pair (ni, nj), i < j, kept
//     with probability edgeDensity and labeled with a uniform action of ni;
//   - payoffs: independent per-player uniform permutations of 1..|Z| over the
//     outcomes in canonical order.
// Draw order is fixed, so every (params, seed) pair reproduces byte-for-byte.
struct GenParams {
  unsigned node_count = 4;
  unsigned max_actions = 2;
  unsigned player_count = 2;
  Rational edge_density = Rational(1, 4);
};

SpacetimeGame gen_random(const GenParams& params, std::uint64_t seed);

// Equilibrium statistics over a stream of gen_random games. One CSV row per
// game; game i uses seed mix_seed(seed, i), so any worker count (and any run)
// produces identical bytes. Fields:
//   gameId,seed,nodeCount,actionArity,outcomeCount,nashCount,nashExists,
//   pteExists,pteParetoOptimal,nashMaxSocialUtility,pteSocialUtility
// Social utility = sum of the outcome's payoffs. nashMaxSocialUtility is empty
// when no pure Nash exists, pteSocialUtility is empty and pteParetoOptimal
// false when the transparent solve returns no outcome.
std::string stats_run(unsigned count, const GenParams& params, std::uint64_t seed,
                      unsigned workers = 1);

// Single row used by stats_run; exposed so fixtures can be pushed through the
// same column logic.
std::string stats_row(const SpacetimeGame& g, const std::string& game_id,
                      std::uint64_t seed);

extern const char* const kStatsHeader;

}  // namespace stg
