#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stg/game.hpp"
#include "stg/io.hpp"

#include "testutil.hpp"

#include <algorithm>

using namespace stg;

namespace {

bool has_violation(const ValidationReport& r, const std::string& code) {
  return std::any_of(r.begin(), r.end(),
                     [&](const Violation& v) { return v.code == code; });
}

SpacetimeGame unchecked(const std::string& doc) { return parse_game_unchecked(doc); }

}  // namespace

TEST_CASE("fixture corpus validates cleanly") {
  for (const char* name : {"pd.game", "promise.game", "pennies.game", "tied.game",
                           "ab.game", "bell.game"}) {
    auto g = testutil::fixture(name);
    auto report = validate_game(g);
    CAPTURE(name);
    CHECK(is_valid(report));
  }
}

TEST_CASE("validation flags structural defects") {
  SUBCASE("cycle") {
    auto g = unchecked(
        "stgame 1\nplayer p1\n"
        "point a player=p1 actions=x,y when=b=x\n"
        "point b player=p1 actions=x,y when=a=x\n");
    auto r = validate_game(g);
    CHECK_FALSE(is_valid(r));
    CHECK(has_violation(r, "cycle"));
  }
  SUBCASE("payoff table incomplete") {
    auto g = unchecked("stgame 1\nplayer p1\npoint a player=p1 actions=x,y\npayoff a=x = 1\n");
    auto r = validate_game(g);
    CHECK(has_violation(r, "missing-payoff"));
    auto it = std::find_if(r.begin(), r.end(),
                           [](const Violation& v) { return v.code == "missing-payoff"; });
    REQUIRE(it != r.end());
    CHECK(it->message.find("payoff table incomplete") != std::string::npos);
  }
  SUBCASE("extra payoff row") {
    auto g = unchecked(
        "stgame 1\nplayer p1\npoint a player=p1 actions=x,y\n"
        "payoff a=x = 1\npayoff a=y = 2\npayoff a=z = 3\n");
    CHECK(has_violation(validate_game(g), "extra-payoff"));
  }
  SUBCASE("payoff row arity") {
    auto g = unchecked(
        "stgame 1\nplayer p1\nplayer p2\npoint a player=p1 actions=x,y\n"
        "payoff a=x = 1\npayoff a=y = 2 3\n");
    CHECK(has_violation(validate_game(g), "payoff-arity"));
  }
  SUBCASE("unknown owner") {
    auto g = unchecked("stgame 1\nplayer p1\npoint a player=p9 actions=x,y\n"
                       "payoff a=x = 1\npayoff a=y = 2\n");
    CHECK(has_violation(validate_game(g), "unknown-player"));
  }
  SUBCASE("single action") {
    auto g = unchecked("stgame 1\nplayer p1\npoint a player=p1 actions=x\npayoff a=x = 1\n");
    CHECK(has_violation(validate_game(g), "arity"));
  }
  SUBCASE("duplicate action") {
    auto g = unchecked("stgame 1\nplayer p1\npoint a player=p1 actions=x,x\n");
    CHECK(has_violation(validate_game(g), "duplicate-action"));
  }
  SUBCASE("unknown parent and bad label") {
    auto g = unchecked(
        "stgame 1\nplayer p1\n"
        "point a player=p1 actions=x,y\n"
        "point b player=p1 actions=x,y when=zz=x\n"
        "point c player=p1 actions=x,y when=a=nope\n");
    auto r = validate_game(g);
    CHECK(has_violation(r, "unknown-parent"));
    CHECK(has_violation(r, "bad-label"));
  }
  SUBCASE("self edge") {
    auto g = unchecked("stgame 1\nplayer p1\npoint a player=p1 actions=x,y when=a=x\n");
    CHECK(has_violation(validate_game(g), "self-edge"));
  }
  SUBCASE("duplicate point and player") {
    auto g = unchecked(
        "stgame 1\nplayer p1\nplayer p1\n"
        "point a player=p1 actions=x,y\npoint a player=p1 actions=x,y\n");
    auto r = validate_game(g);
    CHECK(has_violation(r, "duplicate-player"));
    CHECK(has_violation(r, "duplicate-point"));
  }
  SUBCASE("empty game") {
    SpacetimeGame g;
    auto r = validate_game(g);
    CHECK(has_violation(r, "no-players"));
    CHECK(has_violation(r, "no-points"));
  }
}

TEST_CASE("positioned games must match their light cones") {
  // Parent 1 time unit in the child's future: edge points backwards.
  auto g = unchecked(
      "stgame 1\nplayer p1\nplayer p2\n"
      "point a player=p1 actions=x,y pos=5,0,0,0\n"
      "point b player=p2 actions=x,y when=a=x pos=0,0,0,0\n"
      "payoff a=x,b=x = 1 1\npayoff a=x,b=y = 2 2\npayoff a=y = 3 3\n");
  CHECK(has_violation(validate_game(g), "acausal-edge"));

  // Timelike pair with no edge between them: the order exists in spacetime
  // but not in the game, which the closure requirement rejects.
  auto h = unchecked(
      "stgame 1\nplayer p1\nplayer p2\n"
      "point a player=p1 actions=x,y pos=0,0,0,0\n"
      "point b player=p2 actions=x,y pos=9,0,0,0\n"
      "payoff a=x,b=x = 1 1\npayoff a=x,b=y = 2 4\npayoff a=y,b=x = 3 2\npayoff a=y,b=y = 4 3\n");
  CHECK(has_violation(validate_game(h), "missing-edge"));

  // Spacelike pair with an edge: also rejected.
  auto k = unchecked(
      "stgame 1\nplayer p1\nplayer p2\n"
      "point a player=p1 actions=x,y pos=0,0,0,0\n"
      "point b player=p2 actions=x,y when=a=x pos=1,50,0,0\n"
      "payoff a=x,b=x = 1 1\npayoff a=x,b=y = 2 2\npayoff a=y = 3 3\n");
  CHECK(has_violation(validate_game(k), "acausal-edge"));

  SUBCASE("shared position") {
    auto m = unchecked(
        "stgame 1\nplayer p1\n"
        "point a player=p1 actions=x,y pos=0,0,0,0\n"
        "point b player=p1 actions=x,y pos=0,0,0,0\n");
    CHECK(has_violation(validate_game(m), "duplicate-position"));
  }
}

TEST_CASE("dead points are warnings, not errors") {
  // c needs a=x and b=x, but b itself needs a=y: never activated.
  auto g = unchecked(
      "stgame 1\nplayer p1\n"
      "point a player=p1 actions=x,y\n"
      "point b player=p1 actions=x,y when=a=y\n"
      "point c player=p1 actions=x,y when=a=x,b=x\n"
      "payoff a=x = 1\npayoff a=y,b=x = 2\npayoff a=y,b=y = 3\n");
  auto r = validate_game(g);
  CHECK(is_valid(r));
  CHECK(has_violation(r, "dead-point"));
}

TEST_CASE("causal order from positions") {
  auto g = testutil::fixture("bell.game");
  auto order = causal_order_from_positions(g);
  // Each wing is ordered, the wings are not.
  CHECK(order.count({"A", "C_alpha"}) == 1);
  CHECK(order.count({"A", "C_beta"}) == 1);
  CHECK(order.count({"B", "D_alpha"}) == 1);
  CHECK(order.count({"B", "D_beta"}) == 1);
  CHECK(order.count({"A", "B"}) == 0);
  CHECK(order.count({"A", "D_alpha"}) == 0);
  CHECK(order.count({"B", "C_alpha"}) == 0);
  CHECK(order.count({"C_alpha", "D_alpha"}) == 0);
  // Strict: nothing precedes itself, nothing points into the past.
  CHECK(order.count({"C_alpha", "A"}) == 0);
  CHECK(order.count({"A", "A"}) == 0);

  SUBCASE("lightlike separation counts as causal") {
    // D_beta sits at distance 1 in space and 1 in time from B.
    CHECK(causally_ordered(g, "B", "D_beta"));
    CHECK_FALSE(causally_ordered(g, "D_beta", "B"));
  }
  SUBCASE("edge DAG is the fallback without positions") {
    auto promise = testutil::fixture("promise.game");
    promise.points[0].position.reset();
    promise.points[1].position.reset();
    CHECK(causally_ordered(promise, "n1", "n2"));
    CHECK_FALSE(causally_ordered(promise, "n2", "n1"));
  }
}

TEST_CASE("topological order is deterministic and respects edges") {
  auto g = testutil::fixture("bell.game");
  auto order = topological_order(g);
  REQUIRE(order.size() == 6);
  auto pos = [&](const std::string& id) {
    return std::find(order.begin(), order.end(), id) - order.begin();
  };
  CHECK(pos("A") < pos("C_alpha"));
  CHECK(pos("A") < pos("C_beta"));
  CHECK(pos("B") < pos("D_alpha"));
  CHECK(pos("B") < pos("D_beta"));
  // Declaration order decides between unrelated points.
  CHECK(order[0] == "A");
  CHECK(order[1] == "B");
}

TEST_CASE("genericity check") {
  SUBCASE("per-player distinct payoffs pass") {
    auto g = testutil::fixture("pd.game");
    auto res = genericity_check(g);
    CHECK(res.generic);
    CHECK(res.ties.empty());
  }
  SUBCASE("cross-player ties are fine") {
    // (2,2) has both players at 2; within a column everything is distinct.
    auto g = testutil::fixture("pd.game");
    CHECK(genericity_check(g).generic);
  }
  SUBCASE("a within-player tie is reported with both keys") {
    auto g = testutil::fixture("tied.game");
    auto res = genericity_check(g);
    REQUIRE_FALSE(res.generic);
    REQUIRE_FALSE(res.ties.empty());
    const auto& tie = res.ties.front();
    CHECK(tie.player == "Bob");
    CHECK(tie.outcome_a == "A=cooperate,B=cooperate");
    CHECK(tie.outcome_b == "A=defect,B=cooperate");
    CHECK(tie.outcome_a < tie.outcome_b);
  }
}

TEST_CASE("point and player lookups") {
  auto g = testutil::fixture("promise.game");
  CHECK(g.point_index("n1") == 0);
  CHECK(g.point_index("n2") == 1);
  CHECK(g.point_index("zz") == -1);
  CHECK(g.player_index("Alice") == 0);
  CHECK(g.player_index("Bob") == 1);
  CHECK(g.player_index("Eve") == -1);
  REQUIRE(g.find_point("n2") != nullptr);
  CHECK(g.find_point("n2")->parents.size() == 1);
  CHECK(g.find_point("zz") == nullptr);
}
