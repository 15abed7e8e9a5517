#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stg/io.hpp"
#include "stg/nash.hpp"
#include "stg/rng.hpp"
#include "stg/transparent.hpp"

#include "testutil.hpp"

#include <algorithm>
#include <sstream>

using namespace stg;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::string parse_error(const std::string& doc) {
  try {
    (void)parse_game(doc);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("1/-2") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("a").has_value());
  CHECK_FALSE(parse_rational("1.2.3").has_value());
  CHECK_FALSE(parse_rational("--3").has_value());
  CHECK_FALSE(parse_rational("1.").has_value());

  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("deterministic rng") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  SUBCASE("bounded draws stay in range") {
    Rng r(7);
    for (int i = 0; i < 1000; ++i) CHECK(r.bounded(13) < 13);
  }
  SUBCASE("permutations are permutations") {
    Rng r(7);
    auto p = r.permutation(40);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t i = 0; i < 40; ++i) CHECK(sorted[i] == i);
  }
  SUBCASE("chance respects the edges") {
    Rng r(7);
    for (int i = 0; i < 50; ++i) {
      CHECK_FALSE(r.chance(Rational(0)));
      CHECK(r.chance(Rational(1)));
    }
  }
  SUBCASE("seed mixing is stateless") {
    CHECK(mix_seed(1, 0) == mix_seed(1, 0));
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  }
}

TEST_CASE("parsing accepts the documented sugar") {
  auto g = parse_game(
      "# a comment\r\n"
      "stgame 1\r\n"
      "\r\n"
      "player Alice\n"
      "player Bob\n"
      "# points\n"
      "point n1 player=Alice actions=cooperates,defects pos=0,0,0,0\n"
      "point n2 player=Bob actions=cooperates,defects when=n1=cooperates pos=1,0,0,0\n"
      "payoff n1=cooperates,n2=cooperates = 2/2 6/6\n"
      "payoff n1=cooperates,n2=defects = -1 2\n"
      "payoff n1=defects = 0 0\n");
  CHECK(g.players.size() == 2);
  CHECK(g.payoffs.at("n1=cooperates,n2=cooperates").values ==
        std::vector<Rational>{1, 1});
  // Comments, CRLF and non-canonical rationals all normalize away.
  CHECK(serialize_game(g) == testutil::fixture_text("promise.game"));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error("").find("line 1") != std::string::npos);
  CHECK(parse_error("stgame 2\n").find("version") != std::string::npos);
  CHECK(parse_error("nonsense\n").find("line 1") != std::string::npos);
  CHECK(parse_error("stgame 1\nplayer p1\npoint a player=p1 actions=x,y\n"
                    "payoff a=x = 1\nplayer p2\n")
            .find("line 5") != std::string::npos);
  CHECK(parse_error("stgame 1\nplayer p1\npoint a actions=x,y\n").find("line 3") !=
        std::string::npos);
  CHECK(parse_error("stgame 1\nplayer p1\npoint a player=p1 actions=x,y pos=1,2\n")
            .find("pos") != std::string::npos);
  CHECK(parse_error("stgame 1\nplayer p1\npoint a player=p1 player=p1 actions=x,y\n")
            .find("duplicate") != std::string::npos);
  CHECK(parse_error("stgame 1\nplayer p1\npoint a player=p1 actions=x,y\n"
                    "payoff a=x = 1\npayoff a=x = 2\n")
            .find("line 5") != std::string::npos);
  CHECK(parse_error("stgame 1\nplayer p1\npoint a player=p1 actions=x,y\n"
                    "payoff a=x = one\n")
            .find("line 4") != std::string::npos);
  // Structural problems surface through parse_game with the violation code.
  CHECK(parse_error("stgame 1\nplayer p1\npoint a player=p1 actions=x,y\n"
                    "payoff a=x = 1\n")
            .find("missing-payoff") != std::string::npos);
}

TEST_CASE("serialization is canonical") {
  SUBCASE("fixture corpus is byte-stable") {
    for (const char* name : {"pd.game", "promise.game", "pennies.game", "tied.game",
                             "ab.game", "bell.game"}) {
      auto text = testutil::fixture_text(name);
      CAPTURE(name);
      CHECK(serialize_game(parse_game(text)) == text);
    }
  }
  SUBCASE("attribute order and when-sorting normalize") {
    auto g = parse_game_unchecked(
        "stgame 1\nplayer p1\n"
        "point a player=p1 actions=x,y\n"
        "point b player=p1 actions=x,y\n"
        "point c actions=x,y when=b=x,a=y player=p1\n"
        "payoff a=x,b=x = 1\npayoff a=x,b=y = 2\n"
        "payoff a=y,b=x,c=x = 3\npayoff a=y,b=x,c=y = 4\npayoff a=y,b=y = 5\n");
    auto text = serialize_game(g);
    CHECK(text.find("point c player=p1 actions=x,y when=a=y,b=x\n") != std::string::npos);
    CHECK(serialize_game(parse_game(text)) == text);
  }
  SUBCASE("value round trip on random games") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      GenParams params;
      params.node_count = 1 + static_cast<unsigned>(seed % 6);
      params.max_actions = 2 + static_cast<unsigned>(seed % 3);
      params.player_count = 1 + static_cast<unsigned>(seed % 4);
      params.edge_density = Rational(seed % 5, 4);
      auto g = gen_random(params, seed * 101);
      auto text = serialize_game(g);
      auto h = parse_game(text);
      CAPTURE(seed);
      CHECK(h.players == g.players);
      CHECK(h.payoffs == g.payoffs);
      CHECK(h.points.size() == g.points.size());
      CHECK(serialize_game(h) == text);
    }
  }
}

TEST_CASE("generated games are deterministic and generic") {
  GenParams params;
  auto a = gen_random(params, 5);
  auto b = gen_random(params, 5);
  CHECK(serialize_game(a) == serialize_game(b));
  CHECK(serialize_game(a) != serialize_game(gen_random(params, 6)));

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = gen_random(params, seed);
    CAPTURE(seed);
    CHECK(is_valid(validate_game(g)));
    CHECK(genericity_check(g).generic);
  }

  SUBCASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS((void)gen_random(GenParams{0, 2, 2, Rational(1, 4)}, 1), Error);
    CHECK_THROWS_AS((void)gen_random(GenParams{4, 1, 2, Rational(1, 4)}, 1), Error);
    CHECK_THROWS_AS((void)gen_random(GenParams{4, 2, 0, Rational(1, 4)}, 1), Error);
    CHECK_THROWS_AS((void)gen_random(GenParams{4, 2, 2, Rational(3, 2)}, 1), Error);
    CHECK_THROWS_AS((void)gen_random(GenParams{4, 2, 2, Rational(-1, 4)}, 1), Error);
  }
  SUBCASE("density zero gives the full product") {
    auto g = gen_random(GenParams{4, 2, 2, Rational(0)}, 9);
    CHECK(enumerate_outcomes(g).size() == 16);
  }
}

TEST_CASE("stats rows") {
  SUBCASE("a game without a pure equilibrium") {
    auto pennies = testutil::fixture("pennies.game");
    auto row = stats_row(pennies, "7", 123);
    auto cols = lines_of(row);  // one line
    REQUIRE(cols.size() == 1);
    CHECK(row.find("7,123,2,2,4,0,false,true,true,,") == 0);
  }
  SUBCASE("the spacelike dilemma") {
    auto pd = testutil::fixture("pd.game");
    auto row = stats_row(pd, "1", 5);
    // 4 outcomes, 1 nash at social 2, transparent outcome at social 4.
    CHECK(row == "1,5,2,2,4,1,true,true,true,2,4");
  }
  SUBCASE("a non-generic game still yields a row") {
    auto tied = testutil::fixture("tied.game");
    auto row = stats_row(tied, "2", 9);
    CHECK(row.find(",false,") != std::string::npos);  // pteExists false
  }
}

TEST_CASE("stats runs reproduce bit for bit") {
  GenParams params;
  auto a = stats_run(40, params, 11);
  auto b = stats_run(40, params, 11);
  CHECK(a == b);

  auto lines = lines_of(a);
  REQUIRE(lines.size() == 41);
  CHECK(lines[0] == kStatsHeader);

  SUBCASE("worker count changes nothing") {
    for (unsigned workers : {2u, 3u, 8u, 64u}) {
      CAPTURE(workers);
      CHECK(stats_run(40, params, 11, workers) == a);
    }
  }
  SUBCASE("per-game seeds come from the documented mixer") {
    auto cols = lines_of(a)[1];
    auto comma = cols.find(',');
    auto second = cols.find(',', comma + 1);
    CHECK(cols.substr(comma + 1, second - comma - 1) == std::to_string(mix_seed(11, 0)));
  }
  SUBCASE("existence implies optimality across the run") {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::stringstream ss(lines[i]);
      std::vector<std::string> cells;
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      REQUIRE(cells.size() >= 9);
      if (cells[7] == "true") CHECK(cells[8] == "true");
    }
  }
}
