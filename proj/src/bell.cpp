#include "stg/bell.hpp"

#include "stg/error.hpp"
#include "stg/outcomes.hpp"
#include "stg/rng.hpp"

#include <bit>

namespace stg {

namespace {

int rational_sign(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

}  // namespace

int Sqrt2Ext::sign() const {
  if (b == 0) return rational_sign(a);
  if (a == 0) return rational_sign(b);
  int sa = rational_sign(a), sb = rational_sign(b);
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(2) has the sign of the larger square. Equality
  // of the squares would make sqrt(2) rational, so it cannot happen here.
  int larger = a * a > 2 * b * b ? sa : sb;
  return larger;
}

std::string to_string(const Sqrt2Ext& v) {
  auto root_part = [](const Rational& b) -> std::string {
    if (b == 1) return "rt2";
    if (b == Rational(1) / 2) return "rt2/2";
    return to_string(b) + "*rt2";
  };
  if (v.b == 0) return to_string(v.a);
  std::string root = v.b > 0 ? root_part(v.b) : "-" + root_part(-v.b);
  if (v.a == 0) return root;
  if (v.b > 0) return to_string(v.a) + "+" + root;
  return to_string(v.a) + root;
}

std::optional<Sqrt2Ext> parse_correlation(const std::string& text) {
  if (text == "rt2/2") return Sqrt2Ext(0, Rational(1) / 2);
  if (text == "-rt2/2") return Sqrt2Ext(0, Rational(-1) / 2);
  if (auto r = parse_rational(text)) return Sqrt2Ext(*r);
  return std::nullopt;
}

CorrelationTable CorrelationTable::make(const Sqrt2Ext& e11, const Sqrt2Ext& e12,
                                        const Sqrt2Ext& e21, const Sqrt2Ext& e22) {
  CorrelationTable t;
  t.e = {{{e11, e12}, {e21, e22}}};
  const Sqrt2Ext one(1);
  for (const auto& row : t.e) {
    for (const auto& v : row) {
      if (v > one || v < -one)
        throw Error(ErrorCode::Validation, "correlation out of [-1, 1]: " + to_string(v));
    }
  }
  return t;
}

CorrelationTable LocalDeterministicModel::table() const {
  CorrelationTable t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.e[i][j] = Sqrt2Ext(Rational(carol[i] * david[j]));
  return t;
}

// ---- the laboratory game ------------------------------------------------------

namespace {

SpacetimeGame bell_structure() {
  SpacetimeGame g;
  g.players = {"Alice", "Bob", "Carol", "David"};

  auto point = [&](std::string id, std::string player, std::vector<ContingencyEdge> parents,
                   Rational t, Rational x) {
    DecisionPoint p;
    p.id = std::move(id);
    p.player = std::move(player);
    p.actions = p.player == "Alice" ? std::vector<std::string>{"a1", "a2"}
                : p.player == "Bob" ? std::vector<std::string>{"b1", "b2"}
                                    : std::vector<std::string>{"-1", "+1"};
    p.parents = std::move(parents);
    p.position = MinkowskiPosition{std::move(t), std::move(x), 0, 0};
    g.points.push_back(std::move(p));
  };

  // Carol's points sit on or inside Alice's light cone, David's on or inside
  // Bob's; the wings are spacelike to each other.
  point("A", "Alice", {}, 0, 0);
  point("B", "Bob", {}, 0, 100);
  point("C_alpha", "Carol", {{"A", "a1"}}, 1, 0);
  point("C_beta", "Carol", {{"A", "a2"}}, 1, 1);
  point("D_alpha", "David", {{"B", "b1"}}, 1, 100);
  point("D_beta", "David", {{"B", "b2"}}, 1, 101);
  return g;
}

}  // namespace

SpacetimeGame build_bell_game(const std::map<std::string, Payoff>& payoffs) {
  SpacetimeGame g = bell_structure();
  g.payoffs = payoffs;
  std::vector<Outcome> z = enumerate_outcomes(g);
  if (payoffs.size() != z.size())
    throw Error(ErrorCode::Validation, "laboratory payoff table must cover all 16 histories");
  for (const auto& o : z) {
    auto it = payoffs.find(o.key());
    if (it == payoffs.end())
      throw Error(ErrorCode::Validation, "laboratory payoff table misses " + o.key());
    if (it->second.values.size() != g.players.size())
      throw Error(ErrorCode::Validation, "laboratory payoff row needs four values");
  }
  return g;
}

SpacetimeGame build_bell_game(std::uint64_t seed) {
  SpacetimeGame g = bell_structure();
  std::vector<Outcome> z = enumerate_outcomes(g);
  // One independent uniform ranking of the histories per player, so every
  // payoff column is generic by construction.
  Rng rng(seed);
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

SpacetimeGame build_bell_game() { return build_bell_game(kBellDefaultSeed); }

Sqrt2Ext chsh(const CorrelationTable& c) {
  std::optional<Sqrt2Ext> best;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;  // odd number of minus signs
    Sqrt2Ext sum(0);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        unsigned bit = static_cast<unsigned>(i * 2 + j);
        sum = (mask >> bit) & 1u ? sum - c.e[i][j] : sum + c.e[i][j];
      }
    }
    if (!best || sum > *best) best = sum;
  }
  return *best;
}

bool is_local(const CorrelationTable& c) { return chsh(c) <= Sqrt2Ext(2); }

ScanResult local_deterministic_scan() {
  ScanResult r;
  r.max_chsh = Sqrt2Ext(Rational(-100));
  for (unsigned mask = 0; mask < 16; ++mask) {
    LocalDeterministicModel m;
    m.carol = {(mask & 1u) ? 1 : -1, (mask & 2u) ? 1 : -1};
    m.david = {(mask & 4u) ? 1 : -1, (mask & 8u) ? 1 : -1};
    Sqrt2Ext s = chsh(m.table());
    if (s > r.max_chsh) {
      r.max_chsh = s;
      r.argmax.clear();
    }
    if (s == r.max_chsh) r.argmax.push_back(m);
  }
  return r;
}

CorrelationTable empirical_correlations(const std::vector<MeasurementRun>& runs) {
  Rational sum[2][2];
  long count[2][2] = {{0, 0}, {0, 0}};
  for (const auto& run : runs) {
    if (run.alice_setting < 0 || run.alice_setting > 1 || run.bob_setting < 0 ||
        run.bob_setting > 1)
      throw Error(ErrorCode::Validation, "setting must be 0 or 1");
    if ((run.carol_output != -1 && run.carol_output != 1) ||
        (run.david_output != -1 && run.david_output != 1))
      throw Error(ErrorCode::Validation, "output must be -1 or +1");
    sum[run.alice_setting][run.bob_setting] += run.carol_output * run.david_output;
    ++count[run.alice_setting][run.bob_setting];
  }
  Sqrt2Ext e[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (count[i][j] == 0)
        throw Error(ErrorCode::MissingSettingPair,
                    "no run with settings a" + std::to_string(i + 1) + ", b" +
                        std::to_string(j + 1));
      e[i][j] = Sqrt2Ext(sum[i][j] / count[i][j]);
    }
  }
  return CorrelationTable::make(e[0][0], e[0][1], e[1][0], e[1][1]);
}

}  // namespace stg
