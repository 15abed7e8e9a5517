#pragma once

#include "stg/game.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace stg {

// Two-wing measurement laboratory. Alice and Bob pick settings at spacelike
// separation; Carol sits in Alice's future and produces an outcome in {-1,+1}
// under either setting, David likewise in Bob's future. One decision point per
// input-output parameter and per relevant contingency: C_alpha fires when
// A=a1, C_beta when A=a2, D_alpha when B=b1, D_beta when B=b2.

// Values of the form a + b*sqrt(2), closed under +,-,* and exactly ordered.
// CHSH scores of quantum-shaped tables live here; comparisons against
// rationals reduce to an exact squared comparison, no floats involved.
struct Sqrt2Ext {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(2)

  Sqrt2Ext() = default;
  Sqrt2Ext(Rational ra) : a(std::move(ra)) {}  // NOLINT: implicit by design
  Sqrt2Ext(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool rational() const { return b == 0; }

  Sqrt2Ext operator+(const Sqrt2Ext& o) const { return {a + o.a, b + o.b}; }
  Sqrt2Ext operator-(const Sqrt2Ext& o) const { return {a - o.a, b - o.b}; }
  Sqrt2Ext operator-() const { return {-a, -b}; }
  Sqrt2Ext operator*(const Sqrt2Ext& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
  }

  // -1 / 0 / +1, decided exactly (sqrt(2) is irrational, so representation is
  // unique and the mixed-sign case reduces to comparing a^2 with 2 b^2).
  int sign() const;

  bool operator==(const Sqrt2Ext& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Sqrt2Ext& o) const { return !(*this == o); }
  bool operator<(const Sqrt2Ext& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Sqrt2Ext& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Sqrt2Ext& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Sqrt2Ext& o) const { return (*this - o).sign() >= 0; }
};

std::string to_string(const Sqrt2Ext& v);

// Accepts what parse_rational accepts plus the tokens "rt2/2" and "-rt2/2"
// (the quantum correlation value +-sqrt(2)/2).
std::optional<Sqrt2Ext> parse_correlation(const std::string& text);

// E[product of the two outputs | settings], indexed [alice setting][bob
// setting], each entry in [-1, 1]. Construction validates the bound.
struct CorrelationTable {
  std::array<std::array<Sqrt2Ext, 2>, 2> e;

  static CorrelationTable make(const Sqrt2Ext& e11, const Sqrt2Ext& e12,
                               const Sqrt2Ext& e21, const Sqrt2Ext& e22);
};

// Deterministic local assignment: an output per wing and setting.
struct LocalDeterministicModel {
  std::array<int, 2> carol;  // output for A=a1 / A=a2, each -1 or +1
  std::array<int, 2> david;  // output for B=b1 / B=b2

  CorrelationTable table() const;
};

// The canonical six-point laboratory. Payoffs: independent per-player uniform
// permutations of 1..16 drawn from `seed` (default pinned so the fixture file
// is stable); pass explicit payoffs to override.
inline constexpr std::uint64_t kBellDefaultSeed = 2;
SpacetimeGame build_bell_game();
SpacetimeGame build_bell_game(std::uint64_t seed);
SpacetimeGame build_bell_game(const std::map<std::string, Payoff>& payoffs);

// Largest CHSH combination: max over the eight sign patterns (odd number of
// minus signs) of +-E11 +-E12 +-E21 +-E22.
Sqrt2Ext chsh(const CorrelationTable& c);

// Membership in the local correlation polytope. For two settings and binary
// outcomes the CHSH inequalities are facet-complete, so this is exact:
// local iff chsh(c) <= 2.
bool is_local(const CorrelationTable& c);

struct ScanResult {
  Sqrt2Ext max_chsh;
  std::vector<LocalDeterministicModel> argmax;  // models attaining the max
};

// All 16 deterministic models. The max is exactly 2 -- the classical bound.
ScanResult local_deterministic_scan();

// One joint measurement: chosen settings (0/1 per wing) and observed outputs.
struct MeasurementRun {
  int alice_setting;  // 0 = a1, 1 = a2
  int bob_setting;    // 0 = b1, 1 = b2
  int carol_output;   // -1 or +1
  int david_output;   // -1 or +1
};

// Exact per-setting-pair means of the output products. Throws
// MissingSettingPair when some pair never occurs.
CorrelationTable empirical_correlations(const std::vector<MeasurementRun>& runs);

}  // namespace stg
