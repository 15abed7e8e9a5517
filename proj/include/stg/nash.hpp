#pragma once

#include "stg/convert.hpp"

#include <optional>

namespace stg {

// Classical (Nashian) solution concepts. A resolution is a complete masterplan
// -- an action for every information set -- together with the history it
// induces; the induced outcome stays partial, the profile never does.

struct NashResolution {
  StrategyProfile profile;
  Outcome outcome;
  Payoff payoff;

  bool operator==(const NashResolution& o) const {
    return profile == o.profile && outcome == o.outcome && payoff == o.payoff;
  }
};

struct Deviation {
  std::string player;
  std::size_t player_index = 0;
  std::vector<int> strategy;  // improving strategy, action index per set
  Rational payoff_before, payoff_after;
};

// True iff no player has a strictly improving unilateral deviation. On false
// the witness carries one improving deviation (the first in enumeration
// order). Equal-payoff deviations do not count.
bool is_nash(const StrategicGame& sg, std::size_t profile_index,
             std::optional<Deviation>* witness = nullptr);

// All pure Nash profiles in ascending profile-index (lexicographic) order.
// May be empty; that is a result, not an error.
std::vector<std::size_t> pure_nash(const StrategicGame& sg);

// pure_nash lifted back to the spacetime game: every equilibrium profile
// paired with its induced outcome and payoff.
std::vector<NashResolution> nash_resolutions(const SpacetimeGame& g);

// Backward induction. Requires perfect information (every information set a
// single tree node) and generic payoffs along compared branches; throws
// ImperfectInformation / NonGeneric otherwise. The profile fixes an action at
// every information set, including unreached ones.
NashResolution spe(const ExtensiveGame& eg);

}  // namespace stg
