#pragma once

#include "stg/nash.hpp"
#include "stg/transparent.hpp"

#include <tuple>
#include <variant>

namespace stg {

// Counterfactual semantics over a set of candidate histories. A multihistory
// fixes the universe Omega (each history a valid outcome of the underlying
// game), the parameters (the game's decision points) and a closest-history
// selector f: (history, parameter, action) -> history answering "had n been a,
// which history would have happened?".
//
// Centering holds for every selector: intervening with a parameter's actual
// value returns the actual history. The selectors differ only on
// counter-to-fact interventions.

// Lookup table, total over Omega x parameters x actions, keyed by canonical
// outcome key. Validated at construction: totality, centering, results inside
// Omega, and the intervened parameter carrying the intervened value wherever
// the result assigns it at all.
struct ExplicitTable {
  std::map<std::tuple<std::string, std::string, std::string>, std::string> map;
};

// Unilateral deviation: overlay the history's own assigned actions on the
// reference profile (the reference fills only unassigned parameters), replace
// the action at the intervened parameter, play the result.
struct NashDeviation {
  StrategyProfile profile;
};

// Re-solve with the intervention hardwired: pte of the game with the
// parameter's action set shrunk to {a}. The result may route around the
// parameter entirely (it can come back unassigned), and the past is allowed
// to differ -- that is the point.
struct TransparentResolve {};

using ClosestHistorySelector = std::variant<ExplicitTable, NashDeviation, TransparentResolve>;

class Multihistory {
 public:
  // Validates: histories nonempty, distinct, members of Z; selector-specific
  // obligations (see ExplicitTable / NashDeviation above).
  Multihistory(SpacetimeGame game, std::vector<Outcome> histories,
               ClosestHistorySelector selector);

  const SpacetimeGame& game() const { return game_; }
  const std::vector<Outcome>& histories() const { return histories_; }
  const ClosestHistorySelector& selector() const { return selector_; }

  bool contains(const Outcome& w) const;

 private:
  SpacetimeGame game_;
  std::vector<Outcome> histories_;
  ClosestHistorySelector selector_;
};

// f_{n=a}(w). w must belong to Omega and a to the parameter's action set.
// Centering short-circuit first; otherwise the selector decides. Throws
// NoEquilibrium if a TransparentResolve constrained solve comes back empty,
// NonGeneric if it hits a payoff tie.
Outcome closest_history(const Multihistory& m, const Outcome& w,
                        const std::string& n, const std::string& a);

// "n = a counterfactually implies k = b at w": in the closest history where
// n is a, parameter k has value b (b = nullopt means unassigned).
bool counterfactually_implies(const Multihistory& m, const Outcome& w,
                              const std::string& n, const std::string& a,
                              const std::string& k,
                              const std::optional<std::string>& b);

// Parameter n is counterfactually independent from k iff no intervention on k
// can change n's value at any history where both are assigned. A parameter
// that comes back unassigned counts as changed.
bool counterfactually_independent(const Multihistory& m, const std::string& n,
                                  const std::string& k);

// Strict causal precedence of b before a (light cones when every point is
// positioned, the edge DAG otherwise). A parameter never causally depends on
// itself.
bool causally_dependent(const SpacetimeGame& g, const std::string& a,
                        const std::string& b);

// Witness for a failed free-choice check: intervening on the tested parameter
// with `action` at history `at` moved parameter `parameter`.
struct FreeChoiceViolation {
  std::string parameter;
  Outcome at;
  std::string action;
};

// Nashian free choice at n: every other parameter outside n's strict causal
// future is counterfactually independent from n.
bool nashian_free_choice(const Multihistory& m, const std::string& n,
                         std::optional<FreeChoiceViolation>* witness = nullptr);

// Every action of every live parameter is realized somewhere in Omega.
bool full_support(const Multihistory& m);

// How much of the game a resolution pins down. Nashian resolutions always
// assign every information set (Complete); transparent resolutions assign
// exactly the points active in the equilibrium history (Partial, fraction =
// assigned / live points, which can be 1).
struct Complete {};
struct Partial {
  std::size_t assigned = 0;
  std::size_t total = 0;
  Rational fraction() const {
    return total == 0 ? Rational(1) : Rational(assigned) / Rational(total);
  }
};
using ContextualityClass = std::variant<Complete, Partial>;

ContextualityClass contextuality_class(const SpacetimeGame& g, const NashResolution& r);
// Requires a resolution that produced an outcome; throws Domain otherwise.
ContextualityClass contextuality_class(const SpacetimeGame& g, const TransparentResolution& r);

}  // namespace stg
