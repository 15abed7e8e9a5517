#pragma once

#include "stg/bell.hpp"
#include "stg/counterfactuals.hpp"
#include "stg/io.hpp"
#include "stg/nash.hpp"
#include "stg/transparent.hpp"

namespace stg {

// Plain-text renderings used by the C API / CLI. All output is deterministic:
// maps iterate in key order, lists keep their defining order, numbers print in
// canonical rational form.

std::string render_validation(const ValidationReport& report);
std::string render_outcomes(const SpacetimeGame& g);
std::string render_extensive(const ExtensiveGame& eg);
std::string render_strategic(const StrategicGame& sg);
std::string render_payoff(const Payoff& p);
std::string render_nash(const std::vector<NashResolution>& rs);
std::string render_spe(const NashResolution& r);
std::string render_transparent(const TransparentResolution& r, bool with_trace);
std::string render_contextuality(const SpacetimeGame& g);
std::string render_free_choice(const Multihistory& m, const std::string& point);

}  // namespace stg
