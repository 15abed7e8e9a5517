#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace stg {

// All payoffs, positions and derived quantities are exact rationals. No floating
// point is used anywhere in the engine, so equality and ordering are decidable
// and every run is bit-reproducible.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical text form: "p/q" with q > 0 and gcd(p,q) = 1, integers without "/1".
// cpp_rational keeps that normal form internally, so this is just a format call.
std::string to_string(const Rational& r);

// Accepts "p", "p/q" (any sign placement, q != 0) and plain decimals like "0.25".
// Returns nullopt on malformed input. Non-canonical input ("6/4", "1/-2") is fine;
// the value normalizes on construction.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace stg
