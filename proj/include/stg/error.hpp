#pragma once

#include <stdexcept>
#include <string>

namespace stg {

enum class ErrorCode {
  Parse,                 // malformed document text
  Validation,            // structurally invalid game
  UnknownPoint,          // id does not name a decision point
  UnknownOutcome,        // outcome is not in the game's outcome set
  DuplicatePosition,     // two points share a spacetime position
  BadOrder,              // supplied order is not a linear extension
  ImperfectInformation,  // operation needs singleton information sets
  NonGeneric,            // payoff tie where generic position is required
  NoEquilibrium,         // constrained transparent solve came back empty
  MissingSettingPair,    // empirical runs missing a measurement-setting pair
  Domain,                // any other precondition violation
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stg
