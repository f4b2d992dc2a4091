#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a length is requested for an element that lies beyond the
/// metric table and no closed-form length covers it.
struct OutOfHorizon : Error {
    OutOfHorizon(const std::string& what, int suggested)
        : Error(what + " (try --horizon " + std::to_string(suggested) + ")"),
          suggested_horizon(suggested) {}
    int suggested_horizon;
};

struct BudgetExceeded : Error {
    BudgetExceeded(std::size_t budget, int radius)
        : Error("element budget " + std::to_string(budget) + " exceeded while building layer " +
                std::to_string(radius) + "; lower the horizon or raise --budget"),
          radius(radius) {}
    int radius;
};

struct IdentityElement : Error {
    IdentityElement() : Error("operation is undefined for the identity element") {}
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& token, const std::string& rule)
        : Error("cannot parse '" + token + "' (expected " + rule + ")"), token(token), rule(rule) {}
    std::string token;
    std::string rule;
};

}  // namespace curvlab
