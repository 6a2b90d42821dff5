#pragma once

#include <stdexcept>
#include <string>

namespace ordkit {

// Base of everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated precondition / invariant (bad angles, bad injections, ...).
struct ContractViolation : Error {
    using Error::Error;
};

struct DivisionByZero : ContractViolation {
    explicit DivisionByZero(const std::string& msg = "division by a symbolically zero value")
        : ContractViolation(msg) {}
};

// Field operation attempted on linear-mode symbols.
struct ModeViolation : ContractViolation {
    using ContractViolation::ContractViolation;
};

// Refinement cap hit, or a digit-stream binding ran out of digits.  Usually
// signals that the bindings violate the declared independence contract.
struct RefinementBudgetExceeded : Error {
    using Error::Error;
};

struct DimensionMismatch : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct UnitNotPositive : ContractViolation {
    explicit UnitNotPositive(const std::string& msg = "designated unit is not strictly positive")
        : ContractViolation(msg) {}
};

struct NotAMember : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct PoleAtInput : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct RationalAlpha : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct UnknownSymbol : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct ExponentGroupMismatch : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct ZeroSeries : ContractViolation {
    explicit ZeroSeries(const std::string& msg = "valuation of the zero series")
        : ContractViolation(msg) {}
};

struct InvalidInjection : ContractViolation {
    using ContractViolation::ContractViolation;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace ordkit
