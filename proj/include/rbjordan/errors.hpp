#pragma once

#include <stdexcept>
#include <string>

namespace rbjordan {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct MixedFields : Error {
    explicit MixedFields(const std::string& what = "operands belong to different fields") : Error(what) {}
};

struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& what) : Error(what) {}
};

struct MissingRoots : Error {
    explicit MissingRoots(const std::string& what) : Error(what) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Thrown when an enumeration would exceed the configured work budget.
/// Carries the partial census gathered so far; it certifies nothing.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

} // namespace rbjordan
