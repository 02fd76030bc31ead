#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

/// Failure categories surfaced by the library. The CLI maps these to exit 3.
enum class ErrorKind {
    DomainError,        // argument outside the documented domain
    InvalidParams,      // parameter set violates a documented constraint
    SingularMatrix,
    NonConvex,
    DuplicateVertex,
    CollinearAll,
    AffinelyDependent,
    UnsupportedKind,
    NotFullDimensional,
    NotDimensionTwo,
    NegativeDilation,
    NonpositiveDilation,
    DegeneratePolytope,
    DimensionTooLarge,
    ValidationFailed,
    AtBreakpoint,
    FreeIndex,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ehrhart
