#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagrel {

enum class ErrorKind {
    DivisionByZero,
    DimensionMismatch,
    BackendMismatch,
    NotSymmetric,
    SingularMatrix,
    EmptyRelation,
    NotAState,
    NotLagrangian,
    InternalDisagreement,
    NotOnCircle,
    NotAQuantumCovariance,
    NotSymplectic,
    NotPositive,
    NotQuasiReal,
    UnknownKind,
    IllFormedDiagram,
    SideConditionViolated,
    NotInFragment,
    NotPositiveDefinite,
    UnknownGenerator,
    NegativeEpsilon,
    ZeroSqueeze,
    ParseError,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace lagrel
