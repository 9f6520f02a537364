#pragma once

#include <stdexcept>
#include <string>

namespace vff {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg = "denominator vanishes at evaluation point") : Error(msg) {}
};

struct InvalidIndex : Error {
    explicit InvalidIndex(const std::string& msg = "invalid Kac index") : Error(msg) {}
};

struct EmptyPartition : Error {
    explicit EmptyPartition(const std::string& msg = "operation requires a non-empty partition") : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg = "column index out of range") : Error(msg) {}
};

struct LevelMismatch : Error {
    explicit LevelMismatch(const std::string& msg = "partitions have different levels") : Error(msg) {}
};

struct EmptyType : Error {
    explicit EmptyType(const std::string& msg = "integral type has no singular columns") : Error(msg) {}
};

struct FactorizationMismatch : Error {
    explicit FactorizationMismatch(const std::string& msg = "determinant ratio depends on alpha") : Error(msg) {}
};

struct SingularDualMatrix : Error {
    explicit SingularDualMatrix(const std::string& msg = "dual descendant matrix is singular") : Error(msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg = "linear system has no non-trivial solution") : Error(msg) {}
};

struct NonUniqueSolution : Error {
    explicit NonUniqueSolution(const std::string& msg = "solution space has dimension > 1") : Error(msg) {}
};

struct InvalidGamma : Error {
    explicit InvalidGamma(const std::string& msg = "gamma must lie in (0,2)") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg = "malformed input") : Error(msg) {}
};

} // namespace vff
