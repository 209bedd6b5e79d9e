#pragma once

#include <stdexcept>
#include <string>

namespace cpavg {

// Error taxonomy shared across the library.  Each type corresponds to a
// distinct caller mistake; the CLI maps some of them to exit codes.

struct VariableCountMismatch : std::invalid_argument {
    explicit VariableCountMismatch(const std::string& what)
        : std::invalid_argument("variable count mismatch: " + what) {}
};

struct ZeroAtNegativeExponent : std::domain_error {
    explicit ZeroAtNegativeExponent(const std::string& what)
        : std::domain_error("evaluation at zero with negative exponent: " + what) {}
};

struct NonSquare : std::invalid_argument {
    explicit NonSquare(const std::string& what)
        : std::invalid_argument("matrix not square: " + what) {}
};

struct BadRowSet : std::invalid_argument {
    explicit BadRowSet(const std::string& what)
        : std::invalid_argument("bad row set: " + what) {}
};

struct DoesNotFitBox : std::invalid_argument {
    explicit DoesNotFitBox(const std::string& what)
        : std::invalid_argument("partition does not fit box: " + what) {}
};

struct NotSymmetric : std::invalid_argument {
    explicit NotSymmetric(const std::string& what)
        : std::invalid_argument("polynomial not symmetric: " + what) {}
};

struct RepeatedPoint : std::domain_error {
    explicit RepeatedPoint(const std::string& what)
        : std::domain_error("repeated evaluation point: " + what) {}
};

struct SingularPoint : std::domain_error {
    explicit SingularPoint(const std::string& what)
        : std::domain_error("character denominator vanishes: " + what) {}
};

struct LabelTooLong : std::invalid_argument {
    explicit LabelTooLong(const std::string& what)
        : std::invalid_argument("label longer than group rank: " + what) {}
};

struct SingularParameters : std::domain_error {
    explicit SingularParameters(const std::string& what)
        : std::domain_error("singular parameters: " + what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what)
        : std::invalid_argument("precondition violated: " + what) {}
};

struct UnsupportedGroup : std::invalid_argument {
    explicit UnsupportedGroup(const std::string& what)
        : std::invalid_argument("unsupported group: " + what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what)
        : std::invalid_argument("instance too large: " + what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what)
        : std::invalid_argument("parse error: " + what) {}
};

} // namespace cpavg
