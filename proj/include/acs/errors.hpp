#pragma once

#include <stdexcept>
#include <string>

namespace acs {

struct DivByZero : std::domain_error {
    DivByZero() : std::domain_error("division by zero scalar") {}
};

/// Operands live over exterior algebras of different dimension m.
struct DimMismatch : std::invalid_argument {
    explicit DimMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// The formal calculus carries first derivatives only; differentiating a
/// derivative symbol again is outside the model.
struct SecondDerivative : std::domain_error {
    explicit SecondDerivative(const std::string& what) : std::domain_error(what) {}
};

/// d phi^q != 0 for a base index q of a claimed splitting.
struct NotSplitting : std::invalid_argument {
    int index;
    explicit NotSplitting(int q)
        : std::invalid_argument("d phi^" + std::to_string(q) +
                                " != 0: index inside the claimed base range"),
          index(q) {}
};

/// A construction was requested for an algebra that violates one of its
/// hypotheses (names the failed hypothesis).
struct HypothesisViolated : std::invalid_argument {
    explicit HypothesisViolated(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations of the same quantity disagreed, or an
/// internal shape assumption failed.  Never expected to fire; mapped to
/// exit code 2 by the CLI.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// Syntax or validation error in DSL input, with source location.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_), column(column_) {}
};

} // namespace acs
