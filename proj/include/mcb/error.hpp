#ifndef MCB_ERROR_HPP_
#define MCB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcb {

/// Conformance failure between operands (lengths, matrix shapes).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by invert() on a singular matrix.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No tight cycle has odd inner product with the requested support vector.
class InfeasibleSupport : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Weight sums that do not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An internal invariant was found broken. This is always a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input file. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The oracle refuses instances beyond its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mcb

#endif // MCB_ERROR_HPP_
