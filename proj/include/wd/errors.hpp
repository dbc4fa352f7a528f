#pragma once

#include <stdexcept>
#include <string>

namespace wd {

// Base class for everything this library throws on purpose. The CLI maps
// subtypes onto exit codes, so new error conditions should subclass one of
// the two families below rather than throwing std::runtime_error directly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Contract violations: the input data does not satisfy the operation's
// precondition or a type invariant. CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Numeric failures discovered mid-computation. CLI exit code 3.
class ComputationError : public Error {
public:
    using Error::Error;
};

// A 64-bit index had to be materialized and cannot be represented
// (n^{c0} shift, integer image of an exponent vector, A*(alpha) component).
class IndexOverflow : public ComputationError {
public:
    using ComputationError::ComputationError;
};

// exp_neg_log was handed a series with an index-1 term; the constant part
// of a symbol is handled by the caller, never by the exponential.
class ConstantTermPresent : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A CompositionSymbol with c0 = 0 and empty tail is constant and composes
// nothing; such symbols are rejected at construction.
class ConstantSymbol : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// kronecker_inf requires the tail support to be multiplicatively independent.
class NotIndependent : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// lower_bound requires cr <= 4*cr2 (the maximizing point must land on [-1,1]).
class NotApplicable : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// ordinary_point_test requires |psi| to attain 1 on the unit circle.
class MaxNotOnCircle : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Torus operands with different variable counts.
class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// newman_boundedness_probe (and GeneralSymbol construction) require the
// symbol to map into the closed polydisk.
class SupNormExceedsOne : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// hermite() in plain double overflowed; callers should switch to the
// scaled representation.
class HermiteOverflow : public ComputationError {
public:
    using ComputationError::ComputationError;
};

} // namespace wd
