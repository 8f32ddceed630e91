#pragma once

#include <stdexcept>
#include <string>

namespace bcfrac {

/// Input outside the mathematical domain of an operation (orders, segments,
/// non-hyperbolic operands, evaluation at a singular endpoint).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computation produced a non-finite value.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kernel evaluated at coincident points.
class SingularityError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Series evaluated outside its disk of convergence.
class DivergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Linear system for weights or transforms is singular.
class DegeneracyError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Evaluation point too close to an integration boundary for the chosen grid.
class IllConditionedError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bcfrac
