#pragma once

#include <stdexcept>
#include <string>

namespace trajkit {

// Invalid argument values (bad sizes, negative tolerances, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Incompatible matrix/signal dimensions.
class DimensionError : public ArgumentError {
public:
    explicit DimensionError(const std::string& what) : ArgumentError(what) {}
};

// Malformed trajectory file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Observability stack is rank deficient; the initial state is not identifiable.
class ObservabilityError : public std::runtime_error {
public:
    explicit ObservabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Junction constraints of a weave are violated; carries the worst junction residual.
class WeaveError : public std::runtime_error {
public:
    WeaveError(const std::string& what, double worst_residual)
        : std::runtime_error(what), worst_residual_(worst_residual) {}

    double worst_residual() const { return worst_residual_; }

private:
    double worst_residual_;
};

// Predicted output cannot be mapped back from lifted coordinates.
class RecoveryError : public std::runtime_error {
public:
    explicit RecoveryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trajkit
