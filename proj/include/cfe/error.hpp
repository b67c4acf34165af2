#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfe {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A named precondition of an operation does not hold (e.g. "not_bipartite").
class PreconditionError : public InputError {
public:
    PreconditionError(std::string code, const std::string& message)
        : InputError(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// The exact solvers refuse instances above their size guard.
class InstanceTooLarge : public InputError {
public:
    using InputError::InputError;
};

/// An algorithm could not complete (retry budget, infeasible random event, ...).
/// The CLI maps these to exit code 3.
class AlgorithmFailure : public Error {
public:
    AlgorithmFailure(std::string phase, const std::string& message)
        : Error(phase + ": " + message), phase_(std::move(phase)) {}

    const std::string& phase() const noexcept { return phase_; }

private:
    std::string phase_;
};

}  // namespace cfe
