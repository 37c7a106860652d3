#pragma once

#include <stdexcept>
#include <string>

namespace prodlog {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Argument sits on (or numerically at) a pole of Gamma.
class PoleError : public Error {
public:
    using Error::Error;
};

// Evaluation would lose essentially all significant digits.
class IllConditionedError : public Error {
public:
    using Error::Error;
};

// Physically meaningful input that the library deliberately does not handle,
// e.g. reflection below the barrier top.
class UnsupportedRegimeError : public Error {
public:
    using Error::Error;
};

// The oracle could not separate incident and reflected waves.
class MatchingError : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_domain(const std::string& what);

}  // namespace prodlog
