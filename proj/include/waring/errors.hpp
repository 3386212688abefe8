// errors.hpp
// Exception hierarchy shared by the whole library. The command line tool
// maps these onto process exit codes: argument/format problems exit 2,
// resource and I/O problems exit 3, an infeasible search exits 1.

#pragma once

#include <stdexcept>
#include <string>

namespace waring {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument or violated precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// A parameter combination that makes a formula denominator vanish.
class SingularParamError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// Malformed serialized input: bad magic, version, truncation, stray bits.
class FormatError : public Error {
public:
    using Error::Error;
};

// Fixture or schedule rows that are not contiguous / not grouped as required.
class FixtureError : public Error {
public:
    using Error::Error;
};

// An allocation or run that would exceed the configured memory cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A sink that cannot be written.
class IoError : public Error {
public:
    using Error::Error;
};

// A parameter search whose feasible set is empty.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

} // namespace waring
